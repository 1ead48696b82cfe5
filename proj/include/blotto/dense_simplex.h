// Copyright 2026 The Blotto Costs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOTTO_DENSE_SIMPLEX_H_
#define BLOTTO_DENSE_SIMPLEX_H_

#include <cmath>
#include <cstddef>
#include <vector>

#include "blotto/lp_model.h"
#include "blotto/numeric.h"

namespace blotto::lp {

// Two-phase primal simplex on a dense tableau for
//   minimize c'x  subject to  A x = b,  x >= 0,  b >= 0.
// Works for double (with tolerances) and for exact Rational (tolerance 0).
// Dantzig pricing, switching to Bland's rule during long degenerate runs.
template <class Scalar>
class TableauSimplex {
 public:
  struct Result {
    LpStatus status = LpStatus::kNumericFailure;
    std::vector<Scalar> x;
    Scalar objective{0};
    int iterations = 0;
  };

  // a is row-major m x n. basis_hint[r] names a column that is the unit vector
  // e_r in a (typically a slack), or -1 if row r needs an artificial.
  TableauSimplex(int m, int n, std::vector<Scalar> a, std::vector<Scalar> b,
                 std::vector<Scalar> c, std::vector<int> basis_hint);

  Result Solve(int max_iterations = 1'000'000);

 private:
  Scalar& T(int r, int j) { return tableau_[static_cast<size_t>(r) * width_ + j]; }
  bool Positive(const Scalar& v) const { return v > tol_; }
  bool Negative(const Scalar& v) const { return v < -tol_; }
  void Pivot(int row, int col);
  // Runs simplex iterations on the objective row m_ over columns < limit.
  LpStatus Iterate(int limit, int max_iterations);
  void LoadObjective(const std::vector<Scalar>& cost);

  int m_;
  int n_;
  int num_art_ = 0;
  int width_;
  std::vector<Scalar> tableau_;  // (m+1) x width, last column is rhs
  std::vector<int> basis_;
  std::vector<bool> dead_row_;
  std::vector<Scalar> cost_;
  Scalar tol_;
  int iterations_ = 0;
};

// Solver backend: converts a general Model to standard form and runs the
// double tableau simplex.
class DenseSimplexSolver : public Solver {
 public:
  std::string Name() const override { return "simplex"; }
  Solution Solve(const Model& model) const override;

  // Tableau entries the conversion of `model` would allocate.
  static std::size_t TableauSize(const Model& model);
};

// ---------------------------------------------------------------------------

template <class Scalar>
TableauSimplex<Scalar>::TableauSimplex(int m, int n, std::vector<Scalar> a,
                                       std::vector<Scalar> b, std::vector<Scalar> c,
                                       std::vector<int> basis_hint)
    : m_(m), n_(n), cost_(std::move(c)) {
  tol_ = kIsExact<Scalar> ? Scalar(0) : Scalar(1e-9);
  for (int r = 0; r < m_; ++r) {
    if (basis_hint[r] < 0) ++num_art_;
  }
  width_ = n_ + num_art_ + 1;
  tableau_.assign(static_cast<size_t>(m_ + 1) * width_, Scalar(0));
  basis_.assign(m_, -1);
  dead_row_.assign(m_, false);
  int art = n_;
  for (int r = 0; r < m_; ++r) {
    for (int j = 0; j < n_; ++j) T(r, j) = a[static_cast<size_t>(r) * n_ + j];
    T(r, width_ - 1) = b[r];
    if (basis_hint[r] >= 0) {
      basis_[r] = basis_hint[r];
    } else {
      T(r, art) = Scalar(1);
      basis_[r] = art++;
    }
  }
}

template <class Scalar>
void TableauSimplex<Scalar>::Pivot(int row, int col) {
  const Scalar inv = Scalar(1) / T(row, col);
  Scalar* prow = &T(row, 0);
  for (int j = 0; j < width_; ++j) prow[j] *= inv;
  prow[col] = Scalar(1);
  for (int r = 0; r <= m_; ++r) {
    if (r == row) continue;
    Scalar* trow = &T(r, 0);
    const Scalar factor = trow[col];
    if (factor == Scalar(0)) continue;
    for (int j = 0; j < width_; ++j) {
      if (prow[j] != Scalar(0)) trow[j] -= factor * prow[j];
    }
    trow[col] = Scalar(0);
  }
  basis_[row] = col;
  ++iterations_;
}

template <class Scalar>
void TableauSimplex<Scalar>::LoadObjective(const std::vector<Scalar>& cost) {
  // Objective row holds reduced costs d_j = c_j - c_B' B^-1 a_j and, in the
  // rhs column, -c_B' B^-1 b.
  Scalar* obj = &T(m_, 0);
  for (int j = 0; j < width_; ++j) obj[j] = j < static_cast<int>(cost.size()) ? cost[j] : Scalar(0);
  for (int r = 0; r < m_; ++r) {
    const int bj = basis_[r];
    const Scalar cb = bj < static_cast<int>(cost.size()) ? cost[bj] : Scalar(0);
    if (cb == Scalar(0)) continue;
    const Scalar* trow = &T(r, 0);
    for (int j = 0; j < width_; ++j) obj[j] -= cb * trow[j];
  }
}

template <class Scalar>
LpStatus TableauSimplex<Scalar>::Iterate(int limit, int max_iterations) {
  int degenerate_run = 0;
  while (iterations_ < max_iterations) {
    const bool bland = degenerate_run > 50;
    int enter = -1;
    Scalar best(0);
    for (int j = 0; j < limit; ++j) {
      const Scalar& d = T(m_, j);
      if (!Negative(d)) continue;
      if (bland) {
        enter = j;
        break;
      }
      if (enter < 0 || d < best) {
        best = d;
        enter = j;
      }
    }
    if (enter < 0) return LpStatus::kOptimal;
    int leave = -1;
    Scalar best_ratio(0);
    for (int r = 0; r < m_; ++r) {
      if (dead_row_[r]) continue;
      const Scalar& arj = T(r, enter);
      if (!Positive(arj)) continue;
      const Scalar ratio = T(r, width_ - 1) / arj;
      bool take = leave < 0 || ratio < best_ratio;
      if (!take && ratio == best_ratio) {
        take = bland ? basis_[r] < basis_[leave]
                     : (kIsExact<Scalar> ? basis_[r] < basis_[leave] : arj > T(leave, enter));
      }
      if (take) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return LpStatus::kUnbounded;
    degenerate_run = (best_ratio == Scalar(0) || !Positive(best_ratio)) ? degenerate_run + 1 : 0;
    Pivot(leave, enter);
    if constexpr (!kIsExact<Scalar>) {
      // Keep basic values nonnegative after roundoff.
      for (int r = 0; r < m_; ++r) {
        Scalar& rhs = T(r, width_ - 1);
        if (rhs < Scalar(0) && rhs > -tol_) rhs = Scalar(0);
      }
    }
  }
  return LpStatus::kNumericFailure;
}

template <class Scalar>
typename TableauSimplex<Scalar>::Result TableauSimplex<Scalar>::Solve(int max_iterations) {
  Result result;
  if (num_art_ > 0) {
    std::vector<Scalar> phase1(width_ - 1, Scalar(0));
    for (int j = n_; j < n_ + num_art_; ++j) phase1[j] = Scalar(1);
    LoadObjective(phase1);
    const LpStatus s = Iterate(n_ + num_art_, max_iterations);
    if (s != LpStatus::kOptimal) {
      result.status = LpStatus::kNumericFailure;
      result.iterations = iterations_;
      return result;
    }
    const Scalar infeasibility = -T(m_, width_ - 1);
    const Scalar feas_tol = kIsExact<Scalar> ? Scalar(0) : Scalar(1e-7);
    if (infeasibility > feas_tol) {
      result.status = LpStatus::kInfeasible;
      result.iterations = iterations_;
      return result;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      int col = -1;
      Scalar best(0);
      for (int j = 0; j < n_; ++j) {
        const Scalar mag = T(r, j) < Scalar(0) ? -T(r, j) : T(r, j);
        if (mag > tol_ && mag > best) {
          best = mag;
          col = j;
        }
      }
      if (col >= 0) {
        Pivot(r, col);
      } else {
        dead_row_[r] = true;  // redundant row
      }
    }
  }
  LoadObjective(cost_);
  const LpStatus s = Iterate(n_, max_iterations);
  result.status = s;
  result.iterations = iterations_;
  if (s != LpStatus::kOptimal) return result;
  result.x.assign(n_, Scalar(0));
  for (int r = 0; r < m_; ++r) {
    if (!dead_row_[r] && basis_[r] < n_) result.x[basis_[r]] = T(r, width_ - 1);
  }
  result.objective = Scalar(0);
  for (int j = 0; j < n_; ++j) result.objective += cost_[j] * result.x[j];
  return result;
}

}  // namespace blotto::lp

#endif  // BLOTTO_DENSE_SIMPLEX_H_
