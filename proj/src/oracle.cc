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

#include "blotto/oracle.h"

#include <algorithm>
#include <sstream>
#include <string>

#include "blotto/errors.h"

namespace blotto::oracle {
namespace {

template <class Scalar, bool kParallel>
MatrixGame<Scalar> BuildMatrixImpl(const CostBlottoGame& game, PayoffVariant variant,
                                   std::size_t cap) {
  MatrixGame<Scalar> mg;
  mg.row_strategies = EnumerateStrategies(game.budget_a(), game.n(), false, cap);
  mg.col_strategies = EnumerateStrategies(game.budget_b(), game.n(), false, cap);
  const int rows = mg.rows();
  const int cols = mg.cols();
  mg.payoff.assign(rows, std::vector<Scalar>(cols));
  mg.payoff_b.assign(rows, std::vector<Scalar>(cols));
#pragma omp parallel for schedule(dynamic, 8) if (kParallel)
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const PureStrategy& sa = mg.row_strategies[r];
      const PureStrategy& sb = mg.col_strategies[c];
      if (variant == PayoffVariant::kZero) {
        mg.payoff[r][c] = PayoffZero<Scalar>(game, sa, sb);
        mg.payoff_b[r][c] = -mg.payoff[r][c];
      } else {
        auto [pa, pb] = PayoffCosts<Scalar>(game, sa, sb);
        mg.payoff[r][c] = std::move(pa);
        mg.payoff_b[r][c] = std::move(pb);
      }
    }
  }
  return mg;
}

// Primal simplex for  max 1'y  s.t.  M y <= 1, y >= 0  with M > 0. The slack
// basis is feasible, so no phase one is needed. Dantzig pricing with a switch
// to Bland's rule during degenerate runs.
template <class Scalar>
class PositiveGameSimplex {
 public:
  explicit PositiveGameSimplex(const std::vector<std::vector<Scalar>>& m)
      : rows_(static_cast<int>(m.size())),
        cols_(static_cast<int>(m.front().size())),
        width_(cols_ + rows_ + 1),
        tableau_(static_cast<std::size_t>(rows_ + 1) * width_, Scalar(0)),
        basis_(rows_) {
    tol_ = kIsExact<Scalar> ? Scalar(0) : Scalar(1e-11);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) T(r, c) = m[r][c];
      T(r, cols_ + r) = Scalar(1);
      T(r, width_ - 1) = Scalar(1);
      basis_[r] = cols_ + r;
    }
    for (int c = 0; c < cols_; ++c) T(rows_, c) = Scalar(-1);
  }

  // Returns false on iteration overflow.
  bool Run() {
    const int max_iterations = 50 * (rows_ + cols_) + 1000;
    int degenerate = 0;
    for (; iterations_ < max_iterations; ++iterations_) {
      const bool bland = degenerate > 50;
      int enter = -1;
      for (int j = 0; j < width_ - 1; ++j) {
        if (!(T(rows_, j) < -tol_)) continue;
        if (enter < 0 || (!bland && T(rows_, j) < T(rows_, enter))) enter = j;
        if (bland) break;
      }
      if (enter < 0) return true;
      int leave = -1;
      Scalar best(0);
      for (int r = 0; r < rows_; ++r) {
        if (!(T(r, enter) > tol_)) continue;
        Scalar ratio = T(r, width_ - 1) / T(r, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;  // cannot happen for a positive matrix
      degenerate = best > tol_ ? 0 : degenerate + 1;
      Pivot(leave, enter);
    }
    return false;
  }

  // Primal y (column mixture up to scale).
  std::vector<Scalar> Primal() const {
    std::vector<Scalar> y(cols_, Scalar(0));
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < cols_) y[basis_[r]] = std::max(Scalar(0), T(r, width_ - 1));
    }
    return y;
  }

  // Dual x (row mixture up to scale), read from the slack reduced costs.
  std::vector<Scalar> Dual() const {
    std::vector<Scalar> x(rows_);
    for (int r = 0; r < rows_; ++r) x[r] = std::max(Scalar(0), T(rows_, cols_ + r));
    return x;
  }

  int iterations() const { return iterations_; }

 private:
  Scalar& T(int r, int j) { return tableau_[static_cast<std::size_t>(r) * width_ + j]; }
  const Scalar& T(int r, int j) const {
    return tableau_[static_cast<std::size_t>(r) * width_ + j];
  }

  void Pivot(int row, int col) {
    const Scalar inv = Scalar(1) / T(row, col);
    for (int j = 0; j < width_; ++j) T(row, j) *= inv;
    T(row, col) = Scalar(1);
    for (int r = 0; r <= rows_; ++r) {
      if (r == row) continue;
      const Scalar factor = T(r, col);
      if (factor == Scalar(0)) continue;
      for (int j = 0; j < width_; ++j) {
        if (T(row, j) != Scalar(0)) T(r, j) -= factor * T(row, j);
      }
      T(r, col) = Scalar(0);
    }
    basis_[row] = col;
  }

  int rows_;
  int cols_;
  int width_;
  std::vector<Scalar> tableau_;
  std::vector<int> basis_;
  Scalar tol_;
  int iterations_ = 0;
};

template <class Scalar>
void Normalize(std::vector<Scalar>& p) {
  Scalar total(0);
  for (const Scalar& x : p) total += x;
  for (Scalar& x : p) x /= total;
}

}  // namespace

template <class Scalar>
MatrixGame<Scalar> BuildMatrix(const CostBlottoGame& game, PayoffVariant variant,
                               std::size_t cap) {
  return BuildMatrixImpl<Scalar, true>(game, variant, cap);
}

template <class Scalar>
MatrixGame<Scalar> BuildMatrixSerial(const CostBlottoGame& game, PayoffVariant variant,
                                     std::size_t cap) {
  return BuildMatrixImpl<Scalar, false>(game, variant, cap);
}

template <class Scalar>
MatrixSolution<Scalar> SolveMatrixGame(const std::vector<std::vector<Scalar>>& payoff) {
  if (payoff.empty() || payoff.front().empty()) {
    throw PreconditionError("matrix game must be non-empty");
  }
  const std::size_t cols = payoff.front().size();
  Scalar low = payoff[0][0];
  for (const auto& row : payoff) {
    if (row.size() != cols) throw PreconditionError("matrix game rows differ in length");
    for (const Scalar& x : row) low = std::min(low, x);
  }
  // Shift so every entry is at least 1; the shifted value is then positive.
  const Scalar shift = Scalar(1) - low;
  std::vector<std::vector<Scalar>> shifted(payoff);
  for (auto& row : shifted) {
    for (Scalar& x : row) x += shift;
  }
  PositiveGameSimplex<Scalar> simplex(shifted);
  if (!simplex.Run()) throw SolverError("matrix game simplex did not converge");
  MatrixSolution<Scalar> out;
  out.col = simplex.Primal();
  out.row = simplex.Dual();
  Scalar total(0);
  for (const Scalar& y : out.col) total += y;
  if (!(total > Scalar(0))) throw SolverError("matrix game simplex returned a zero solution");
  out.value = Scalar(1) / total - shift;
  Normalize(out.col);
  Normalize(out.row);
  out.iterations = simplex.iterations();
  return out;
}

template <class Scalar>
MixedStrategy ToMixed(const std::vector<PureStrategy>& strategies,
                      const std::vector<Scalar>& probabilities) {
  if (strategies.size() != probabilities.size()) {
    throw PreconditionError("strategy and probability counts differ");
  }
  MixedStrategy xi;
  double total = 0.0;
  for (std::size_t k = 0; k < strategies.size(); ++k) {
    const double p = ToDouble(probabilities[k]);
    if (p <= 0.0) continue;
    xi.support.emplace_back(strategies[k], p);
    total += p;
  }
  for (auto& entry : xi.support) entry.second /= total;
  return xi;
}

template <class Scalar>
MatrixGameResult<Scalar> MatrixGameSolve(const CostBlottoGame& game, std::size_t cap) {
  const MatrixGame<Scalar> mg = BuildMatrix<Scalar>(game, PayoffVariant::kZero, cap);
  const MatrixSolution<Scalar> sol = SolveMatrixGame(mg.payoff);
  MatrixGameResult<Scalar> out;
  out.value = sol.value;
  out.row = ToMixed(mg.row_strategies, sol.row);
  out.col = ToMixed(mg.col_strategies, sol.col);
  return out;
}

template <class Scalar>
EquilibriumSets<Scalar> ExhaustiveEquilibriumStrategies(const CostBlottoGame& game,
                                                        const Scalar& eps, std::size_t cap) {
  const MatrixGame<Scalar> mg = BuildMatrix<Scalar>(game, PayoffVariant::kZero, cap);
  EquilibriumSets<Scalar> out;
  out.value = SolveMatrixGame(mg.payoff).value;
  for (int r = 0; r < mg.rows(); ++r) {
    Scalar worst = *std::min_element(mg.payoff[r].begin(), mg.payoff[r].end());
    if (worst >= out.value - eps) out.row_set.push_back(mg.row_strategies[r]);
  }
  for (int c = 0; c < mg.cols(); ++c) {
    Scalar worst = mg.payoff[0][c];
    for (int r = 1; r < mg.rows(); ++r) worst = std::max(worst, mg.payoff[r][c]);
    if (worst <= out.value + eps) out.col_set.push_back(mg.col_strategies[c]);
  }
  return out;
}

#define BLOTTO_ORACLE_INSTANTIATE(S)                                                       \
  template MatrixGame<S> BuildMatrix<S>(const CostBlottoGame&, PayoffVariant, std::size_t); \
  template MatrixGame<S> BuildMatrixSerial<S>(const CostBlottoGame&, PayoffVariant,         \
                                              std::size_t);                                 \
  template MatrixSolution<S> SolveMatrixGame<S>(const std::vector<std::vector<S>>&);        \
  template MixedStrategy ToMixed<S>(const std::vector<PureStrategy>&, const std::vector<S>&); \
  template MatrixGameResult<S> MatrixGameSolve<S>(const CostBlottoGame&, std::size_t);      \
  template EquilibriumSets<S> ExhaustiveEquilibriumStrategies<S>(const CostBlottoGame&,     \
                                                                 const S&, std::size_t);

BLOTTO_ORACLE_INSTANTIATE(double)
BLOTTO_ORACLE_INSTANTIATE(Rational)

#undef BLOTTO_ORACLE_INSTANTIATE

}  // namespace blotto::oracle
