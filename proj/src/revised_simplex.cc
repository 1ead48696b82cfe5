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

#include "blotto/revised_simplex.h"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace blotto::lp {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

class Engine {
 public:
  Engine(const Model& model, const RevisedSimplexOptions& options);
  Solution Run(const Basis* hint);

 private:
  struct Eta {
    int pos;
    double pivot;
    std::vector<std::pair<int, double>> column;  // entries other than pos
  };

  BasisStatus DefaultStatus(int j) const;
  double NonbasicValue(int j) const;
  bool IsFixed(int j) const { return lo_[j] == up_[j]; }
  void SlackBasis();
  void LoadBasis(const Basis& hint);
  bool Refactor();
  void ComputeBasicValues();
  Vec SolveB(Vec v) const;
  Vec SolveBt(Vec v) const;
  Vec Ftran(int j) const;
  double ColumnDot(int j, const Vec& y) const;
  void PerturbCosts();
  Basis ExportBasis() const;

  const Model& model_;
  RevisedSimplexOptions opt_;
  int m_ = 0;
  int n_ = 0;
  int total_ = 0;
  SpMat a_;
  std::vector<double> lo_, up_, cost_, work_cost_, x_;
  std::vector<double> devex_;  // reference-framework pricing weights
  std::vector<double> reduced_;  // reduced costs of nonbasic columns
  std::vector<BasisStatus> status_;
  std::vector<int> basic_;
  // transpose() is non-const in Eigen.
  mutable Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>> lu_;
  std::vector<Eta> etas_;
};

Engine::Engine(const Model& model, const RevisedSimplexOptions& options)
    : model_(model), opt_(options) {
  m_ = model.num_rows();
  n_ = model.num_variables();
  total_ = n_ + m_;
  const double sign = model.sense() == ObjectiveSense::kMaximize ? -1.0 : 1.0;
  lo_.resize(total_);
  up_.resize(total_);
  cost_.assign(total_, 0.0);
  for (int j = 0; j < n_; ++j) {
    const Variable& v = model.variable(j);
    lo_[j] = v.lower;
    up_[j] = v.upper;
    cost_[j] = sign * v.objective;
  }
  std::vector<Eigen::Triplet<double>> trip;
  for (int i = 0; i < m_; ++i) {
    const Row& row = model.rows()[i];
    for (const auto& [j, a] : row.terms) trip.emplace_back(i, j, a);
    lo_[n_ + i] = row.sense == RowSense::kLessEqual ? -kInfinity : row.rhs;
    up_[n_ + i] = row.sense == RowSense::kGreaterEqual ? kInfinity : row.rhs;
  }
  a_.resize(m_, n_);
  a_.setFromTriplets(trip.begin(), trip.end());
  a_.makeCompressed();
  x_.assign(total_, 0.0);
  status_.assign(total_, BasisStatus::kFree);
  work_cost_ = cost_;
}

BasisStatus Engine::DefaultStatus(int j) const {
  if (std::isfinite(lo_[j])) return BasisStatus::kAtLower;
  if (std::isfinite(up_[j])) return BasisStatus::kAtUpper;
  return BasisStatus::kFree;
}

double Engine::NonbasicValue(int j) const {
  switch (status_[j]) {
    case BasisStatus::kAtLower:
      return lo_[j];
    case BasisStatus::kAtUpper:
      return up_[j];
    default:
      return 0.0;
  }
}

void Engine::SlackBasis() {
  basic_.clear();
  for (int j = 0; j < n_; ++j) status_[j] = DefaultStatus(j);
  for (int i = 0; i < m_; ++i) {
    status_[n_ + i] = BasisStatus::kBasic;
    basic_.push_back(n_ + i);
  }
}

void Engine::LoadBasis(const Basis& hint) {
  for (int j = 0; j < total_; ++j) {
    const bool is_row = j >= n_;
    const int k = is_row ? j - n_ : j;
    const auto& src = is_row ? hint.rows : hint.columns;
    BasisStatus st = k < static_cast<int>(src.size())
                         ? src[k]
                         : (is_row ? BasisStatus::kBasic : DefaultStatus(j));
    if ((st == BasisStatus::kAtLower && !std::isfinite(lo_[j])) ||
        (st == BasisStatus::kAtUpper && !std::isfinite(up_[j])) ||
        (st == BasisStatus::kFree && (std::isfinite(lo_[j]) || std::isfinite(up_[j])))) {
      st = DefaultStatus(j);
    }
    status_[j] = st;
  }
  basic_.clear();
  for (int j = 0; j < total_; ++j) {
    if (status_[j] == BasisStatus::kBasic) basic_.push_back(j);
  }
  if (static_cast<int>(basic_.size()) != m_) SlackBasis();
}

bool Engine::Refactor() {
  std::vector<Eigen::Triplet<double>> trip;
  for (int p = 0; p < m_; ++p) {
    const int j = basic_[p];
    if (j < n_) {
      for (SpMat::InnerIterator it(a_, j); it; ++it) trip.emplace_back(it.row(), p, it.value());
    } else {
      trip.emplace_back(j - n_, p, -1.0);
    }
  }
  SpMat b(m_, m_);
  b.setFromTriplets(trip.begin(), trip.end());
  b.makeCompressed();
  lu_.analyzePattern(b);
  lu_.factorize(b);
  etas_.clear();
  return lu_.info() == Eigen::Success;
}

Vec Engine::SolveB(Vec v) const {
  if (m_ == 0) return v;
  v = lu_.solve(v);
  for (const Eta& eta : etas_) {
    const double vp = v[eta.pos] / eta.pivot;
    v[eta.pos] = vp;
    if (vp == 0.0) continue;
    for (const auto& [i, a] : eta.column) v[i] -= a * vp;
  }
  return v;
}

Vec Engine::SolveBt(Vec v) const {
  if (m_ == 0) return v;
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    double acc = v[it->pos];
    for (const auto& [i, a] : it->column) acc -= a * v[i];
    v[it->pos] = acc / it->pivot;
  }
  return lu_.transpose().solve(v);
}

Vec Engine::Ftran(int j) const {
  Vec col = Vec::Zero(m_);
  if (j < n_) {
    for (SpMat::InnerIterator it(a_, j); it; ++it) col[it.row()] = it.value();
  } else {
    col[j - n_] = -1.0;
  }
  return SolveB(std::move(col));
}

double Engine::ColumnDot(int j, const Vec& y) const {
  if (j >= n_) return -y[j - n_];
  double acc = 0.0;
  for (SpMat::InnerIterator it(a_, j); it; ++it) acc += it.value() * y[it.row()];
  return acc;
}

void Engine::ComputeBasicValues() {
  Vec rhs = Vec::Zero(m_);
  for (int j = 0; j < total_; ++j) {
    if (status_[j] == BasisStatus::kBasic) continue;
    x_[j] = NonbasicValue(j);
    if (x_[j] == 0.0) continue;
    if (j < n_) {
      for (SpMat::InnerIterator it(a_, j); it; ++it) rhs[it.row()] -= it.value() * x_[j];
    } else {
      rhs[j - n_] += x_[j];
    }
  }
  const Vec xb = SolveB(std::move(rhs));
  for (int p = 0; p < m_; ++p) x_[basic_[p]] = xb[p];
}

void Engine::PerturbCosts() {
  std::mt19937 rng(opt_.seed);
  std::uniform_real_distribution<double> unit(0.5, 1.0);
  work_cost_ = cost_;
  for (int j = 0; j < total_; ++j) {
    const double r = unit(rng);
    if (IsFixed(j)) continue;
    const bool has_lo = std::isfinite(lo_[j]);
    const bool has_up = std::isfinite(up_[j]);
    if (!has_lo && !has_up) continue;
    const double shift = opt_.cost_perturbation * (1.0 + std::abs(cost_[j])) * r;
    // Make staying at the current (or the natural) bound slightly preferred.
    const bool at_upper = status_[j] == BasisStatus::kAtUpper || (!has_lo && has_up);
    work_cost_[j] += at_upper ? -shift : shift;
  }
}

Basis Engine::ExportBasis() const {
  Basis b;
  b.columns.assign(status_.begin(), status_.begin() + n_);
  b.rows.assign(status_.begin() + n_, status_.end());
  return b;
}

Solution Engine::Run(const Basis* hint) {
  Solution sol;
  if (hint && !hint->empty()) {
    LoadBasis(*hint);
  } else {
    SlackBasis();
  }
  if (!Refactor()) {
    SlackBasis();
    if (!Refactor()) {
      sol.message = "revised simplex: slack basis factorization failed";
      return sol;
    }
  }
  ComputeBasicValues();
  bool perturbed = opt_.cost_perturbation > 0.0;
  if (perturbed) PerturbCosts();

  const double ptol = opt_.primal_tolerance;
  const double dtol = opt_.dual_tolerance;
  const long max_iterations =
      opt_.max_iterations > 0 ? opt_.max_iterations : 20L * total_ + 10000;
  long iterations = 0;
  bool fresh = true;
  bool was_phase1 = true;
  devex_.assign(total_, 1.0);
  bool duals_valid = false;
  reduced_.assign(total_, 0.0);
  Vec cb(m_);

  for (;;) {
    if (iterations >= max_iterations) {
      sol.message = "revised simplex: iteration limit reached";
      sol.iterations = static_cast<int>(iterations);
      return sol;
    }
    if (static_cast<int>(etas_.size()) >= opt_.refactor_interval) {
      if (!Refactor()) {
        sol.message = "revised simplex: basis became singular";
        return sol;
      }
      ComputeBasicValues();
      fresh = true;
      duals_valid = false;
    }

    bool phase1 = false;
    for (int p = 0; p < m_; ++p) {
      const int j = basic_[p];
      if (x_[j] < lo_[j] - ptol) {
        cb[p] = -1.0;
        phase1 = true;
      } else if (x_[j] > up_[j] + ptol) {
        cb[p] = 1.0;
        phase1 = true;
      } else {
        cb[p] = 0.0;
      }
    }
    if (!phase1) {
      for (int p = 0; p < m_; ++p) cb[p] = work_cost_[basic_[p]];
    }
    if (phase1 != was_phase1) std::fill(devex_.begin(), devex_.end(), 1.0);
    was_phase1 = phase1;
    // Phase one costs change every iteration; phase two reduced costs are
    // updated from the pivot row and recomputed after each refactorization.
    if (phase1 || !duals_valid) {
      const Vec y = SolveBt(cb);
      for (int j = 0; j < total_; ++j) {
        if (status_[j] == BasisStatus::kBasic) continue;
        reduced_[j] = (phase1 ? 0.0 : work_cost_[j]) - ColumnDot(j, y);
      }
      duals_valid = !phase1;
    }

    // Devex pricing: largest d_j^2 / w_j.
    int q = -1;
    double dir = 0.0, best = 0.0;
    for (int j = 0; j < total_; ++j) {
      const BasisStatus st = status_[j];
      if (st == BasisStatus::kBasic || IsFixed(j)) continue;
      const double d = reduced_[j];
      double score = 0.0, move = 0.0;
      if (st == BasisStatus::kAtLower && d < -dtol) {
        score = -d, move = 1.0;
      } else if (st == BasisStatus::kAtUpper && d > dtol) {
        score = d, move = -1.0;
      } else if (st == BasisStatus::kFree && std::abs(d) > dtol) {
        score = std::abs(d), move = d < 0 ? 1.0 : -1.0;
      }
      score = score * score / devex_[j];
      if (score > best) {
        best = score;
        q = j;
        dir = move;
      }
    }

    if (q < 0) {
      if (!fresh) {
        if (!Refactor()) {
          sol.message = "revised simplex: basis became singular";
          return sol;
        }
        ComputeBasicValues();
        fresh = true;
        duals_valid = false;
        continue;
      }
      if (phase1) {
        sol.status = LpStatus::kInfeasible;
        sol.message = "revised simplex: phase one ended with bound violations";
        sol.iterations = static_cast<int>(iterations);
        return sol;
      }
      if (perturbed) {
        perturbed = false;
        work_cost_ = cost_;
        duals_valid = false;
        continue;
      }
      break;
    }

    const Vec alpha = Ftran(q);
    const double flip = std::isfinite(lo_[q]) && std::isfinite(up_[q]) ? up_[q] - lo_[q]
                                                                      : kInfinity;
    // Breakpoint of basic position p along the ray, or false if unbounded.
    auto breakpoint = [&](int p, double relax, double* ratio, double* bound) {
      const double delta = -dir * alpha[p];
      if (std::abs(delta) < 1e-11) return false;
      const int j = basic_[p];
      const double v = x_[j];
      if (delta < 0) {
        if (phase1 && v < lo_[j] - ptol) return false;
        const double b = phase1 && v > up_[j] + ptol ? up_[j] : lo_[j];
        if (!std::isfinite(b)) return false;
        *ratio = (v - b + relax) / -delta;
        *bound = b;
      } else {
        if (phase1 && v > up_[j] + ptol) return false;
        const double b = phase1 && v < lo_[j] - ptol ? lo_[j] : up_[j];
        if (!std::isfinite(b)) return false;
        *ratio = (b - v + relax) / delta;
        *bound = b;
      }
      return true;
    };
    // Harris two-pass ratio test: bound the step with bounds relaxed by the
    // primal tolerance, then take the largest pivot among breakpoints below it.
    double theta_max = flip;
    double ratio = 0.0, bound = 0.0;
    for (int p = 0; p < m_; ++p) {
      if (breakpoint(p, ptol, &ratio, &bound)) theta_max = std::min(theta_max, ratio);
    }
    int leave = -1;
    double theta = 0.0, leave_bound = 0.0, leave_size = 0.0;
    if (std::isfinite(theta_max)) {
      for (int p = 0; p < m_; ++p) {
        if (!breakpoint(p, 0.0, &ratio, &bound) || ratio > theta_max) continue;
        if (std::abs(alpha[p]) > leave_size) {
          leave_size = std::abs(alpha[p]);
          leave = p;
          theta = std::max(ratio, 0.0);
          leave_bound = bound;
        }
      }
    }
    const bool do_flip = std::isfinite(flip) && flip <= theta_max && (leave < 0 || flip <= theta);
    if (leave < 0 && !do_flip) {
      sol.status = phase1 ? LpStatus::kNumericFailure : LpStatus::kUnbounded;
      sol.message = phase1 ? "revised simplex: unbounded ray in phase one"
                           : "revised simplex: objective unbounded";
      sol.iterations = static_cast<int>(iterations);
      return sol;
    }
    if (!do_flip && leave_size < opt_.pivot_tolerance && !fresh) {
      // Small pivot on a stale factorization: refactor and price again.
      if (!Refactor()) {
        sol.message = "revised simplex: basis became singular";
        return sol;
      }
      ComputeBasicValues();
      fresh = true;
      duals_valid = false;
      continue;
    }

    ++iterations;
    fresh = false;
    const double step = do_flip ? flip : theta;
    if (step != 0.0) {
      for (int p = 0; p < m_; ++p) {
        if (alpha[p] != 0.0) x_[basic_[p]] -= step * dir * alpha[p];
      }
    }
    if (do_flip) {
      status_[q] = status_[q] == BasisStatus::kAtLower ? BasisStatus::kAtUpper
                                                       : BasisStatus::kAtLower;
      x_[q] = NonbasicValue(q);
      continue;
    }
    x_[q] += dir * step;
    {
      // Pivot row of B^-1 [A -I] for the Devex weight update.
      Vec unit = Vec::Zero(m_);
      unit[leave] = 1.0;
      const Vec rho = SolveBt(std::move(unit));
      const double apq = alpha[leave];
      const double wq = devex_[q];
      const double dq = reduced_[q];
      for (int j = 0; j < total_; ++j) {
        if (status_[j] == BasisStatus::kBasic || j == q) continue;
        const double ratio_j = ColumnDot(j, rho) / apq;
        if (ratio_j == 0.0) continue;
        devex_[j] = std::max(devex_[j], ratio_j * ratio_j * wq);
        reduced_[j] -= dq * ratio_j;
      }
      devex_[basic_[leave]] = std::max(wq / (apq * apq), 1.0);
      reduced_[basic_[leave]] = -dq / apq;
      reduced_[q] = 0.0;
    }
    const int r = basic_[leave];
    x_[r] = leave_bound;
    status_[r] = leave_bound == lo_[r] ? BasisStatus::kAtLower : BasisStatus::kAtUpper;
    status_[q] = BasisStatus::kBasic;
    basic_[leave] = q;
    Eta eta{leave, alpha[leave], {}};
    for (int p = 0; p < m_; ++p) {
      if (p != leave && std::abs(alpha[p]) > 1e-14) eta.column.emplace_back(p, alpha[p]);
    }
    etas_.push_back(std::move(eta));
  }

  sol.status = LpStatus::kOptimal;
  sol.iterations = static_cast<int>(iterations);
  sol.primal.assign(x_.begin(), x_.begin() + n_);
  for (int j = 0; j < n_; ++j) sol.primal[j] = std::clamp(sol.primal[j], lo_[j], up_[j]);
  sol.objective = model_.Objective(sol.primal);
  sol.basis = ExportBasis();
  return sol;
}

}  // namespace

Solution RevisedSimplexSolver::Solve(const Model& model) const {
  return Engine(model, options_).Run(nullptr);
}

Solution RevisedSimplexSolver::SolveFrom(const Model& model, const Basis& hint) const {
  return Engine(model, options_).Run(&hint);
}

}  // namespace blotto::lp
