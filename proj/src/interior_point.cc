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

#include "blotto/interior_point.h"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "quasidefinite_ldl.h"

namespace blotto::lp {

namespace {

using internal::QuasiDefiniteLdl;

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

double InfNorm(const Vec& v) { return v.size() ? v.lpNorm<Eigen::Infinity>() : 0.0; }

// Largest step in (0, 1] keeping v + alpha * dv >= 0 componentwise on mask.
double MaxStep(const Vec& v, const Vec& dv, const std::vector<bool>* mask = nullptr) {
  double alpha = 1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (mask && !(*mask)[i]) continue;
    if (dv[i] < 0.0) alpha = std::min(alpha, -v[i] / dv[i]);
  }
  return alpha;
}

// min c'x  s.t.  E x = e,  G x <= g,  l <= x <= u.
struct Problem {
  int n = 0;
  SpMat E, G;
  Vec e, g, c, l, u;
  std::vector<bool> has_l, has_u;
  double direction = 1.0;
};

Problem Canonicalize(const Model& model) {
  Problem p;
  p.n = model.num_variables();
  p.direction = model.sense() == ObjectiveSense::kMaximize ? -1.0 : 1.0;
  p.c.resize(p.n);
  p.l.resize(p.n);
  p.u.resize(p.n);
  p.has_l.resize(p.n);
  p.has_u.resize(p.n);
  for (int j = 0; j < p.n; ++j) {
    const Variable& v = model.variable(j);
    p.c[j] = p.direction * v.objective;
    p.has_l[j] = std::isfinite(v.lower);
    p.has_u[j] = std::isfinite(v.upper);
    p.l[j] = p.has_l[j] ? v.lower : 0.0;
    p.u[j] = p.has_u[j] ? v.upper : 0.0;
  }
  std::vector<Eigen::Triplet<double>> te, tg;
  std::vector<double> e, g;
  // Fixed variables become equality rows; the barrier needs a nonempty interior.
  for (int j = 0; j < p.n; ++j) {
    if (p.has_l[j] && p.has_u[j] && p.l[j] == p.u[j]) {
      te.emplace_back(static_cast<int>(e.size()), j, 1.0);
      e.push_back(p.l[j]);
      p.has_l[j] = p.has_u[j] = false;
    }
  }
  for (const Row& row : model.rows()) {
    if (row.sense == RowSense::kEqual) {
      const int r = static_cast<int>(e.size());
      for (const auto& [j, a] : row.terms) te.emplace_back(r, j, a);
      e.push_back(row.rhs);
    } else {
      const double s = row.sense == RowSense::kLessEqual ? 1.0 : -1.0;
      const int r = static_cast<int>(g.size());
      for (const auto& [j, a] : row.terms) tg.emplace_back(r, j, s * a);
      g.push_back(s * row.rhs);
    }
  }
  p.E.resize(static_cast<Eigen::Index>(e.size()), p.n);
  p.E.setFromTriplets(te.begin(), te.end());
  p.G.resize(static_cast<Eigen::Index>(g.size()), p.n);
  p.G.setFromTriplets(tg.begin(), tg.end());
  p.e = Eigen::Map<Vec>(e.data(), static_cast<Eigen::Index>(e.size()));
  p.g = Eigen::Map<Vec>(g.data(), static_cast<Eigen::Index>(g.size()));
  return p;
}

}  // namespace

Solution InteriorPointSolver::Solve(const Model& model) const {
  Solution sol;
  const Problem P = Canonicalize(model);
  const int n = P.n;
  const Eigen::Index me = P.E.rows();
  const Eigen::Index mg = P.G.rows();
  const SpMat Et = P.E.transpose();
  const SpMat Gt = P.G.transpose();

  int num_pairs = static_cast<int>(mg);
  for (int j = 0; j < n; ++j) num_pairs += P.has_l[j] + P.has_u[j];

  // Starting point: interior w.r.t. bounds, slacks and duals at 1.
  Vec x(n);
  for (int j = 0; j < n; ++j) {
    if (P.has_l[j] && P.has_u[j]) {
      x[j] = 0.5 * (P.l[j] + P.u[j]);
    } else if (P.has_l[j]) {
      x[j] = P.l[j] + 1.0;
    } else if (P.has_u[j]) {
      x[j] = P.u[j] - 1.0;
    } else {
      x[j] = 0.0;
    }
  }
  Vec s = (P.g - P.G * x).cwiseMax(1.0);
  Vec y = Vec::Ones(mg);
  Vec zl = Vec::Zero(n), zu = Vec::Zero(n);
  for (int j = 0; j < n; ++j) {
    if (P.has_l[j]) zl[j] = 1.0;
    if (P.has_u[j]) zu[j] = 1.0;
  }
  Vec lam = Vec::Zero(me);

  Vec lo_gap(n), up_gap(n);
  // Bound gaps are iterates of their own: recomputing x - l loses them to
  // cancellation once they shrink below the magnitude of l.
  for (int j = 0; j < n; ++j) {
    lo_gap[j] = P.has_l[j] ? x[j] - P.l[j] : 1.0;
    up_gap[j] = P.has_u[j] ? P.u[j] - x[j] : 1.0;
  }


  const double scale_b = 1.0 + std::max(InfNorm(P.e), InfNorm(P.g));
  const double scale_c = 1.0 + InfNorm(P.c);
  QuasiDefiniteLdl::Options ldl_options;
  ldl_options.static_regularization = options_.regularization;
  QuasiDefiniteLdl ldl(ldl_options);
  const Eigen::Index dim = n + me;
  std::vector<int> signs(dim, 1);
  for (Eigen::Index r = n; r < dim; ++r) signs[r] = -1;
  SpMat K(dim, dim);
  std::vector<Eigen::Triplet<double>> trip;

  double best_metric = std::numeric_limits<double>::infinity();
  Vec best_x = x;
  double pinf = 0, dinf = 0, gap = 0;

  for (int iter = 0; iter <= options_.max_iterations; ++iter) {
    const Vec rd = P.c - Et * lam + Gt * y - zl + zu;
    const Vec re = P.e - P.E * x;
    const Vec rg = P.g - P.G * x - s;
    double comp = s.dot(y);
    for (int j = 0; j < n; ++j) {
      if (P.has_l[j]) comp += lo_gap[j] * zl[j];
      if (P.has_u[j]) comp += up_gap[j] * zu[j];
    }
    const double mu = num_pairs > 0 ? comp / num_pairs : 0.0;

    const double pobj = P.c.dot(x);
    double dobj = P.e.dot(lam) - P.g.dot(y);
    for (int j = 0; j < n; ++j) {
      if (P.has_l[j]) dobj += P.l[j] * zl[j];
      if (P.has_u[j]) dobj -= P.u[j] * zu[j];
    }
    pinf = std::max(InfNorm(re), InfNorm(rg)) / scale_b;
    dinf = InfNorm(rd) / scale_c;
    gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj));
    const double metric = std::max({pinf, dinf, gap});
    if (metric < best_metric) {
      best_metric = metric;
      best_x = x;
    }
    sol.iterations = iter;
    if (pinf <= options_.tolerance && dinf <= options_.tolerance && gap <= options_.tolerance) {
      break;
    }
    if (iter == options_.max_iterations) break;
    if (!x.allFinite() || InfNorm(x) > 1e14 || InfNorm(y) > 1e14 || InfNorm(lam) > 1e14) {
      sol.status = LpStatus::kNumericFailure;
      sol.message = "ipm: iterates diverged (problem may be infeasible or unbounded)";
      return sol;
    }

    // Assemble and factor the augmented matrix (lower triangle).
    const Vec theta = y.cwiseQuotient(s);
    Vec diag(n);
    for (int j = 0; j < n; ++j) {
      diag[j] = 0.0;
      if (P.has_l[j]) diag[j] += zl[j] / lo_gap[j];
      if (P.has_u[j]) diag[j] += zu[j] / up_gap[j];
    }
    SpMat H = Gt * theta.asDiagonal() * P.G;
    trip.clear();
    trip.reserve(H.nonZeros() + n + P.E.nonZeros() + me);
    for (int k = 0; k < H.outerSize(); ++k) {
      for (SpMat::InnerIterator it(H, k); it; ++it) {
        if (it.row() > it.col()) trip.emplace_back(it.row(), it.col(), it.value());
      }
    }
    for (int j = 0; j < n; ++j) trip.emplace_back(j, j, H.coeff(j, j) + diag[j]);
    for (int k = 0; k < P.E.outerSize(); ++k) {
      for (SpMat::InnerIterator it(P.E, k); it; ++it) {
        trip.emplace_back(n + it.row(), it.col(), it.value());
      }
    }
    for (Eigen::Index r = 0; r < me; ++r) trip.emplace_back(n + r, n + r, 0.0);
    K.setFromTriplets(trip.begin(), trip.end());
    ldl.Factorize(K, signs);

    // Unregularized operator for iterative refinement.
    auto apply_k0 = [&](const Vec& z) {
      Vec out(dim);
      const Vec zx = z.head(n);
      const Vec zv = z.tail(me);
      out.head(n) = Gt * (theta.asDiagonal() * (P.G * zx)) + diag.cwiseProduct(zx) + Et * zv;
      out.tail(me) = P.E * zx;
      return out;
    };

    struct Direction {
      Vec dx, dlam, dy, ds, dzl, dzu;
    };
    auto solve_direction = [&](const Vec& rsy, const Vec& rpl, const Vec& rpu) {
      // rsy, rpl, rpu: complementarity targets for (s,y), (x-l,zl), (u-x,zu).
      const Vec w1 = (rsy - y.cwiseProduct(rg)).cwiseQuotient(s);
      Vec r1 = -rd - Gt * w1;
      for (int j = 0; j < n; ++j) {
        if (P.has_l[j]) r1[j] += rpl[j] / lo_gap[j];
        if (P.has_u[j]) r1[j] -= rpu[j] / up_gap[j];
      }
      Vec rhs(dim);
      rhs.head(n) = r1;
      rhs.tail(me) = re;
      Vec z = ldl.Solve(rhs);
      const double rhs_norm = InfNorm(rhs);
      Vec res = rhs - apply_k0(z);
      double res_norm = InfNorm(res);
      for (int k = 0; k < 8 && res_norm > 1e-13 * (1.0 + rhs_norm); ++k) {
        const Vec trial = z + ldl.Solve(res);
        const Vec trial_res = rhs - apply_k0(trial);
        const double trial_norm = InfNorm(trial_res);
        if (!(trial_norm < res_norm)) break;
        z = trial;
        res = trial_res;
        res_norm = trial_norm;
      }
      Direction d;
      d.dx = z.head(n);
      d.dlam = -z.tail(me);
      const Vec gdx = P.G * d.dx;
      d.dy = w1 + theta.cwiseProduct(gdx);
      d.ds = rg - gdx;
      d.dzl = Vec::Zero(n);
      d.dzu = Vec::Zero(n);
      for (int j = 0; j < n; ++j) {
        if (P.has_l[j]) d.dzl[j] = (rpl[j] - zl[j] * d.dx[j]) / lo_gap[j];
        if (P.has_u[j]) d.dzu[j] = (rpu[j] + zu[j] * d.dx[j]) / up_gap[j];
      }
      return d;
    };
    auto step_lengths = [&](const Direction& d, double& ap, double& ad) {
      ap = MaxStep(s, d.ds);
      Vec dlo = d.dx, dup = -d.dx;
      ap = std::min(ap, MaxStep(lo_gap, dlo, &P.has_l));
      ap = std::min(ap, MaxStep(up_gap, dup, &P.has_u));
      ad = MaxStep(y, d.dy);
      ad = std::min(ad, MaxStep(zl, d.dzl, &P.has_l));
      ad = std::min(ad, MaxStep(zu, d.dzu, &P.has_u));
    };

    // Predictor.
    Vec rsy = -s.cwiseProduct(y);
    Vec rpl = Vec::Zero(n), rpu = Vec::Zero(n);
    for (int j = 0; j < n; ++j) {
      if (P.has_l[j]) rpl[j] = -lo_gap[j] * zl[j];
      if (P.has_u[j]) rpu[j] = -up_gap[j] * zu[j];
    }
    const Direction aff = solve_direction(rsy, rpl, rpu);
    double ap = 1, ad = 1;
    step_lengths(aff, ap, ad);
    double comp_aff = (s + ap * aff.ds).dot(y + ad * aff.dy);
    for (int j = 0; j < n; ++j) {
      if (P.has_l[j]) comp_aff += (lo_gap[j] + ap * aff.dx[j]) * (zl[j] + ad * aff.dzl[j]);
      if (P.has_u[j]) comp_aff += (up_gap[j] - ap * aff.dx[j]) * (zu[j] + ad * aff.dzu[j]);
    }
    const double mu_aff = num_pairs > 0 ? comp_aff / num_pairs : 0.0;
    const double sigma = mu > 0 ? std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3) : 0.0;

    // Corrector.
    const double target = sigma * mu;
    rsy = (Vec::Constant(mg, target) - s.cwiseProduct(y) - aff.ds.cwiseProduct(aff.dy));
    for (int j = 0; j < n; ++j) {
      if (P.has_l[j]) rpl[j] = target - lo_gap[j] * zl[j] - aff.dx[j] * aff.dzl[j];
      if (P.has_u[j]) rpu[j] = target - up_gap[j] * zu[j] + aff.dx[j] * aff.dzu[j];
    }
    const Direction d = solve_direction(rsy, rpl, rpu);
    step_lengths(d, ap, ad);
    const double eta = std::max(0.9, 1.0 - 10.0 * mu / (1.0 + std::abs(pobj)));
    ap = std::min(1.0, std::min(0.9999, eta) * ap);
    ad = std::min(1.0, std::min(0.9999, eta) * ad);

    if (!(d.dx.allFinite() && d.ds.allFinite() && d.dy.allFinite() && d.dlam.allFinite() &&
          d.dzl.allFinite() && d.dzu.allFinite())) {
      break;
    }
    x += ap * d.dx;
    s += ap * d.ds;
    y += ad * d.dy;
    lam += ad * d.dlam;
    zl += ad * d.dzl;
    zu += ad * d.dzu;
    for (int j = 0; j < n; ++j) {
      if (P.has_l[j]) lo_gap[j] += ap * d.dx[j];
      if (P.has_u[j]) up_gap[j] -= ap * d.dx[j];
    }
  }

  const bool converged =
      pinf <= options_.tolerance && dinf <= options_.tolerance && gap <= options_.tolerance;
  if (!converged) {
    x = best_x;
    if (best_metric > options_.fallback_tolerance) {
      std::ostringstream msg;
      msg << "ipm: no convergence after " << sol.iterations << " iterations (residual "
          << best_metric << ")";
      sol.status = LpStatus::kNumericFailure;
      sol.message = msg.str();
      return sol;
    }
    std::ostringstream msg;
    msg << "ipm: stalled at residual " << best_metric;
    sol.message = msg.str();
  }
  sol.status = LpStatus::kOptimal;
  sol.primal.assign(x.data(), x.data() + n);
  // Snap into bounds; interior iterates sit strictly inside.
  for (int j = 0; j < n; ++j) {
    const Variable& v = model.variable(j);
    sol.primal[j] = std::clamp(sol.primal[j], v.lower, v.upper);
  }
  sol.objective = model.Objective(sol.primal);
  return sol;
}

}  // namespace blotto::lp
