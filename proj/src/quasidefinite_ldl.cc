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

#include "quasidefinite_ldl.h"

#include <Eigen/OrderingMethods>
#include <algorithm>
#include <cmath>

namespace blotto::lp::internal {

void QuasiDefiniteLdl::Symbolic(const Eigen::SparseMatrix<double>& upper) {
  // Elimination tree and column counts of L.
  etree_.assign(n_, -1);
  lnz_.assign(n_, 0);
  std::vector<int> work(n_, -1);
  const int* ap = upper.outerIndexPtr();
  const int* ai = upper.innerIndexPtr();
  for (int j = 0; j < n_; ++j) {
    work[j] = j;
    for (int p = ap[j]; p < ap[j + 1]; ++p) {
      int i = ai[p];
      if (i >= j) continue;
      while (work[i] != j) {
        if (etree_[i] == -1) etree_[i] = j;
        ++lnz_[i];
        work[i] = j;
        i = etree_[i];
      }
    }
  }
  lp_.assign(n_ + 1, 0);
  for (int i = 0; i < n_; ++i) lp_[i + 1] = lp_[i] + lnz_[i];
  li_.assign(lp_[n_], 0);
  lx_.assign(lp_[n_], 0.0);
}

void QuasiDefiniteLdl::Factorize(const Eigen::SparseMatrix<double>& lower,
                                 const std::vector<int>& signs) {
  n_ = static_cast<int>(lower.rows());
  if (!ordered_ || lower.nonZeros() != pattern_nonzeros_) {
    pattern_nonzeros_ = lower.nonZeros();
    Eigen::SparseMatrix<double> full = lower.selfadjointView<Eigen::Lower>();
    Eigen::AMDOrdering<int> amd;
    Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int> inverse;
    amd(full, inverse);  // yields the inverse of the symmetric permutation
    perm_ = inverse.inverse();
    ordered_ = true;
  }
  Eigen::SparseMatrix<double> upper(n_, n_);
  upper.selfadjointView<Eigen::Upper>() = lower.selfadjointView<Eigen::Lower>().twistedBy(perm_);
  upper.makeCompressed();
  Symbolic(upper);

  std::vector<int> sign(n_);
  const auto& idx = perm_.indices();
  for (int i = 0; i < n_; ++i) sign[idx[i]] = signs[i];

  d_.assign(n_, 0.0);
  dinv_.assign(n_, 0.0);
  num_dynamic_ = 0;
  std::vector<double> y(n_, 0.0);
  std::vector<char> marked(n_, 0);
  std::vector<int> y_idx(n_), elim(n_), next_space(lp_.begin(), lp_.end() - 1);
  const int* ap = upper.outerIndexPtr();
  const int* ai = upper.innerIndexPtr();
  const double* ax = upper.valuePtr();

  auto finish_pivot = [&](int k, double original) {
    double dk = d_[k] + sign[k] * options_.static_regularization;
    const double scale = std::max(1.0, std::abs(original));
    if (!(sign[k] * dk > options_.relative_pivot_threshold * scale)) {
      dk = sign[k] * options_.replacement_pivot * scale;
      ++num_dynamic_;
    }
    d_[k] = dk;
    dinv_[k] = 1.0 / dk;
  };

  for (int k = 0; k < n_; ++k) {
    int nnz_y = 0;
    double original = 0.0;
    for (int p = ap[k]; p < ap[k + 1]; ++p) {
      const int b = ai[p];
      if (b == k) {
        d_[k] = original = ax[p];
        continue;
      }
      y[b] = ax[p];
      if (marked[b]) continue;
      marked[b] = 1;
      int ne = 0;
      elim[ne++] = b;
      for (int next = etree_[b]; next != -1 && next < k; next = etree_[next]) {
        if (marked[next]) break;
        marked[next] = 1;
        elim[ne++] = next;
      }
      while (ne) y_idx[nnz_y++] = elim[--ne];
    }
    for (int i = nnz_y - 1; i >= 0; --i) {
      const int c = y_idx[i];
      const int tmp = next_space[c];
      const double yc = y[c];
      for (int j = lp_[c]; j < tmp; ++j) y[li_[j]] -= lx_[j] * yc;
      li_[tmp] = k;
      lx_[tmp] = yc * dinv_[c];
      d_[k] -= yc * lx_[tmp];
      ++next_space[c];
      y[c] = 0.0;
      marked[c] = 0;
    }
    finish_pivot(k, original);
  }
}

Eigen::VectorXd QuasiDefiniteLdl::Solve(const Eigen::VectorXd& b) const {
  Eigen::VectorXd x = perm_ * b;
  for (int i = 0; i < n_; ++i) {
    const double xi = x[i];
    for (int j = lp_[i]; j < lp_[i + 1]; ++j) x[li_[j]] -= lx_[j] * xi;
  }
  for (int i = 0; i < n_; ++i) x[i] *= dinv_[i];
  for (int i = n_ - 1; i >= 0; --i) {
    double xi = x[i];
    for (int j = lp_[i]; j < lp_[i + 1]; ++j) xi -= lx_[j] * x[li_[j]];
    x[i] = xi;
  }
  return perm_.inverse() * x;
}

}  // namespace blotto::lp::internal
