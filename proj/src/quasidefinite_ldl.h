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

#ifndef BLOTTO_SRC_QUASIDEFINITE_LDL_H_
#define BLOTTO_SRC_QUASIDEFINITE_LDL_H_

#include <Eigen/Sparse>
#include <vector>

namespace blotto::lp::internal {

// Sparse LDL' for symmetric quasi-definite matrices with a known pivot sign
// pattern. Up-looking factorization over an AMD ordering. A pivot whose
// magnitude is lost to cancellation (relative to the original diagonal) or
// that has the wrong sign is replaced by sign * huge_pivot, which removes that
// direction from the solve; callers recover accuracy by iterative refinement.
class QuasiDefiniteLdl {
 public:
  struct Options {
    double static_regularization = 1e-8;
    double relative_pivot_threshold = 1e-14;
    double replacement_pivot = 2e-7;
  };

  QuasiDefiniteLdl() = default;
  explicit QuasiDefiniteLdl(Options options) : options_(options) {}

  // lower: lower triangle (including diagonal) of the matrix; signs[i] is +1
  // or -1. The ordering is reused while the number of stored entries stays
  // the same.
  void Factorize(const Eigen::SparseMatrix<double>& lower, const std::vector<int>& signs);

  Eigen::VectorXd Solve(const Eigen::VectorXd& b) const;

  int num_dynamic_pivots() const { return num_dynamic_; }
  long factor_nonzeros() const { return static_cast<long>(li_.size()); }

 private:
  void Symbolic(const Eigen::SparseMatrix<double>& upper);

  Options options_;
  bool ordered_ = false;
  int n_ = 0;
  Eigen::Index pattern_nonzeros_ = -1;
  Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int> perm_;
  std::vector<int> etree_, lnz_, lp_, li_;
  std::vector<double> lx_, d_, dinv_;
  int num_dynamic_ = 0;
};

}  // namespace blotto::lp::internal

#endif  // BLOTTO_SRC_QUASIDEFINITE_LDL_H_
