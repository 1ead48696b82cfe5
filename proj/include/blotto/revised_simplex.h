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

#ifndef BLOTTO_REVISED_SIMPLEX_H_
#define BLOTTO_REVISED_SIMPLEX_H_

#include <cstdint>

#include "blotto/lp_model.h"

namespace blotto::lp {

struct RevisedSimplexOptions {
  double primal_tolerance = 1e-9;
  double dual_tolerance = 1e-9;
  double pivot_tolerance = 1e-7;
  int refactor_interval = 50;
  long max_iterations = 0;  // 0: 20 * (rows + columns) + 10000
  // Random cost shifts against dual degeneracy, removed before the final
  // optimality check.
  double cost_perturbation = 1e-7;
  std::uint32_t seed = 20260401;
};

// Bounded-variable primal revised simplex on [A -I] (x, r) = 0 with bounds on
// both the structural variables x and the row activities r. The basis inverse
// is a sparse LU factorization followed by a product-form eta file. Phase one
// minimizes the sum of bound violations of the basic variables; ratio tests
// use Harris' two-pass rule.
class RevisedSimplexSolver : public Solver {
 public:
  explicit RevisedSimplexSolver(RevisedSimplexOptions options = {}) : options_(options) {}
  std::string Name() const override { return "revised"; }
  Solution Solve(const Model& model) const override;
  Solution SolveFrom(const Model& model, const Basis& hint) const override;

 private:
  RevisedSimplexOptions options_;
};

}  // namespace blotto::lp

#endif  // BLOTTO_REVISED_SIMPLEX_H_
