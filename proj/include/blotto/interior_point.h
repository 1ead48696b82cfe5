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

#ifndef BLOTTO_INTERIOR_POINT_H_
#define BLOTTO_INTERIOR_POINT_H_

#include "blotto/lp_model.h"

namespace blotto::lp {

struct InteriorPointOptions {
  double tolerance = 1e-10;        // relative primal/dual infeasibility and gap
  double fallback_tolerance = 1e-7;  // accepted if progress stalls
  int max_iterations = 300;
  double regularization = 1e-8;  // static pivot regularization
};

// Mehrotra predictor-corrector interior point method. Inequality rows are
// condensed into the primal block of a quasi-definite augmented system
//   [ G' (Y/S) G + Z/X + rho I    E' ] [dx]
//   [ E                      -delta I ] [dv]
// which is factored with a sparse LDL' each iteration (E: equality rows,
// G: inequality rows). rho and delta are applied inside the factorization
// only; iterative refinement runs against the unregularized matrix.
class InteriorPointSolver : public Solver {
 public:
  explicit InteriorPointSolver(InteriorPointOptions options = {}) : options_(options) {}
  std::string Name() const override { return "ipm"; }
  Solution Solve(const Model& model) const override;

 private:
  InteriorPointOptions options_;
};

}  // namespace blotto::lp

#endif  // BLOTTO_INTERIOR_POINT_H_
