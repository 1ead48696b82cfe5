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

#ifndef BLOTTO_HIGHS_SOLVER_H_
#define BLOTTO_HIGHS_SOLVER_H_

#include <string>

#include "blotto/lp_model.h"

namespace blotto::lp {

struct HighsOptions {
  double primal_feasibility_tolerance = 1e-9;
  double dual_feasibility_tolerance = 1e-9;
  // Seconds; 0 disables the limit.
  double time_limit = 0.0;
  // Honour SolveFrom hints. Off by default: on the minimax LPs a cold start
  // with presolve beats the hinted simplex.
  bool use_warm_start = false;
};

// Backend on the HiGHS dual/primal simplex. Every solve owns a fresh HiGHS
// instance running single-threaded, so concurrent solves share nothing.
class HighsSolver : public Solver {
 public:
  explicit HighsSolver(HighsOptions options = {}) : options_(options) {}
  std::string Name() const override { return "highs"; }
  Solution Solve(const Model& model) const override;
  Solution SolveFrom(const Model& model, const Basis& hint) const override;

 private:
  Solution Run(const Model& model, const Basis* hint) const;

  HighsOptions options_;
};

}  // namespace blotto::lp

#endif  // BLOTTO_HIGHS_SOLVER_H_
