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

#ifndef BLOTTO_CONFIG_H_
#define BLOTTO_CONFIG_H_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "blotto/errors.h"
#include "blotto/game.h"

namespace blotto {

// Malformed or invalid configuration. The message starts with the offending
// field path, e.g. "assign_costs_A[1].table: cost table is decreasing".
class ConfigError : public PreconditionError {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : PreconditionError(field.empty() ? what : field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Game configuration document:
//   {
//     "n": 2, "budget_A": 2, "budget_B": 2,
//     "valuations": {"kind": "sign", "weight": 1},
//     "assign_costs_A": {"kind": "none"},
//     "assign_costs_B": [{"kind": "quadratic", "coeff": 0.1}, ...],
//     "obtain_cost_A": {"kind": "linear", "coeff": 1},
//     "obtain_cost_B": {"kind": "table", "table": [0, 1, 2]}
//   }
// Per-battlefield fields take either one spec (applied to every battlefield)
// or a list of n specs. Valuation tables are lists of budget_A + 1 rows with
// budget_B + 1 entries. Cost fields default to "none".
CostBlottoGame GameFromJson(const nlohmann::json& doc);
// Explicit per-battlefield form; GameFromJson(GameToJson(g)) == g.
nlohmann::json GameToJson(const CostBlottoGame& game);

// Parses a JSON document, reporting syntax errors with line and column.
nlohmann::json ParseJson(std::istream& in, const std::string& source);
nlohmann::json ReadJsonFile(const std::string& path);
CostBlottoGame ReadGameConfig(const std::string& path);

// Values min + k * interval for k = 0, 1, ... while not past max.
std::vector<double> GridValues(double min, double max, double interval);

// Sweep over the sign-valuation family with linear obtainment cost
// c0 = 1 / c0_inv for both players:
//   {
//     "n": [4] | {"min": 2, "max": 8, "interval": 2},
//     "budget": [40]     (or "budget_A" and "budget_B"),
//     "c0_inv": {"min": 1, "max": 10, "interval": 0.25} | [1, 2.5],
//     "weight": 1,
//     "assign_cost": {"kind": "quadratic", "coeff": 0.01}   (optional)
//   }
struct SweepSpec {
  std::vector<int> n;
  std::vector<int> budget_a;
  std::vector<int> budget_b;  // empty: D_B = D_A at every point
  std::vector<double> c0_inv;
  double weight = 1.0;
  // Per-unit assignment cost applied to every battlefield of both players.
  std::optional<nlohmann::json> assign_cost;

  struct Point {
    int n;
    int budget_a;
    int budget_b;
    double c0_inv;
  };
  // Grid order: n outermost, then D_A, then D_B, then c0_inv.
  std::vector<Point> Points() const;
  CostBlottoGame MakeGame(const Point& p) const;
};

SweepSpec SweepSpecFromJson(const nlohmann::json& doc);
nlohmann::json SweepSpecToJson(const SweepSpec& spec);
SweepSpec ReadSweepSpec(const std::string& path);

}  // namespace blotto

#endif  // BLOTTO_CONFIG_H_
