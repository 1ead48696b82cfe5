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

#include "blotto/config.h"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <utility>

namespace blotto {
namespace {

using nlohmann::json;

std::string Index(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

std::string Member(const std::string& field, const std::string& key) {
  return field.empty() ? key : field + "." + key;
}

void CheckKeys(const json& obj, const std::string& field, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw ConfigError(field, "expected an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) throw ConfigError(Member(field, item.key()), "unknown field");
  }
}

const json& Require(const json& obj, const std::string& field, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(Member(field, key), "missing required field");
  return *it;
}

int GetInt(const json& v, const std::string& field, int min_value) {
  if (!v.is_number_integer()) throw ConfigError(field, "expected an integer");
  const long long x = v.get<long long>();
  if (x < min_value || x > 1'000'000) {
    throw ConfigError(field, "must be in " + std::to_string(min_value) + "..1000000");
  }
  return static_cast<int>(x);
}

double GetReal(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field, "must be finite");
  return x;
}

std::string GetKind(const json& spec, const std::string& field) {
  const json& kind = Require(spec, field, "kind");
  if (!kind.is_string()) throw ConfigError(Member(field, "kind"), "expected a string");
  return kind.get<std::string>();
}

template <class F>
auto Wrap(const std::string& field, F&& make) {
  try {
    return make();
  } catch (const ConfigError&) {
    throw;
  } catch (const PreconditionError& e) {
    throw ConfigError(field, e.what());
  }
}

CostFunction ParseCost(const json& spec, int budget, const std::string& field) {
  CheckKeys(spec, field, {"kind", "coeff", "table"});
  const std::string kind = GetKind(spec, field);
  if (kind == "none") return CostFunction::Zero(budget);
  if (kind == "linear" || kind == "quadratic") {
    const double c = GetReal(Require(spec, field, "coeff"), Member(field, "coeff"));
    return Wrap(field, [&] {
      return kind == "linear" ? CostFunction::Linear(c, budget) : CostFunction::Quadratic(c, budget);
    });
  }
  if (kind == "table") {
    const std::string tf = Member(field, "table");
    const json& table = Require(spec, field, "table");
    if (!table.is_array()) throw ConfigError(tf, "expected a list");
    if (static_cast<int>(table.size()) != budget + 1) {
      throw ConfigError(tf, "expected " + std::to_string(budget + 1) + " entries, got " +
                                std::to_string(table.size()));
    }
    std::vector<double> values;
    for (std::size_t t = 0; t < table.size(); ++t) values.push_back(GetReal(table[t], Index(tf, t)));
    return Wrap(tf, [&] { return CostFunction::Table(std::move(values)); });
  }
  throw ConfigError(Member(field, "kind"),
                    "unknown cost kind \"" + kind + "\" (none, linear, quadratic, table)");
}

Valuation ParseValuation(const json& spec, int budget_a, int budget_b, const std::string& field) {
  CheckKeys(spec, field, {"kind", "weight", "table"});
  const std::string kind = GetKind(spec, field);
  if (kind == "sign") {
    const double w = spec.contains("weight") ? GetReal(spec["weight"], Member(field, "weight")) : 1.0;
    return Valuation::Sign(w);
  }
  if (kind == "table") {
    const std::string tf = Member(field, "table");
    const json& table = Require(spec, field, "table");
    if (!table.is_array() || static_cast<int>(table.size()) != budget_a + 1) {
      throw ConfigError(tf, "expected " + std::to_string(budget_a + 1) + " rows");
    }
    std::vector<double> values;
    for (std::size_t a = 0; a < table.size(); ++a) {
      const json& row = table[a];
      if (!row.is_array() || static_cast<int>(row.size()) != budget_b + 1) {
        throw ConfigError(Index(tf, a), "expected " + std::to_string(budget_b + 1) + " entries");
      }
      for (std::size_t b = 0; b < row.size(); ++b) {
        values.push_back(GetReal(row[b], Index(Index(tf, a), b)));
      }
    }
    return Wrap(tf, [&] { return Valuation::Table(budget_a + 1, budget_b + 1, std::move(values)); });
  }
  throw ConfigError(Member(field, "kind"), "unknown valuation kind \"" + kind + "\" (sign, table)");
}

// One spec broadcast to n entries, or a list of exactly n specs.
template <class T, class F>
std::vector<T> PerBattlefield(const json& doc, const char* key, int n, const json& fallback,
                              F&& parse) {
  const json& v = doc.contains(key) ? doc[key] : fallback;
  std::vector<T> out;
  if (v.is_array()) {
    if (static_cast<int>(v.size()) != n) {
      throw ConfigError(key, "expected " + std::to_string(n) + " entries, got " +
                                 std::to_string(v.size()));
    }
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse(v[i], Index(key, i)));
  } else {
    const T one = parse(v, key);
    out.assign(n, one);
  }
  return out;
}

json CostToJson(const CostFunction& f) {
  switch (f.kind()) {
    case CostFunction::Kind::kTable:
      return {{"kind", "table"}, {"table", f.table()}};
    case CostFunction::Kind::kLinear:
      if (f.coefficient() == 0.0) return {{"kind", "none"}};
      return {{"kind", "linear"}, {"coeff", f.coefficient()}};
    case CostFunction::Kind::kQuadratic:
      return {{"kind", "quadratic"}, {"coeff", f.coefficient()}};
  }
  return {};
}

json ValuationToJson(const Valuation& v) {
  if (v.kind() == Valuation::Kind::kSign) return {{"kind", "sign"}, {"weight", v.weight()}};
  json rows = json::array();
  for (int a = 0; a < v.rows(); ++a) {
    json row = json::array();
    for (int b = 0; b < v.cols(); ++b) row.push_back(v.table()[static_cast<std::size_t>(a) * v.cols() + b]);
    rows.push_back(std::move(row));
  }
  return {{"kind", "table"}, {"table", std::move(rows)}};
}

std::vector<int> IntGrid(const json& v, const std::string& field, int min_value) {
  std::vector<int> out;
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(GetInt(v[i], Index(field, i), min_value));
  } else if (v.is_object()) {
    CheckKeys(v, field, {"min", "max", "interval"});
    const int lo = GetInt(Require(v, field, "min"), Member(field, "min"), min_value);
    const int hi = GetInt(Require(v, field, "max"), Member(field, "max"), min_value);
    const int step = GetInt(Require(v, field, "interval"), Member(field, "interval"), 1);
    for (int x = lo; x <= hi; x += step) out.push_back(x);
  } else {
    out.push_back(GetInt(v, field, min_value));
  }
  if (out.empty()) throw ConfigError(field, "grid is empty");
  return out;
}

std::vector<double> RealGrid(const json& v, const std::string& field) {
  std::vector<double> out;
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(GetReal(v[i], Index(field, i)));
  } else if (v.is_object()) {
    CheckKeys(v, field, {"min", "max", "interval"});
    const double lo = GetReal(Require(v, field, "min"), Member(field, "min"));
    const double hi = GetReal(Require(v, field, "max"), Member(field, "max"));
    const double step = GetReal(Require(v, field, "interval"), Member(field, "interval"));
    if (!(step > 0.0)) throw ConfigError(Member(field, "interval"), "must be positive");
    out = GridValues(lo, hi, step);
  } else {
    out.push_back(GetReal(v, field));
  }
  if (out.empty()) throw ConfigError(field, "grid is empty");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!(out[i] > 0.0)) throw ConfigError(Index(field, i), "must be positive");
  }
  return out;
}

}  // namespace

CostBlottoGame GameFromJson(const json& doc) {
  CheckKeys(doc, "", {"n", "budget_A", "budget_B", "valuations", "assign_costs_A",
                      "assign_costs_B", "obtain_cost_A", "obtain_cost_B"});
  const int n = GetInt(Require(doc, "", "n"), "n", 2);
  const int da = GetInt(Require(doc, "", "budget_A"), "budget_A", 0);
  const int db = GetInt(Require(doc, "", "budget_B"), "budget_B", 0);
  const json none = {{"kind", "none"}};
  auto valuations = PerBattlefield<Valuation>(
      doc, "valuations", n, json{{"kind", "sign"}},
      [&](const json& s, const std::string& f) { return ParseValuation(s, da, db, f); });
  auto ca = PerBattlefield<CostFunction>(
      doc, "assign_costs_A", n, none,
      [&](const json& s, const std::string& f) { return ParseCost(s, da, f); });
  auto cb = PerBattlefield<CostFunction>(
      doc, "assign_costs_B", n, none,
      [&](const json& s, const std::string& f) { return ParseCost(s, db, f); });
  CostFunction ga = ParseCost(doc.value("obtain_cost_A", none), da, "obtain_cost_A");
  CostFunction gb = ParseCost(doc.value("obtain_cost_B", none), db, "obtain_cost_B");
  return Wrap("", [&] {
    return CostBlottoGame(da, db, std::move(valuations), std::move(ca), std::move(cb),
                          std::move(ga), std::move(gb));
  });
}

json GameToJson(const CostBlottoGame& game) {
  json doc;
  doc["n"] = game.n();
  doc["budget_A"] = game.budget_a();
  doc["budget_B"] = game.budget_b();
  json vals = json::array();
  for (const Valuation& v : game.valuations()) vals.push_back(ValuationToJson(v));
  doc["valuations"] = std::move(vals);
  for (Player p : {Player::kA, Player::kB}) {
    json costs = json::array();
    for (const CostFunction& f : game.assign_costs(p)) costs.push_back(CostToJson(f));
    doc[std::string("assign_costs_") + PlayerName(p)] = std::move(costs);
    doc[std::string("obtain_cost_") + PlayerName(p)] = CostToJson(game.obtain_cost(p));
  }
  return doc;
}

json ParseJson(std::istream& in, const std::string& source) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(source, e.what());
  }
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open file");
  return ParseJson(in, path);
}

CostBlottoGame ReadGameConfig(const std::string& path) { return GameFromJson(ReadJsonFile(path)); }

std::vector<double> GridValues(double min, double max, double interval) {
  std::vector<double> out;
  if (!(interval > 0.0)) return out;
  const double slack = 1e-9 * interval;
  for (long k = 0;; ++k) {
    const double x = min + static_cast<double>(k) * interval;
    if (x > max + slack) break;
    out.push_back(x);
  }
  return out;
}

std::vector<SweepSpec::Point> SweepSpec::Points() const {
  std::vector<Point> out;
  for (int nn : n) {
    for (int da : budget_a) {
      const std::vector<int> bs = budget_b.empty() ? std::vector<int>{da} : budget_b;
      for (int db : bs) {
        for (double c : c0_inv) out.push_back({nn, da, db, c});
      }
    }
  }
  return out;
}

CostBlottoGame SweepSpec::MakeGame(const Point& p) const {
  const CostBlottoGame base = CostBlottoGame::SignLinear(p.n, p.budget_a, p.budget_b,
                                                         1.0 / p.c0_inv, weight);
  if (!assign_cost) return base;
  std::vector<CostFunction> ca(p.n, ParseCost(*assign_cost, p.budget_a, "assign_cost"));
  std::vector<CostFunction> cb(p.n, ParseCost(*assign_cost, p.budget_b, "assign_cost"));
  return CostBlottoGame(p.budget_a, p.budget_b, base.valuations(), std::move(ca), std::move(cb),
                        base.obtain_cost(Player::kA), base.obtain_cost(Player::kB));
}

SweepSpec SweepSpecFromJson(const json& doc) {
  CheckKeys(doc, "", {"n", "budget", "budget_A", "budget_B", "c0_inv", "weight", "assign_cost"});
  SweepSpec spec;
  spec.n = IntGrid(Require(doc, "", "n"), "n", 2);
  if (doc.contains("budget")) {
    if (doc.contains("budget_A") || doc.contains("budget_B")) {
      throw ConfigError("budget", "give either budget or budget_A/budget_B");
    }
    spec.budget_a = IntGrid(doc["budget"], "budget", 0);
  } else {
    spec.budget_a = IntGrid(Require(doc, "", "budget_A"), "budget_A", 0);
    spec.budget_b = IntGrid(Require(doc, "", "budget_B"), "budget_B", 0);
  }
  spec.c0_inv = RealGrid(Require(doc, "", "c0_inv"), "c0_inv");
  if (doc.contains("weight")) spec.weight = GetReal(doc["weight"], "weight");
  if (doc.contains("assign_cost")) {
    spec.assign_cost = doc["assign_cost"];
    ParseCost(*spec.assign_cost, spec.budget_a.front(), "assign_cost");
  }
  return spec;
}

json SweepSpecToJson(const SweepSpec& spec) {
  json doc;
  doc["n"] = spec.n;
  if (spec.budget_b.empty()) {
    doc["budget"] = spec.budget_a;
  } else {
    doc["budget_A"] = spec.budget_a;
    doc["budget_B"] = spec.budget_b;
  }
  doc["c0_inv"] = spec.c0_inv;
  doc["weight"] = spec.weight;
  if (spec.assign_cost) doc["assign_cost"] = *spec.assign_cost;
  return doc;
}

SweepSpec ReadSweepSpec(const std::string& path) { return SweepSpecFromJson(ReadJsonFile(path)); }

}  // namespace blotto
