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

#include "blotto/layered_graph.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "blotto/errors.h"

namespace blotto {

LayeredGraph::LayeredGraph(int n_hat, int budget) : n_hat_(n_hat), budget_(budget) {
  if (n_hat < 1) throw PreconditionError("layered graph needs at least one layer");
  if (budget < 0) throw PreconditionError("layered graph budget must be nonnegative");
  num_nodes_ = static_cast<int>(NodeCount(n_hat, budget));
  edges_.reserve(EdgeCount(n_hat, budget));
  layer_start_.push_back(0);
  for (int i = 1; i <= n_hat; ++i) {
    for (int j = 0; j <= budget; ++j) {
      if (!IsNode(i - 1, j)) continue;
      for (int a = 0; j + a <= budget; ++a) {
        if (IsNode(i, j + a)) edges_.push_back({i, j, a});
      }
    }
    layer_start_.push_back(static_cast<int>(edges_.size()));
  }
}

bool LayeredGraph::IsNode(int layer, int j) const {
  if (layer < 0 || layer > n_hat_ || j < 0 || j > budget_) return false;
  if (layer == 0) return j == 0;
  if (layer == n_hat_) return j == budget_;
  return true;
}

int LayeredGraph::NodeId(int layer, int j) const {
  if (!IsNode(layer, j)) return -1;
  if (layer == 0) return 0;
  if (layer == n_hat_) return num_nodes_ - 1;
  return 1 + (layer - 1) * (budget_ + 1) + j;
}

int LayeredGraph::EdgeIndex(int layer, int from, int units) const {
  if (!IsNode(layer - 1, from) || units < 0 || !IsNode(layer, from + units)) return -1;
  const int base = layer_start_[layer - 1];
  if (layer == 1) return base + (n_hat_ == 1 ? 0 : units);
  if (layer == n_hat_) return base + from;
  // Origin j contributes budget - j + 1 edges.
  const int before = from * (budget_ + 1) - from * (from - 1) / 2;
  return base + before + units;
}

long LayeredGraph::EdgeCount(int n_hat, int budget) {
  const long d = budget;
  if (n_hat == 1) return 1;
  return 2 * (d + 1) + (n_hat - 2) * (d + 1) * (d + 2) / 2;
}

long LayeredGraph::NodeCount(int n_hat, int budget) {
  return 2 + static_cast<long>(n_hat - 1) * (budget + 1);
}

StrategyFlow::StrategyFlow(LayeredGraph g, std::vector<double> flow)
    : graph(std::move(g)), edge_flow(std::move(flow)) {
  if (static_cast<int>(edge_flow.size()) != graph.num_edges()) {
    throw InvalidFlowError("expected " + std::to_string(graph.num_edges()) +
                           " edge values, got " + std::to_string(edge_flow.size()));
  }
}

double StrategyFlow::MaxViolation() const {
  std::vector<double> net(graph.num_nodes(), 0.0);
  double worst = 0.0;
  for (int e = 0; e < graph.num_edges(); ++e) {
    const auto& edge = graph.edges()[e];
    const double f = edge_flow[e];
    worst = std::max(worst, -f);
    net[graph.NodeId(edge.layer - 1, edge.from)] += f;
    net[graph.NodeId(edge.layer, edge.to())] -= f;
  }
  for (int v = 0; v < graph.num_nodes(); ++v) {
    const double supply = v == graph.source() ? 1.0 : v == graph.sink() ? -1.0 : 0.0;
    worst = std::max(worst, std::abs(net[v] - supply));
  }
  return worst;
}

void StrategyFlow::Validate(double tol) const {
  const double viol = MaxViolation();
  if (!(viol <= tol)) {
    throw InvalidFlowError("conservation or sign violated by " + std::to_string(viol));
  }
}

StrategyFlow StrategyFlow::Path(const LayeredGraph& g, const std::vector<int>& units) {
  if (static_cast<int>(units.size()) != g.n_hat()) {
    throw PreconditionError("path needs one assignment per battlefield");
  }
  StrategyFlow flow(g);
  int j = 0;
  for (int i = 1; i <= g.n_hat(); ++i) {
    const int e = g.EdgeIndex(i, j, units[i - 1]);
    if (e < 0) throw PreconditionError("assignment does not use exactly the budget");
    flow.edge_flow[e] = 1.0;
    j += units[i - 1];
  }
  return flow;
}

StrategyFlow CleanFlow(const StrategyFlow& flow, double clamp_tol) {
  const LayeredGraph& g = flow.graph;
  std::vector<double> f = flow.edge_flow;
  for (double& x : f) {
    if (x < clamp_tol) x = 0.0;
  }
  const int d = g.budget();
  std::vector<double> inflow(d + 1, 0.0), outflow(d + 1, 0.0);
  inflow[0] = 1.0;
  for (int i = 1; i <= g.n_hat(); ++i) {
    std::fill(outflow.begin(), outflow.end(), 0.0);
    for (int e = g.layer_begin(i); e < g.layer_end(i); ++e) outflow[g.edges()[e].from] += f[e];
    std::vector<double> next(d + 1, 0.0);
    for (int j = 0; j <= d; ++j) {
      if (!g.IsNode(i - 1, j)) continue;
      if (outflow[j] > 0.0) {
        const double scale = inflow[j] / outflow[j];
        for (int a = 0; j + a <= d; ++a) {
          const int e = g.EdgeIndex(i, j, a);
          if (e >= 0) f[e] *= scale;
        }
      } else if (inflow[j] > 0.0) {
        // Stranded mass continues on a = 0, or completes the budget at the end.
        const int a = i == g.n_hat() ? d - j : 0;
        f[g.EdgeIndex(i, j, a)] = inflow[j];
      }
    }
    for (int e = g.layer_begin(i); e < g.layer_end(i); ++e) next[g.edges()[e].to()] += f[e];
    inflow.swap(next);
  }
  return StrategyFlow(g, std::move(f));
}

}  // namespace blotto
