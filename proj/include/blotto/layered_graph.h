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

#ifndef BLOTTO_LAYERED_GRAPH_H_
#define BLOTTO_LAYERED_GRAPH_H_

#include <vector>

namespace blotto {

// Layered DAG whose source-to-sink paths are the full assignments of `budget`
// resources over n_hat battlefields. Node (i, j) means j resources were placed
// on the first i battlefields; an edge (i-1, j) -> (i, j + a) places a on
// battlefield i. Only nodes on some source-to-sink path are kept: layer 0 holds
// the source (0, 0), layer n_hat holds the sink (n_hat, budget).
class LayeredGraph {
 public:
  struct Edge {
    int layer;  // 1..n_hat
    int from;   // resources placed before this layer
    int units;  // resources placed on battlefield `layer`
    int to() const { return from + units; }
  };

  LayeredGraph(int n_hat, int budget);

  int n_hat() const { return n_hat_; }
  int budget() const { return budget_; }

  // Edges are ordered by layer, then origin, then units.
  const std::vector<Edge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int layer_begin(int layer) const { return layer_start_[layer - 1]; }
  int layer_end(int layer) const { return layer_start_[layer]; }
  // Index of the edge (layer-1, from) -> (layer, from + units), or -1.
  int EdgeIndex(int layer, int from, int units) const;

  bool IsNode(int layer, int j) const;
  int num_nodes() const { return num_nodes_; }
  // Dense id in [0, num_nodes): source 0, sink num_nodes - 1.
  int NodeId(int layer, int j) const;
  int source() const { return 0; }
  int sink() const { return num_nodes_ - 1; }

  // Closed-form counts used by the size checks.
  static long EdgeCount(int n_hat, int budget);
  static long NodeCount(int n_hat, int budget);

  bool operator==(const LayeredGraph& o) const {
    return n_hat_ == o.n_hat_ && budget_ == o.budget_;
  }

 private:
  int n_hat_;
  int budget_;
  int num_nodes_;
  std::vector<Edge> edges_;
  std::vector<int> layer_start_;
};

inline constexpr double kFeasibilityTolerance = 1e-7;

// A unit source-to-sink flow on a LayeredGraph.
struct StrategyFlow {
  LayeredGraph graph;
  std::vector<double> edge_flow;

  explicit StrategyFlow(LayeredGraph g)
      : graph(std::move(g)), edge_flow(graph.num_edges(), 0.0) {}
  StrategyFlow(LayeredGraph g, std::vector<double> flow);

  // Largest violation of nonnegativity, conservation and unit supply.
  double MaxViolation() const;
  // Throws InvalidFlowError if MaxViolation() > tol.
  void Validate(double tol = kFeasibilityTolerance) const;

  // Point mass on one full assignment.
  static StrategyFlow Path(const LayeredGraph& g, const std::vector<int>& units);
};

// Clamps |f| < clamp_tol to zero (and any negative flow), then rescales each
// layer so that the flow entering the layer matches the flow leaving the
// previous one, giving exact unit throughput.
StrategyFlow CleanFlow(const StrategyFlow& flow, double clamp_tol = 1e-9);

}  // namespace blotto

#endif  // BLOTTO_LAYERED_GRAPH_H_
