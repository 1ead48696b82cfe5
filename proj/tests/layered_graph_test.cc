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

#include <vector>

#include "blotto/errors.h"
#include "blotto/layered_graph.h"
#include "blotto/payoff.h"
#include "gtest/gtest.h"

namespace blotto {
namespace {

TEST(LayeredGraphTest, LiveCountsMatchClosedForm) {
  for (int n_hat = 1; n_hat <= 5; ++n_hat) {
    for (int d = 0; d <= 7; ++d) {
      const LayeredGraph g(n_hat, d);
      EXPECT_EQ(g.num_edges(), LayeredGraph::EdgeCount(n_hat, d));
      EXPECT_EQ(g.num_nodes(), LayeredGraph::NodeCount(n_hat, d));
    }
  }
  EXPECT_EQ(LayeredGraph::EdgeCount(3, 2), 12);
}

TEST(LayeredGraphTest, PathsAreFullAssignments) {
  // Counting source-sink paths by dynamic programming reproduces |M(D, n_hat)|.
  for (int n_hat = 1; n_hat <= 4; ++n_hat) {
    for (int d = 0; d <= 6; ++d) {
      const LayeredGraph g(n_hat, d);
      std::vector<long> paths(g.num_nodes(), 0);
      paths[g.source()] = 1;
      for (const auto& e : g.edges()) {
        EXPECT_TRUE(g.IsNode(e.layer, e.to()));
        paths[g.NodeId(e.layer, e.to())] += paths[g.NodeId(e.layer - 1, e.from)];
      }
      EXPECT_EQ(paths[g.sink()], static_cast<long>(CountStrategies(d, n_hat, true)));
    }
  }
}

TEST(LayeredGraphTest, EdgeIndexRoundTrip) {
  const LayeredGraph g(4, 5);
  for (int k = 0; k < g.num_edges(); ++k) {
    const auto& e = g.edges()[k];
    EXPECT_EQ(g.EdgeIndex(e.layer, e.from, e.units), k);
    EXPECT_GE(k, g.layer_begin(e.layer));
    EXPECT_LT(k, g.layer_end(e.layer));
  }
  EXPECT_EQ(g.EdgeIndex(4, 0, 4), -1);  // does not reach the sink
  EXPECT_EQ(g.EdgeIndex(1, 1, 0), -1);  // origin is not a node
}

TEST(StrategyFlowTest, PathFlowIsValid) {
  const LayeredGraph g(3, 2);
  const StrategyFlow f = StrategyFlow::Path(g, {0, 1, 1});
  EXPECT_EQ(f.MaxViolation(), 0.0);
  EXPECT_THROW(StrategyFlow::Path(g, {0, 1, 0}), PreconditionError);
}

TEST(StrategyFlowTest, ValidateDetectsBrokenConservation) {
  const LayeredGraph g(3, 2);
  StrategyFlow f = StrategyFlow::Path(g, {0, 1, 1});
  f.edge_flow[g.EdgeIndex(2, 0, 1)] = 0.5;
  EXPECT_GT(f.MaxViolation(), 0.4);
  EXPECT_THROW(f.Validate(), InvalidFlowError);
}

TEST(StrategyFlowTest, CleanFlowRestoresUnitThroughput) {
  const LayeredGraph g(3, 2);
  StrategyFlow f = StrategyFlow::Path(g, {1, 1, 0});
  for (double& x : f.edge_flow) x *= 1.0 + 1e-10;
  f.edge_flow[g.EdgeIndex(1, 0, 0)] = -1e-12;
  const StrategyFlow c = CleanFlow(f);
  EXPECT_LT(c.MaxViolation(), 1e-14);
  for (double x : c.edge_flow) EXPECT_GE(x, 0.0);
}

}  // namespace
}  // namespace blotto
