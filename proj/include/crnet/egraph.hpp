// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crnet/rational.hpp"

namespace crnet {

struct Edge {
  std::size_t source_id;
  std::size_t target_id;
};

/// A Euclidean embedded graph: distinct nonnegative rational points joined by
/// directed edges with nonzero reaction vectors. Immutable once built; use
/// validate() to construct one from raw data.
class EGraph {
 public:
  EGraph() = default;  // empty graph; real instances come from validate()

  std::size_t dim() const { return dim_; }
  const std::vector<RationalVector>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const RationalVector& node(std::size_t id) const { return nodes_[id]; }
  const RationalVector& source(std::size_t edge_index) const {
    return nodes_[edges_[edge_index].source_id];
  }
  const RationalVector& target(std::size_t edge_index) const {
    return nodes_[edges_[edge_index].target_id];
  }
  RationalVector reaction_vector(std::size_t edge_index) const {
    return vec_sub(target(edge_index), source(edge_index));
  }

  /// Node ids of the source complexes SC(G), ascending, no duplicates.
  const std::vector<std::size_t>& source_node_ids() const { return source_node_ids_; }

  std::vector<std::size_t> edges_from(std::size_t node_id) const;
  std::optional<std::size_t> find_node(const RationalVector& label) const;
  bool node_is_source(std::size_t node_id) const;

 private:
  friend EGraph validate(const std::vector<RationalVector>& raw_nodes,
                         const std::vector<Edge>& raw_edges, std::size_t dim);

  std::size_t dim_ = 0;
  std::vector<RationalVector> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> source_node_ids_;
};

/// Per-edge positive rate constants, indexed parallel to EGraph::edges().
using RateAssignment = std::vector<Rational>;

/// Throws RateLengthMismatch unless rates match the edge list and are all > 0.
void check_rates(const EGraph& graph, const RateAssignment& rates);

/// Checks all structural invariants and builds the graph.
/// Throws DuplicateNode, SelfLoopEdge, IsolatedNode, NegativeCoordinate,
/// DimensionMismatch, or MergeableParallelEdges.
EGraph validate(const std::vector<RationalVector>& raw_nodes, const std::vector<Edge>& raw_edges,
                std::size_t dim);

/// True iff every edge has its exact reverse in the graph.
bool is_reversible(const EGraph& graph);

/// True iff every edge's endpoints lie in one strongly connected component.
bool is_weakly_reversible(const EGraph& graph);

/// True iff every target node is also the source of some edge.
bool is_source_only(const EGraph& graph);

/// Strongly connected component id per node (Tarjan order, deterministic).
std::vector<std::size_t> strongly_connected_component_ids(const EGraph& graph);

/// Replaces edge e by edges from s(e) toward each replacement target.
/// Requires v(e) in the relative interior of the cone of replacement reaction
/// vectors; throws SplitConeViolation otherwise. Nodes left without any edge
/// are dropped; new targets are appended as nodes in the given order.
EGraph split_edge(const EGraph& graph, std::size_t edge_index,
                  const std::vector<RationalVector>& replacement_targets);

}  // namespace crnet
