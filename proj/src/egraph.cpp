// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crnet/egraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stack>

#include "crnet/cone.hpp"
#include "crnet/errors.hpp"

namespace crnet {

std::vector<std::size_t> EGraph::edges_from(std::size_t node_id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].source_id == node_id) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> EGraph::find_node(const RationalVector& label) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == label) return i;
  }
  return std::nullopt;
}

bool EGraph::node_is_source(std::size_t node_id) const {
  return std::binary_search(source_node_ids_.begin(), source_node_ids_.end(), node_id);
}

void check_rates(const EGraph& graph, const RateAssignment& rates) {
  if (rates.size() != graph.edges().size()) {
    throw Error(ErrorCode::RateLengthMismatch,
                "expected " + std::to_string(graph.edges().size()) + " rates, got " +
                    std::to_string(rates.size()));
  }
  for (std::size_t i = 0; i < rates.size(); ++i) {
    if (rates[i] <= 0) {
      throw Error(ErrorCode::RateLengthMismatch,
                  "rate for edge " + std::to_string(i) + " is not positive");
    }
  }
}

EGraph validate(const std::vector<RationalVector>& raw_nodes, const std::vector<Edge>& raw_edges,
                std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");
  if (raw_nodes.empty()) throw Error(ErrorCode::DimensionMismatch, "node list is empty");
  for (std::size_t i = 0; i < raw_nodes.size(); ++i) {
    if (raw_nodes[i].size() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "node " + std::to_string(i) + " has length " +
                      std::to_string(raw_nodes[i].size()) + ", expected " + std::to_string(dim));
    }
    for (const auto& c : raw_nodes[i]) {
      if (c < 0) {
        throw Error(ErrorCode::NegativeCoordinate,
                    "node " + std::to_string(i) + " = " + vector_to_string(raw_nodes[i]));
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (raw_nodes[j] == raw_nodes[i]) {
        throw Error(ErrorCode::DuplicateNode,
                    "nodes " + std::to_string(j) + " and " + std::to_string(i) + " are both " +
                        vector_to_string(raw_nodes[i]));
      }
    }
  }

  std::vector<bool> touched(raw_nodes.size(), false);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    const Edge& e = raw_edges[i];
    if (e.source_id >= raw_nodes.size() || e.target_id >= raw_nodes.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "edge " + std::to_string(i) + " references a node index out of range");
    }
    if (e.source_id == e.target_id) {
      throw Error(ErrorCode::SelfLoopEdge, "edge " + std::to_string(i) + " at node " +
                                               vector_to_string(raw_nodes[e.source_id]));
    }
    if (!seen.insert({e.source_id, e.target_id}).second) {
      throw Error(ErrorCode::MergeableParallelEdges,
                  "duplicate edge " + vector_to_string(raw_nodes[e.source_id]) + " -> " +
                      vector_to_string(raw_nodes[e.target_id]));
    }
    touched[e.source_id] = true;
    touched[e.target_id] = true;
  }
  for (std::size_t i = 0; i < raw_nodes.size(); ++i) {
    if (!touched[i]) {
      throw Error(ErrorCode::IsolatedNode,
                  "node " + std::to_string(i) + " = " + vector_to_string(raw_nodes[i]) +
                      " has no incident edge");
    }
  }

  EGraph g;
  g.dim_ = dim;
  g.nodes_ = raw_nodes;
  g.edges_ = raw_edges;
  std::set<std::size_t> sources;
  for (const Edge& e : raw_edges) sources.insert(e.source_id);
  g.source_node_ids_.assign(sources.begin(), sources.end());
  return g;
}

bool is_reversible(const EGraph& graph) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const Edge& e : graph.edges()) pairs.insert({e.source_id, e.target_id});
  for (const Edge& e : graph.edges()) {
    if (!pairs.count({e.target_id, e.source_id})) return false;
  }
  return true;
}

std::vector<std::size_t> strongly_connected_component_ids(const EGraph& graph) {
  // Iterative Tarjan.
  const std::size_t n = graph.nodes().size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : graph.edges()) adj[e.source_id].push_back(e.target_id);

  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), lowlink(n, 0), component(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0, next_component = 0;

  struct Frame {
    std::size_t node;
    std::size_t child;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::stack<Frame> frames;
    frames.push({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.top();
      if (f.child < adj[f.node].size()) {
        std::size_t next = adj[f.node][f.child++];
        if (index[next] == kUnvisited) {
          index[next] = lowlink[next] = next_index++;
          stack.push_back(next);
          on_stack[next] = true;
          frames.push({next, 0});
        } else if (on_stack[next]) {
          lowlink[f.node] = std::min(lowlink[f.node], index[next]);
        }
      } else {
        if (lowlink[f.node] == index[f.node]) {
          while (true) {
            std::size_t v = stack.back();
            stack.pop_back();
            on_stack[v] = false;
            component[v] = next_component;
            if (v == f.node) break;
          }
          ++next_component;
        }
        std::size_t done = f.node;
        frames.pop();
        if (!frames.empty()) {
          lowlink[frames.top().node] = std::min(lowlink[frames.top().node], lowlink[done]);
        }
      }
    }
  }
  return component;
}

bool is_weakly_reversible(const EGraph& graph) {
  auto component = strongly_connected_component_ids(graph);
  for (const Edge& e : graph.edges()) {
    if (component[e.source_id] != component[e.target_id]) return false;
  }
  return true;
}

bool is_source_only(const EGraph& graph) {
  for (const Edge& e : graph.edges()) {
    if (!graph.node_is_source(e.target_id)) return false;
  }
  return true;
}

EGraph split_edge(const EGraph& graph, std::size_t edge_index,
                  const std::vector<RationalVector>& replacement_targets) {
  if (edge_index >= graph.edges().size()) {
    throw Error(ErrorCode::DimensionMismatch, "edge index out of range");
  }
  const RationalVector s = graph.source(edge_index);
  const RationalVector v = graph.reaction_vector(edge_index);

  RationalMatrix replacement_vectors;
  for (const auto& t : replacement_targets) {
    if (t.size() != graph.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "replacement target has wrong length");
    }
    replacement_vectors.push_back(vec_sub(t, s));
  }
  auto relint = relint_member(v, replacement_vectors);
  if (!relint.member) {
    throw Error(ErrorCode::SplitConeViolation,
                "v(e) = " + vector_to_string(v) +
                    " is not in the relative interior of the replacement cone");
  }

  // Rebuild: old nodes in order, then unseen replacement targets.
  std::vector<RationalVector> new_nodes = graph.nodes();
  std::vector<std::size_t> target_ids;
  for (const auto& t : replacement_targets) {
    auto found = std::find(new_nodes.begin(), new_nodes.end(), t);
    if (found == new_nodes.end()) {
      new_nodes.push_back(t);
      target_ids.push_back(new_nodes.size() - 1);
    } else {
      target_ids.push_back(static_cast<std::size_t>(found - new_nodes.begin()));
    }
  }
  std::vector<Edge> new_edges;
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    if (i != edge_index) new_edges.push_back(graph.edges()[i]);
  }
  for (std::size_t id : target_ids) new_edges.push_back({graph.edges()[edge_index].source_id, id});

  // Drop nodes that no longer touch any edge, compacting ids.
  std::vector<bool> used(new_nodes.size(), false);
  for (const Edge& e : new_edges) used[e.source_id] = used[e.target_id] = true;
  std::vector<std::size_t> remap(new_nodes.size(), 0);
  std::vector<RationalVector> kept_nodes;
  for (std::size_t i = 0; i < new_nodes.size(); ++i) {
    if (used[i]) {
      remap[i] = kept_nodes.size();
      kept_nodes.push_back(new_nodes[i]);
    }
  }
  for (Edge& e : new_edges) {
    e.source_id = remap[e.source_id];
    e.target_id = remap[e.target_id];
  }
  return validate(kept_nodes, new_edges, graph.dim());
}

}  // namespace crnet
