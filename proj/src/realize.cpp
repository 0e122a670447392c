// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crnet/realize.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <utility>

#include "crnet/classify.hpp"
#include "crnet/cone.hpp"
#include "crnet/equivalence.hpp"
#include "crnet/errors.hpp"
#include "crnet/linalg.hpp"
#include "crnet/vector_field.hpp"

namespace crnet {
namespace {

[[noreturn]] void broken(const std::string& what) {
  throw Error(ErrorCode::InternalInvariantBroken, what);
}

RationalVector ones(std::size_t n) { return RationalVector(n, 1); }

Rational cross2(const RationalVector& a, const RationalVector& b) {
  return a[0] * b[1] - a[1] * b[0];
}

Rational orient(const RationalVector& a, const RationalVector& b,
                const RationalVector& c) {
  return cross2(vec_sub(b, a), vec_sub(c, a));
}

std::vector<std::size_t> bfs_path(
    const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
    std::size_t to) {
  std::vector<std::size_t> parent(adj.size(), adj.size());
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    if (at == to) {
      std::vector<std::size_t> path{to};
      for (std::size_t n = to; n != from; n = parent[n]) {
        path.push_back(parent[n]);
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t next : adj[at]) {
      if (parent[next] != adj.size()) continue;
      parent[next] = at;
      queue.push_back(next);
    }
  }
  return {};
}

}  // namespace

void recheck_provenance(const EGraph& input, const RealizationResult& result) {
  for (const ProvenanceRecord& rec : result.provenance) {
    for (const Rational& l : rec.lambdas) {
      if (l <= 0) broken("provenance coefficient not positive");
    }
    const bool composing =
        result.kind == RealizationResult::Kind::ZeroSourceElimination;
    const std::vector<std::size_t>& one_side =
        composing ? rec.output_edges : rec.input_edges;
    const std::vector<std::size_t>& many_side =
        composing ? rec.input_edges : rec.output_edges;
    const EGraph& one_graph = composing ? result.graph : input;
    const EGraph& many_graph = composing ? input : result.graph;
    if (one_side.size() != 1 || many_side.size() != rec.lambdas.size() ||
        many_side.empty()) {
      broken("provenance record malformed");
    }
    if (one_side[0] >= one_graph.edges().size()) {
      broken("provenance edge index out of range");
    }
    RationalVector sum(input.dim(), 0);
    for (std::size_t i = 0; i < many_side.size(); ++i) {
      if (many_side[i] >= many_graph.edges().size()) {
        broken("provenance edge index out of range");
      }
      sum = vec_add(
          sum, vec_scale(rec.lambdas[i], many_graph.reaction_vector(many_side[i])));
    }
    if (sum != one_graph.reaction_vector(one_side[0])) {
      broken("provenance combination does not reproduce the edge vector");
    }
  }
}

RealizationResult make_source_only(const EGraph& graph) {
  if (!is_endotactic(graph).holds) {
    throw Error(ErrorCode::NotEndotactic,
                "source-only realization requires an endotactic network");
  }

  const std::vector<std::size_t>& sc = graph.source_node_ids();
  std::vector<RationalVector> nodes;
  std::map<std::size_t, std::size_t> new_id;
  for (std::size_t id : sc) {
    new_id[id] = nodes.size();
    nodes.push_back(graph.node(id));
  }

  std::vector<Edge> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  auto add_edge = [&](std::size_t s, std::size_t t) {
    const auto key = std::make_pair(s, t);
    auto it = edge_index.find(key);
    if (it != edge_index.end()) return it->second;
    edge_index.emplace(key, edges.size());
    edges.push_back({s, t});
    return edges.size() - 1;
  };

  RealizationResult result;
  result.kind = RealizationResult::Kind::SourceOnly;

  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const Edge& edge = graph.edges()[e];
    const std::size_t s_new = new_id.at(edge.source_id);
    ProvenanceRecord rec;
    rec.input_edges = {e};
    if (graph.node_is_source(edge.target_id)) {
      rec.output_edges = {add_edge(s_new, new_id.at(edge.target_id))};
      rec.lambdas = {1};
    } else {
      RationalMatrix diffs;
      std::vector<std::size_t> candidates;
      for (std::size_t id : sc) {
        if (id == edge.source_id) continue;
        candidates.push_back(id);
        diffs.push_back(vec_sub(graph.node(id), graph.source(e)));
      }
      const ConeResult member = cone_member(graph.reaction_vector(e), diffs);
      if (!member.member) {
        throw Error(ErrorCode::ReplacementInfeasible,
                    "no replacement toward other sources for edge " +
                        std::to_string(e));
      }
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (member.witness.lambdas[i] == 0) continue;
        rec.output_edges.push_back(add_edge(s_new, new_id.at(candidates[i])));
        rec.lambdas.push_back(member.witness.lambdas[i]);
      }
    }
    result.provenance.push_back(std::move(rec));
  }

  result.graph = validate(nodes, edges, graph.dim());
  if (!is_source_only(result.graph)) {
    broken("source-only output is not source-only");
  }
  if (!dynamics_included(graph, result.graph).holds) {
    broken("source-only output does not include the input dynamics");
  }
  recheck_provenance(graph, result);
  return result;
}

RealizationResult eliminate_zero_sources(const EGraph& graph,
                                         const RateAssignment& rates) {
  if (!is_weakly_reversible(graph)) {
    throw Error(ErrorCode::NotWeaklyReversible,
                "zero-source elimination requires a weakly reversible network");
  }
  check_rates(graph, rates);
  const VectorField target_field = generate_field(graph, rates);

  struct WorkEdge {
    RationalVector src;
    RationalVector tgt;
    Rational rate;
    std::vector<std::size_t> decomp;  // input edge indices, coefficient 1
  };
  std::vector<WorkEdge> work;
  work.reserve(graph.edges().size());
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    work.push_back({graph.source(e), graph.target(e), rates[e], {e}});
  }

  for (;;) {
    std::map<RationalVector, RationalVector> net;
    for (const WorkEdge& e : work) {
      auto [it, inserted] = net.try_emplace(e.src, RationalVector(graph.dim(), 0));
      for (std::size_t k = 0; k < graph.dim(); ++k) {
        it->second[k] += e.rate * (e.tgt[k] - e.src[k]);
      }
    }
    const RationalVector* star = nullptr;
    for (const auto& [src, coeff] : net) {
      if (is_zero_vector(coeff)) {
        star = &src;
        break;
      }
    }
    if (star == nullptr) break;
    const RationalVector s_star = *star;

    std::vector<WorkEdge> outgoing;
    std::vector<WorkEdge> incoming;
    std::vector<WorkEdge> next;
    for (WorkEdge& e : work) {
      if (e.src == s_star) {
        outgoing.push_back(std::move(e));
      } else if (e.tgt == s_star) {
        incoming.push_back(std::move(e));
      } else {
        next.push_back(std::move(e));
      }
    }
    if (incoming.empty()) broken("zero-coefficient source has no inflow");
    Rational total_out = 0;
    for (const WorkEdge& e : outgoing) total_out += e.rate;
    if (total_out <= 0) broken("zero-coefficient source has no outflow");

    for (const WorkEdge& in : incoming) {
      for (const WorkEdge& out : outgoing) {
        if (in.src == out.tgt) continue;
        const Rational rate = in.rate * out.rate / total_out;
        bool merged = false;
        for (WorkEdge& e : next) {
          if (e.src == in.src && e.tgt == out.tgt) {
            e.rate += rate;
            merged = true;
            break;
          }
        }
        if (!merged) {
          std::vector<std::size_t> decomp = in.decomp;
          decomp.insert(decomp.end(), out.decomp.begin(), out.decomp.end());
          next.push_back({in.src, out.tgt, rate, std::move(decomp)});
        }
      }
    }
    work = std::move(next);
  }

  std::set<RationalVector> used;
  for (const WorkEdge& e : work) {
    used.insert(e.src);
    used.insert(e.tgt);
  }
  std::vector<RationalVector> nodes;
  std::map<RationalVector, std::size_t> node_id;
  for (const RationalVector& coords : graph.nodes()) {
    if (used.count(coords) == 0) continue;
    node_id[coords] = nodes.size();
    nodes.push_back(coords);
  }
  std::vector<Edge> edges;
  RateAssignment out_rates;
  RealizationResult result;
  result.kind = RealizationResult::Kind::ZeroSourceElimination;
  for (std::size_t i = 0; i < work.size(); ++i) {
    edges.push_back({node_id.at(work[i].src), node_id.at(work[i].tgt)});
    out_rates.push_back(work[i].rate);
    result.provenance.push_back({work[i].decomp, {i}, ones(work[i].decomp.size())});
  }
  result.graph = validate(nodes, edges, graph.dim());
  result.rate_map = out_rates;

  if (!is_weakly_reversible(result.graph)) {
    broken("elimination output is not weakly reversible");
  }
  if (!fields_equal(generate_field(result.graph, out_rates), target_field)) {
    broken("elimination changed the generated field");
  }
  std::set<RationalVector> out_sources;
  for (std::size_t id : result.graph.source_node_ids()) {
    out_sources.insert(result.graph.node(id));
  }
  std::set<RationalVector> field_exponents;
  for (const auto& [exponent, coeff] : target_field.terms) {
    field_exponents.insert(exponent);
  }
  if (out_sources != field_exponents) {
    broken("elimination output sources differ from the field's exponents");
  }
  recheck_provenance(graph, result);
  return result;
}

RealizationResult ewr_realize_2d(const EGraph& graph) {
  if (graph.dim() != 2) {
    throw Error(ErrorCode::WrongDimension,
                "construction requires an ambient dimension of 2");
  }
  if (stoichiometric_subspace(graph).size() != 2) {
    throw Error(ErrorCode::WrongDimension,
                "construction requires a two-dimensional stoichiometric subspace");
  }
  if (!is_strongly_endotactic(graph).holds) {
    throw Error(ErrorCode::NotStronglyEndotactic,
                "construction requires a strongly endotactic network");
  }

  const std::vector<std::size_t>& sc_ids = graph.source_node_ids();
  const std::size_t n = sc_ids.size();
  RationalMatrix pts;
  pts.reserve(n);
  for (std::size_t id : sc_ids) pts.push_back(graph.node(id));
  for (const RationalVector& p : pts) {
    if (!on_relative_hull_boundary(p, pts)) {
      throw Error(ErrorCode::InteriorSourcePresent,
                  "source " + vector_to_string(p) +
                      " lies in the hull's relative interior");
    }
  }

  // Convex hull, counterclockwise, strict vertices only (monotone chain).
  RationalMatrix sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  RationalMatrix hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (const RationalVector& p : sorted) {
      while (hull.size() >= base + 2 &&
             orient(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0) {
        hull.pop_back();
      }
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(sorted.begin(), sorted.end());
  }
  if (hull.size() < 3) {
    broken("strongly endotactic planar network with a degenerate hull");
  }

  std::map<RationalVector, std::size_t> sc_index;
  for (std::size_t i = 0; i < n; ++i) sc_index[pts[i]] = i;

  // Stage 1: both directions between every two sources sharing a hull face.
  std::set<std::pair<std::size_t, std::size_t>> g1;
  for (std::size_t f = 0; f < hull.size(); ++f) {
    const RationalVector& a = hull[f];
    const RationalVector& b = hull[(f + 1) % hull.size()];
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (orient(a, b, pts[i]) == 0) members.push_back(i);
    }
    for (std::size_t i : members) {
      for (std::size_t j : members) {
        if (i != j) g1.insert({i, j});
      }
    }
  }

  // Stage 2: per-source pruning toward the input cone.
  std::set<std::pair<std::size_t, std::size_t>> g2;
  std::set<std::pair<std::size_t, std::size_t>> dropped;
  for (std::size_t i = 0; i < n; ++i) {
    RationalMatrix gens_in;
    for (std::size_t e : graph.edges_from(sc_ids[i])) {
      gens_in.push_back(graph.reaction_vector(e));
    }
    std::vector<std::size_t> targets;
    RationalMatrix gens_g1;
    for (std::size_t j = 0; j < n; ++j) {
      if (g1.count({i, j}) != 0) {
        targets.push_back(j);
        gens_g1.push_back(vec_sub(pts[j], pts[i]));
      }
    }
    if (targets.empty()) broken("hull-boundary source with no face partner");

    if (relint_contained(gens_in, gens_g1).member) {
      for (std::size_t j : targets) g2.insert({i, j});
      continue;
    }

    bool parallel = true;
    bool opposite = false;
    for (const RationalVector& u : gens_g1) {
      if (cross2(gens_g1[0], u) != 0) parallel = false;
      if (dot(gens_g1[0], u) < 0) opposite = true;
    }
    if (parallel && opposite) {
      // The face line does not cover the input cone; add one edge toward
      // the lexicographically smallest source off the line.
      for (std::size_t j : targets) g2.insert({i, j});
      bool added = false;
      for (const auto& [coords, j] : sc_index) {
        if (j == i) continue;
        if (cross2(gens_g1[0], vec_sub(coords, pts[i])) != 0) {
          g2.insert({i, j});
          added = true;
          break;
        }
      }
      if (!added) broken("no source off a hull face line");
    } else {
      // Corner whose input cone is a single boundary ray: keep only the
      // face edges along that ray.
      RationalVector ray(2, 0);
      for (const RationalVector& v : gens_in) ray = vec_add(ray, v);
      if (is_zero_vector(ray)) {
        throw Error(ErrorCode::PostconditionFailed,
                    "corner source with a degenerate reaction cone");
      }
      bool kept = false;
      for (std::size_t j : targets) {
        const RationalVector d = vec_sub(pts[j], pts[i]);
        if (cross2(ray, d) == 0 && dot(ray, d) > 0) {
          g2.insert({i, j});
          kept = true;
        } else {
          dropped.insert({i, j});
        }
      }
      if (!kept) {
        throw Error(ErrorCode::PostconditionFailed,
                    "corner source keeps no face edge along its ray");
      }
    }
  }

  // Stage 3: restore strong connectivity with cone-preserving paths.
  std::vector<RationalMatrix> cones(n);
  for (const auto& [i, j] : g2) {
    cones[i].push_back(vec_sub(pts[j], pts[i]));
  }
  std::vector<std::vector<std::size_t>> allowed(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      if (cone_member(vec_sub(pts[q], pts[p]), cones[p]).member) {
        allowed[p].push_back(q);
      }
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> final_edges = g2;
  for (const auto& [s, t] : dropped) {
    if (final_edges.count({s, t}) != 0) continue;
    const std::vector<std::size_t> path = bfs_path(allowed, s, t);
    if (path.empty()) {
      throw Error(ErrorCode::PostconditionFailed,
                  "no cone-preserving replacement path for a dropped edge");
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      final_edges.insert({path[k], path[k + 1]});
    }
  }

  std::vector<Edge> edges;
  edges.reserve(final_edges.size());
  for (const auto& [i, j] : final_edges) edges.push_back({i, j});

  RealizationResult result;
  result.kind = RealizationResult::Kind::ExtremallyWeaklyReversible2D;
  result.graph = validate(pts, edges, 2);

  if (!is_weakly_reversible(result.graph)) {
    throw Error(ErrorCode::PostconditionFailed,
                "output is not weakly reversible");
  }
  if (!is_strongly_endotactic(result.graph).holds) {
    throw Error(ErrorCode::PostconditionFailed,
                "output is not strongly endotactic");
  }
  if (!dynamics_included(graph, result.graph).holds) {
    throw Error(ErrorCode::PostconditionFailed,
                "output does not include the input dynamics");
  }

  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto out_id = result.graph.find_node(graph.source(e));
    if (!out_id.has_value()) broken("input source missing from output");
    const std::vector<std::size_t> out = result.graph.edges_from(*out_id);
    RationalMatrix gens;
    for (std::size_t oe : out) gens.push_back(result.graph.reaction_vector(oe));
    const ConeResult member = cone_member(graph.reaction_vector(e), gens);
    if (!member.member) broken("input edge vector escapes the output cone");
    ProvenanceRecord rec;
    rec.input_edges = {e};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (member.witness.lambdas[i] == 0) continue;
      rec.output_edges.push_back(out[i]);
      rec.lambdas.push_back(member.witness.lambdas[i]);
    }
    if (rec.output_edges.empty()) {
      // v(e) decomposed to the zero combination would contradict v(e) != 0.
      broken("empty decomposition for an input edge");
    }
    result.provenance.push_back(std::move(rec));
  }
  recheck_provenance(graph, result);
  return result;
}

}  // namespace crnet
