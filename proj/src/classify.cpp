// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crnet/classify.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <utility>

#include "crnet/errors.hpp"
#include "crnet/linalg.hpp"
#include "crnet/lp.hpp"

namespace crnet {
namespace {

int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

// Witness for sign(w . reps[j]) == sigma[j] over the constrained prefix,
// where at least one sigma entry is nonzero (so any solution is nonzero).
// Strict inequalities are tightened to >= delta and delta is maximized;
// returns empty when the maximum is zero.
RationalVector strict_prefix_witness(const RationalMatrix& reps,
                                     const std::vector<int>& sigma,
                                     std::size_t dim) {
  const std::size_t k = sigma.size();
  std::size_t strict = 0;
  for (int s : sigma) {
    if (s != 0) ++strict;
  }
  const std::size_t delta_col = 2 * dim;
  const std::size_t slack0 = delta_col + 1;
  const std::size_t t_col = slack0 + strict;

  LpProblem lp;
  lp.num_vars = t_col + 1;
  lp.rows.assign(k + 1, RationalVector(lp.num_vars, 0));
  lp.rhs.assign(k + 1, 0);
  lp.rhs[k] = 1;
  lp.objective.assign(lp.num_vars, 0);
  lp.objective[delta_col] = 1;

  std::size_t slack = slack0;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t c = 0; c < dim; ++c) {
      lp.rows[j][c] = reps[j][c];
      lp.rows[j][dim + c] = -reps[j][c];
    }
    if (sigma[j] > 0) {
      lp.rows[j][delta_col] = -1;
      lp.rows[j][slack++] = -1;
    } else if (sigma[j] < 0) {
      lp.rows[j][delta_col] = 1;
      lp.rows[j][slack++] = 1;
    }
  }
  lp.rows[k][delta_col] = 1;
  lp.rows[k][t_col] = 1;

  const LpSolution s = solve_lp(lp);
  if (s.status != LpStatus::Optimal) {
    throw Error(ErrorCode::InternalInvariantBroken,
                "sign cell program not optimal");
  }
  if (s.objective_value == 0) return {};
  RationalVector w(dim);
  for (std::size_t c = 0; c < dim; ++c) w[c] = s.x[c] - s.x[dim + c];
  return w;
}

void descend(const RationalMatrix& reps, std::size_t dim, std::size_t depth,
             std::vector<int>& sigma, const RationalVector& witness,
             bool all_zero_prefix,
             std::vector<std::pair<std::vector<int>, RationalVector>>& out) {
  if (depth == reps.size()) {
    out.emplace_back(sigma, witness);
    return;
  }
  const int free_sign = sign_of(dot(witness, reps[depth]));
  for (int s = -1; s <= 1; ++s) {
    sigma.push_back(s);
    if (s == free_sign) {
      descend(reps, dim, depth + 1, sigma, witness, all_zero_prefix && s == 0,
              out);
    } else if (s == 0 && all_zero_prefix) {
      RationalMatrix prefix(reps.begin(),
                            reps.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
      RationalMatrix null_basis = nullspace_basis(prefix, dim);
      if (!null_basis.empty()) {
        descend(reps, dim, depth + 1, sigma, null_basis[0], true, out);
      }
    } else {
      RationalVector child = strict_prefix_witness(reps, sigma, dim);
      if (!child.empty()) {
        descend(reps, dim, depth + 1, sigma, child, false, out);
      }
    }
    sigma.pop_back();
  }
}

// Direction set for the endotacticity predicates: every reaction vector plus
// every difference of distinct sources, deduplicated exactly.
struct DirectionTable {
  RationalMatrix dirs;
  std::map<RationalVector, std::size_t> index_of;
  std::vector<std::size_t> edge_dir;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;

  std::size_t add(const RationalVector& v) {
    auto it = index_of.find(v);
    if (it != index_of.end()) return it->second;
    index_of.emplace(v, dirs.size());
    dirs.push_back(v);
    return dirs.size() - 1;
  }

  int pair_sign(const std::vector<int>& signs, std::size_t a,
                std::size_t b) const {
    if (a < b) return signs[pair_index.at({a, b})];
    return -signs[pair_index.at({b, a})];
  }
};

DirectionTable build_direction_table(const EGraph& g) {
  DirectionTable t;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    t.edge_dir.push_back(t.add(g.reaction_vector(e)));
  }
  const std::vector<std::size_t>& src = g.source_node_ids();
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = i + 1; j < src.size(); ++j) {
      t.pair_index[{src[i], src[j]}] =
          t.add(vec_sub(g.node(src[i]), g.node(src[j])));
    }
  }
  return t;
}

// Is some edge j a valid counter for edge i under the cell's signs?
bool countered_in_cell(const EGraph& g, const DirectionTable& t,
                       const std::vector<int>& signs, std::size_t edge_i,
                       bool strong) {
  const std::size_t si = g.edges()[edge_i].source_id;
  for (std::size_t j = 0; j < g.edges().size(); ++j) {
    if (signs[t.edge_dir[j]] != 1) continue;
    const std::size_t sj = g.edges()[j].source_id;
    if (sj == si) continue;
    if (t.pair_sign(signs, sj, si) != -1) continue;
    if (strong) {
      bool minimal = true;
      for (std::size_t b : g.source_node_ids()) {
        if (b == sj) continue;
        if (t.pair_sign(signs, sj, b) > 0) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
    }
    return true;
  }
  return false;
}

EndotacticResult endotactic_impl(const EGraph& g, bool strong) {
  const DirectionTable t = build_direction_table(g);
  const std::vector<SignCell> cells = enumerate_sign_cells(t.dirs, g.dim());
  for (const SignCell& cell : cells) {
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      if (cell.signs[t.edge_dir[i]] != -1) continue;
      if (!countered_in_cell(g, t, cell.signs, i, strong)) {
        recheck_endotactic_violation(g, cell.witness_w, i, strong);
        EndotacticResult r;
        r.holds = false;
        r.w = cell.witness_w;
        r.edge_index = i;
        return r;
      }
    }
  }
  EndotacticResult r;
  r.holds = true;
  return r;
}

}  // namespace

std::vector<SignCell> enumerate_sign_cells(const RationalMatrix& directions,
                                           std::size_t dim) {
  for (const RationalVector& d : directions) {
    if (d.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "direction dimension does not match ambient dimension");
    }
  }
  std::vector<SignCell> out;
  if (dim == 0) return out;

  RationalMatrix reps;
  std::map<RationalVector, std::size_t> rep_index;
  std::vector<std::size_t> entry_rep(directions.size(), 0);
  std::vector<int> entry_flip(directions.size(), 0);
  for (std::size_t i = 0; i < directions.size(); ++i) {
    if (is_zero_vector(directions[i])) continue;
    RationalVector canon = primitive_direction(directions[i]);
    int flip = 1;
    for (const Rational& c : canon) {
      if (c != 0) {
        if (c < 0) {
          canon = vec_scale(Rational(-1), canon);
          flip = -1;
        }
        break;
      }
    }
    auto it = rep_index.find(canon);
    std::size_t idx;
    if (it == rep_index.end()) {
      idx = reps.size();
      rep_index.emplace(canon, idx);
      reps.push_back(canon);
    } else {
      idx = it->second;
    }
    entry_rep[i] = idx;
    entry_flip[i] = flip;
  }

  RationalVector root(dim, 0);
  root[0] = 1;
  std::vector<int> sigma;
  std::vector<std::pair<std::vector<int>, RationalVector>> rep_cells;
  descend(reps, dim, 0, sigma, root, true, rep_cells);

  out.reserve(rep_cells.size());
  for (auto& [rep_signs, witness] : rep_cells) {
    SignCell cell;
    cell.witness_w = std::move(witness);
    cell.signs.resize(directions.size());
    for (std::size_t i = 0; i < directions.size(); ++i) {
      cell.signs[i] =
          entry_flip[i] == 0 ? 0 : entry_flip[i] * rep_signs[entry_rep[i]];
    }
    recheck_sign_cell(directions, cell);
    out.push_back(std::move(cell));
  }
  return out;
}

void recheck_sign_cell(const RationalMatrix& directions,
                       const SignCell& cell) {
  if (is_zero_vector(cell.witness_w) ||
      cell.signs.size() != directions.size()) {
    throw Error(ErrorCode::InternalInvariantBroken, "sign cell malformed");
  }
  for (std::size_t i = 0; i < directions.size(); ++i) {
    if (sign_of(dot(cell.witness_w, directions[i])) != cell.signs[i]) {
      throw Error(ErrorCode::InternalInvariantBroken,
                  "sign cell witness does not realize its signs");
    }
  }
}

ConeResult is_consistent(const EGraph& graph) {
  RationalMatrix vectors;
  vectors.reserve(graph.edges().size());
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    vectors.push_back(graph.reaction_vector(e));
  }
  return relint_member(RationalVector(graph.dim(), 0), vectors);
}

EndotacticResult is_endotactic(const EGraph& graph) {
  return endotactic_impl(graph, false);
}

EndotacticResult is_strongly_endotactic(const EGraph& graph) {
  return endotactic_impl(graph, true);
}

void recheck_endotactic_violation(const EGraph& graph, const RationalVector& w,
                                  std::size_t edge_index, bool strong) {
  if (is_zero_vector(w) || edge_index >= graph.edges().size()) {
    throw Error(ErrorCode::InternalInvariantBroken,
                "endotacticity violation malformed");
  }
  if (dot(w, graph.reaction_vector(edge_index)) >= 0) {
    throw Error(ErrorCode::InternalInvariantBroken,
                "claimed violating edge does not decrease along w");
  }
  const RationalVector& si = graph.source(edge_index);
  for (std::size_t j = 0; j < graph.edges().size(); ++j) {
    if (dot(w, graph.reaction_vector(j)) <= 0) continue;
    if (dot(w, vec_sub(graph.source(j), si)) >= 0) continue;
    if (strong) {
      bool minimal = true;
      for (std::size_t b : graph.source_node_ids()) {
        if (dot(w, vec_sub(graph.source(j), graph.node(b))) > 0) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
    }
    throw Error(ErrorCode::InternalInvariantBroken,
                "claimed violation is countered");
  }
}

EGraph extremal_subnetwork(const EGraph& graph) {
  const std::vector<std::size_t>& src = graph.source_node_ids();
  RationalMatrix points;
  points.reserve(src.size());
  for (std::size_t id : src) points.push_back(graph.node(id));

  std::set<std::size_t> extremal;
  for (std::size_t id : src) {
    if (on_relative_hull_boundary(graph.node(id), points)) extremal.insert(id);
  }
  if (extremal.empty()) {
    throw Error(ErrorCode::EmptyExtremalSet,
                "no source lies on the hull boundary");
  }

  std::set<std::size_t> kept_nodes;
  std::vector<Edge> kept_edges;
  for (const Edge& e : graph.edges()) {
    if (extremal.count(e.source_id) == 0) continue;
    kept_nodes.insert(e.source_id);
    kept_nodes.insert(e.target_id);
    kept_edges.push_back(e);
  }

  std::map<std::size_t, std::size_t> remap;
  std::vector<RationalVector> nodes;
  for (std::size_t id : kept_nodes) {
    remap[id] = nodes.size();
    nodes.push_back(graph.node(id));
  }
  std::vector<Edge> edges;
  edges.reserve(kept_edges.size());
  for (const Edge& e : kept_edges) {
    edges.push_back({remap[e.source_id], remap[e.target_id]});
  }
  return validate(nodes, edges, graph.dim());
}

bool is_extremally_weakly_reversible(const EGraph& graph) {
  return is_weakly_reversible(extremal_subnetwork(graph));
}

bool endotactic_2d_sweep_oracle(const EGraph& graph) {
  if (graph.dim() != 2) {
    throw Error(ErrorCode::WrongDimension, "sweep oracle requires dim 2");
  }
  const DirectionTable t = build_direction_table(graph);

  std::set<RationalVector> normal_set;
  for (const RationalVector& d : t.dirs) {
    RationalVector n = primitive_direction({-d[1], d[0]});
    normal_set.insert(n);
    normal_set.insert(vec_scale(Rational(-1), n));
  }
  std::vector<RationalVector> critical(normal_set.begin(), normal_set.end());
  auto half = [](const RationalVector& v) {
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
  };
  std::sort(critical.begin(), critical.end(),
            [&](const RationalVector& a, const RationalVector& b) {
              const int ha = half(a);
              const int hb = half(b);
              if (ha != hb) return ha < hb;
              return a[0] * b[1] - a[1] * b[0] > 0;
            });

  std::vector<RationalVector> tests = critical;
  for (std::size_t i = 0; i < critical.size(); ++i) {
    const RationalVector& u = critical[i];
    const RationalVector& v = critical[(i + 1) % critical.size()];
    RationalVector mid = vec_add(u, v);
    if (is_zero_vector(mid)) mid = {-u[1], u[0]};
    tests.push_back(mid);
  }

  for (const RationalVector& w : tests) {
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
      if (dot(w, graph.reaction_vector(i)) >= 0) continue;
      bool countered = false;
      for (std::size_t j = 0; j < graph.edges().size(); ++j) {
        if (dot(w, graph.reaction_vector(j)) <= 0) continue;
        if (dot(w, vec_sub(graph.source(j), graph.source(i))) < 0) {
          countered = true;
          break;
        }
      }
      if (!countered) return false;
    }
  }
  return true;
}

ClassificationReport classify_all(const EGraph& graph) {
  ClassificationReport r;
  r.reversible = is_reversible(graph);
  r.weakly_reversible = is_weakly_reversible(graph);
  r.source_only = is_source_only(graph);

  const ConeResult consistent = is_consistent(graph);
  r.consistent = consistent.member;
  r.consistency_witness = consistent.witness;

  const EndotacticResult endo = is_endotactic(graph);
  r.endotactic = endo.holds;
  if (!endo.holds) {
    r.endotactic_violation_w = endo.w;
    r.endotactic_violation_edge = endo.edge_index;
  }

  const EndotacticResult strong = is_strongly_endotactic(graph);
  r.strongly_endotactic = strong.holds;
  if (!strong.holds) {
    r.strong_violation_w = strong.w;
    r.strong_violation_edge = strong.edge_index;
  }

  r.extremally_weakly_reversible = is_extremally_weakly_reversible(graph);
  return r;
}

}  // namespace crnet
