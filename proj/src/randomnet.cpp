// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crnet/randomnet.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

#include "crnet/classify.hpp"
#include "crnet/cone.hpp"
#include "crnet/errors.hpp"
#include "crnet/linalg.hpp"
#include "crnet/vector_field.hpp"

namespace crnet {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
  for (;;) {
    const std::uint64_t v = rng() & mask;
    if (v < n) return v;
  }
}

namespace {

[[noreturn]] void budget_exceeded(const std::string& what) {
  throw Error(ErrorCode::RejectionBudgetExceeded, what);
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[bounded(rng, i)]);
  }
}

RationalVector random_point(std::size_t dim, long bound, bool allow_half,
                            std::mt19937_64& rng) {
  RationalVector p(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (allow_half && bounded(rng, 4) == 0) {
      p[j] = Rational(static_cast<long>(bounded(rng, 2 * bound + 1)), 2);
    } else {
      p[j] = Rational(static_cast<long>(bounded(rng, bound + 1)));
    }
  }
  return p;
}

std::vector<RationalVector> sample_distinct_points(const RandomNetOptions& opt,
                                                   std::mt19937_64& rng) {
  std::vector<RationalVector> points;
  std::set<RationalVector> seen;
  for (std::size_t i = 0; i < opt.num_nodes; ++i) {
    RationalVector p = random_point(opt.dim, opt.coord_bound, opt.allow_half, rng);
    if (seen.insert(p).second) points.push_back(std::move(p));
  }
  return points;
}

EGraph assemble(const std::vector<RationalVector>& points,
                const std::set<std::pair<std::size_t, std::size_t>>& edge_set,
                std::size_t dim) {
  std::vector<bool> used(points.size(), false);
  for (const auto& [a, b] : edge_set) used[a] = used[b] = true;
  std::vector<std::size_t> remap(points.size(), 0);
  std::vector<RationalVector> nodes;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!used[i]) continue;
    remap[i] = nodes.size();
    nodes.push_back(points[i]);
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : edge_set) edges.push_back({remap[a], remap[b]});
  return validate(nodes, edges, dim);
}

/// Random edge set over the sampled points; no structural bias.
std::optional<EGraph> try_plain(const RandomNetOptions& opt, std::mt19937_64& rng) {
  std::vector<RationalVector> points = sample_distinct_points(opt, rng);
  if (points.size() < 2) return std::nullopt;
  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  const std::size_t want = std::max<std::size_t>(1, opt.num_edges);
  for (std::size_t tries = 4 * want + 8; tries > 0 && edge_set.size() < want; --tries) {
    std::size_t a = bounded(rng, points.size());
    std::size_t b = bounded(rng, points.size() - 1);
    if (b >= a) ++b;
    edge_set.insert({a, b});
  }
  if (edge_set.empty()) return std::nullopt;
  return assemble(points, edge_set, opt.dim);
}

/// Union of directed cycles over the sampled points (weakly reversible by
/// construction), plus chords doubled into 2-cycles within a component.
std::optional<EGraph> try_cycle_union(const RandomNetOptions& opt, std::mt19937_64& rng) {
  std::vector<RationalVector> points = sample_distinct_points(opt, rng);
  if (points.size() < 2) return std::nullopt;
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  shuffle_vec(order, rng);

  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  std::vector<std::vector<std::size_t>> chunks;
  std::size_t pos = 0;
  while (order.size() - pos >= 2) {
    std::size_t len = 2 + bounded(rng, std::min<std::size_t>(order.size() - pos, 4) - 1);
    if (order.size() - pos - len == 1) ++len;  // avoid a leftover singleton
    chunks.emplace_back(order.begin() + pos, order.begin() + pos + len);
    pos += len;
  }
  for (const auto& chunk : chunks) {
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      edge_set.insert({chunk[i], chunk[(i + 1) % chunk.size()]});
    }
  }
  // Chord 2-cycles stay within one strongly connected component.
  for (const auto& chunk : chunks) {
    if (chunk.size() >= 3 && bounded(rng, 2) == 0) {
      std::size_t a = bounded(rng, chunk.size());
      std::size_t b = bounded(rng, chunk.size() - 1);
      if (b >= a) ++b;
      edge_set.insert({chunk[a], chunk[b]});
      edge_set.insert({chunk[b], chunk[a]});
    }
  }
  return assemble(points, edge_set, opt.dim);
}

/// Every edge paired with its reverse.
std::optional<EGraph> try_reversible(const RandomNetOptions& opt, std::mt19937_64& rng) {
  std::vector<RationalVector> points = sample_distinct_points(opt, rng);
  if (points.size() < 2) return std::nullopt;
  std::set<std::pair<std::size_t, std::size_t>> edge_set;
  const std::size_t want = std::max<std::size_t>(1, opt.num_edges);
  for (std::size_t tries = 2 * want + 8; tries > 0 && edge_set.size() < want; --tries) {
    std::size_t a = bounded(rng, points.size());
    std::size_t b = bounded(rng, points.size() - 1);
    if (b >= a) ++b;
    edge_set.insert({a, b});
    edge_set.insert({b, a});
  }
  if (edge_set.empty()) return std::nullopt;
  return assemble(points, edge_set, opt.dim);
}

void check_size_guard(const RandomNetOptions& opt) {
  if (opt.dim < 1 || opt.dim > 8 || opt.num_nodes < 1 || opt.num_nodes > 512 ||
      opt.num_edges > 4096 || opt.coord_bound < 1 || opt.coord_bound > 1000) {
    budget_exceeded("size parameters exceed the resource guard");
  }
}

}  // namespace

std::optional<NetRequirement> requirement_from_name(const std::string& name) {
  if (name == "reversible") return NetRequirement::Reversible;
  if (name == "weakly-reversible") return NetRequirement::WeaklyReversible;
  if (name == "endotactic") return NetRequirement::Endotactic;
  if (name == "strongly-endotactic") return NetRequirement::StronglyEndotactic;
  if (name == "consistent") return NetRequirement::Consistent;
  if (name == "source-only") return NetRequirement::SourceOnly;
  if (name == "boundary-sources") return NetRequirement::BoundarySources;
  return std::nullopt;
}

const char* requirement_name(NetRequirement req) {
  switch (req) {
    case NetRequirement::Reversible: return "reversible";
    case NetRequirement::WeaklyReversible: return "weakly-reversible";
    case NetRequirement::Endotactic: return "endotactic";
    case NetRequirement::StronglyEndotactic: return "strongly-endotactic";
    case NetRequirement::Consistent: return "consistent";
    case NetRequirement::SourceOnly: return "source-only";
    case NetRequirement::BoundarySources: return "boundary-sources";
  }
  return "?";
}

bool requirement_holds(const EGraph& graph, NetRequirement req) {
  switch (req) {
    case NetRequirement::Reversible:
      return is_reversible(graph);
    case NetRequirement::WeaklyReversible:
      return is_weakly_reversible(graph);
    case NetRequirement::Endotactic:
      return is_endotactic(graph).holds;
    case NetRequirement::StronglyEndotactic:
      return is_strongly_endotactic(graph).holds;
    case NetRequirement::Consistent:
      return is_consistent(graph).member;
    case NetRequirement::SourceOnly:
      return is_source_only(graph);
    case NetRequirement::BoundarySources: {
      RationalMatrix sources;
      for (std::size_t id : graph.source_node_ids()) sources.push_back(graph.node(id));
      for (const RationalVector& s : sources) {
        if (!on_relative_hull_boundary(s, sources)) return false;
      }
      return true;
    }
  }
  return false;
}

EGraph random_network(const RandomNetOptions& opt, std::mt19937_64& rng) {
  check_size_guard(opt);
  for (std::size_t attempt = 0; attempt < 200; ++attempt) {
    if (auto g = try_plain(opt, rng)) return std::move(*g);
  }
  budget_exceeded("no valid random network after 200 attempts");
}

EGraph random_network_satisfying(const RandomNetOptions& opt,
                                 const std::vector<NetRequirement>& reqs,
                                 std::mt19937_64& rng, std::size_t budget) {
  check_size_guard(opt);
  const auto has = [&](NetRequirement r) {
    return std::find(reqs.begin(), reqs.end(), r) != reqs.end();
  };
  const bool want_reversible = has(NetRequirement::Reversible);
  const bool want_cycles =
      has(NetRequirement::WeaklyReversible) || has(NetRequirement::Endotactic) ||
      has(NetRequirement::StronglyEndotactic) || has(NetRequirement::SourceOnly) ||
      has(NetRequirement::Consistent);

  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::optional<EGraph> g;
    if (want_reversible) {
      g = try_reversible(opt, rng);
    } else if (want_cycles) {
      g = try_cycle_union(opt, rng);
    } else {
      g = try_plain(opt, rng);
    }
    if (!g) continue;
    bool ok = true;
    for (NetRequirement r : reqs) {
      if (!requirement_holds(*g, r)) {
        ok = false;
        break;
      }
    }
    if (ok) return std::move(*g);
  }
  budget_exceeded("no network satisfying the requested constraints");
}

RateAssignment random_rates(const EGraph& graph, std::mt19937_64& rng) {
  RateAssignment rates;
  rates.reserve(graph.edges().size());
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    rates.emplace_back(static_cast<long>(1 + bounded(rng, 6)),
                       static_cast<long>(1 + bounded(rng, 3)));
  }
  return rates;
}

std::pair<EGraph, RateAssignment> random_zero_source_wr(std::size_t dim,
                                                        std::mt19937_64& rng) {
  if (dim < 1 || dim > 8) budget_exceeded("dimension outside the supported range");
  for (std::size_t attempt = 0; attempt < 500; ++attempt) {
    RationalVector hub(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      hub[j] = Rational(static_cast<long>(1 + bounded(rng, 3)));
    }
    const std::size_t branches = 2 + bounded(rng, 2);

    // Branch vectors summing to zero; each target hub + v stays nonnegative.
    RationalMatrix vs;
    if (branches == 2) {
      RationalVector u(dim, Rational(0));
      for (std::size_t j = 0; j < dim; ++j) {
        u[j] = Rational(static_cast<long>(bounded(rng, 3)) - 1);
      }
      if (is_zero_vector(u)) continue;
      vs = {u, vec_scale(Rational(-1), u)};
    } else {
      RationalVector u(dim), w(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        u[j] = Rational(static_cast<long>(bounded(rng, 3)) - 1);
        w[j] = Rational(static_cast<long>(bounded(rng, 3)) - 1);
      }
      RationalVector third = vec_scale(Rational(-1), vec_add(u, w));
      if (is_zero_vector(u) || is_zero_vector(w) || is_zero_vector(third)) continue;
      if (u == w || u == third || w == third) continue;
      vs = {u, w, third};
    }

    std::vector<RationalVector> nodes = {hub};
    bool feasible = true;
    for (const RationalVector& v : vs) {
      RationalVector t = vec_add(hub, v);
      for (const Rational& c : t) {
        if (c < 0) feasible = false;
      }
      nodes.push_back(std::move(t));
    }
    if (!feasible) continue;

    std::vector<Edge> edges;
    RateAssignment rates;
    const Rational out_rate(static_cast<long>(1 + bounded(rng, 4)),
                            static_cast<long>(1 + bounded(rng, 2)));
    for (std::size_t i = 0; i < vs.size(); ++i) {
      edges.push_back({0, i + 1});
      rates.push_back(out_rate);
      edges.push_back({i + 1, 0});
      rates.emplace_back(static_cast<long>(1 + bounded(rng, 5)),
                         static_cast<long>(1 + bounded(rng, 2)));
    }

    // Optional decoration: a separate 2-cycle away from the hub.
    if (bounded(rng, 2) == 0) {
      RationalVector p = random_point(dim, 4, false, rng);
      RationalVector q = random_point(dim, 4, false, rng);
      if (p != q && p != hub && q != hub) {
        const auto intern = [&](const RationalVector& pt) {
          for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (nodes[i] == pt) return i;
          }
          nodes.push_back(pt);
          return nodes.size() - 1;
        };
        std::size_t a = intern(p);
        std::size_t b = intern(q);
        edges.push_back({a, b});
        rates.emplace_back(static_cast<long>(1 + bounded(rng, 5)));
        edges.push_back({b, a});
        rates.emplace_back(static_cast<long>(1 + bounded(rng, 5)));
      }
    }

    EGraph g = validate(nodes, edges, dim);
    return {std::move(g), std::move(rates)};
  }
  budget_exceeded("no zero-source weakly reversible sample");
}

EGraph random_strongly_endotactic_2d(std::mt19937_64& rng) {
  for (std::size_t attempt = 0; attempt < 2000; ++attempt) {
    RandomNetOptions opt;
    opt.dim = 2;
    opt.num_nodes = 3 + bounded(rng, 4);
    opt.coord_bound = 4;
    std::vector<RationalVector> points = sample_distinct_points(opt, rng);
    if (points.size() < 3) continue;

    // Keep only the points in convex position; interior points would violate
    // the boundary-sources hypothesis.
    RationalMatrix all(points.begin(), points.end());
    std::vector<RationalVector> kept;
    for (const RationalVector& p : points) {
      if (on_relative_hull_boundary(p, all)) kept.push_back(p);
    }
    if (kept.size() < 3) continue;
    RationalMatrix diffs;
    for (std::size_t i = 1; i < kept.size(); ++i) diffs.push_back(vec_sub(kept[i], kept[0]));
    if (rank(diffs) < 2) continue;

    std::vector<std::size_t> order(kept.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    shuffle_vec(order, rng);
    std::set<std::pair<std::size_t, std::size_t>> edge_set;
    for (std::size_t i = 0; i < order.size(); ++i) {
      edge_set.insert({order[i], order[(i + 1) % order.size()]});
    }
    if (bounded(rng, 2) == 0) {
      std::size_t a = bounded(rng, kept.size());
      std::size_t b = bounded(rng, kept.size() - 1);
      if (b >= a) ++b;
      edge_set.insert({a, b});
      edge_set.insert({b, a});
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : edge_set) edges.push_back({a, b});
    EGraph g = validate(kept, edges, 2);

    if (stoichiometric_subspace(g).size() != 2) continue;
    if (!requirement_holds(g, NetRequirement::BoundarySources)) continue;
    if (!is_strongly_endotactic(g).holds) continue;
    return g;
  }
  budget_exceeded("no 2D strongly endotactic boundary-source sample");
}

SplitPair random_split_pair(const RandomNetOptions& opt, std::mt19937_64& rng) {
  check_size_guard(opt);
  for (std::size_t attempt = 0; attempt < 200; ++attempt) {
    std::optional<EGraph> base = try_plain(opt, rng);
    if (!base) continue;
    EGraph cur = *base;
    const std::size_t rounds = 1 + bounded(rng, 2);
    bool ok = true;
    for (std::size_t round = 0; round < rounds && ok; ++round) {
      const std::size_t e = bounded(rng, cur.edges().size());
      const RationalVector v = cur.reaction_vector(e);
      const RationalVector& s = cur.source(e);
      ok = false;
      for (std::size_t tries = 0; tries < 50; ++tries) {
        RationalVector u(opt.dim);
        for (std::size_t j = 0; j < opt.dim; ++j) {
          u[j] = Rational(static_cast<long>(bounded(rng, 5)) - 2);
        }
        if (is_zero_vector(u) || u == v || u == vec_scale(Rational(-1), v)) continue;
        RationalVector t1 = vec_add(vec_add(s, v), u);
        RationalVector t2 = vec_sub(vec_add(s, v), u);
        bool nonneg = true;
        for (const Rational& c : t1) nonneg = nonneg && c >= 0;
        for (const Rational& c : t2) nonneg = nonneg && c >= 0;
        if (!nonneg) continue;
        // The new parallel pair must not collide with surviving edges.
        bool collide = false;
        for (std::size_t other = 0; other < cur.edges().size() && !collide; ++other) {
          if (other == e) continue;
          if (cur.source(other) != s) continue;
          collide = cur.target(other) == t1 || cur.target(other) == t2;
        }
        if (collide) continue;
        cur = split_edge(cur, e, {t1, t2});
        ok = true;
        break;
      }
    }
    if (ok && cur.edges().size() > base->edges().size()) {
      return {std::move(*base), std::move(cur)};
    }
  }
  budget_exceeded("no split pair sample");
}

}  // namespace crnet
