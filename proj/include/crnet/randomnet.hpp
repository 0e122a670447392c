// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "crnet/egraph.hpp"

namespace crnet {

/// Seeded fixture generators for the property suites and the `random` CLI
/// verb. All sampling goes through a masked-rejection bounded draw on
/// mt19937_64 outputs, so results are reproducible across platforms for a
/// given seed.

struct RandomNetOptions {
  std::size_t dim = 2;
  std::size_t num_nodes = 4;  // points sampled before dedup
  std::size_t num_edges = 4;
  long coord_bound = 3;     // integer coordinates drawn from [0, coord_bound]
  bool allow_half = false;  // occasionally emit half-integer coordinates
};

enum class NetRequirement {
  Reversible,
  WeaklyReversible,
  Endotactic,
  StronglyEndotactic,
  Consistent,
  SourceOnly,
  BoundarySources,  // every source on the relative hull boundary of SC(G)
};

/// Parses the CLI spelling ("weakly-reversible", "source-only", ...).
std::optional<NetRequirement> requirement_from_name(const std::string& name);
const char* requirement_name(NetRequirement req);

bool requirement_holds(const EGraph& graph, NetRequirement req);

/// Uniform draw in [0, n). Deterministic given the engine state.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n);

/// A valid network with roughly the requested size. Throws
/// RejectionBudgetExceeded when the size parameters exceed the resource
/// guard or no valid sample is found.
EGraph random_network(const RandomNetOptions& opt, std::mt19937_64& rng);

/// Rejection-samples random_network (biased toward cycle unions when a
/// reversibility-flavoured requirement is present) until every requirement
/// holds. Throws RejectionBudgetExceeded after `budget` attempts.
EGraph random_network_satisfying(const RandomNetOptions& opt,
                                 const std::vector<NetRequirement>& reqs,
                                 std::mt19937_64& rng,
                                 std::size_t budget = 5000);

/// Positive rational rates, one per edge.
RateAssignment random_rates(const EGraph& graph, std::mt19937_64& rng);

/// Weakly reversible network together with rates under which at least one
/// source has net coefficient zero in the generated field (the source's
/// outgoing reaction vectors sum to zero under the chosen rates).
std::pair<EGraph, RateAssignment> random_zero_source_wr(std::size_t dim,
                                                        std::mt19937_64& rng);

/// 2D strongly endotactic network with two-dimensional stoichiometric
/// subspace whose sources all lie on the boundary of their convex hull: a
/// directed cycle through a random point set in convex position, plus
/// optional chords. The classification predicates are re-run as the
/// acceptance gate; failures reject and resample.
EGraph random_strongly_endotactic_2d(std::mt19937_64& rng);

/// A pair with dynamics_included(base, split) by construction: `split` is
/// obtained from `base` by replacing one or two edges e with a pair of
/// edges whose reaction vectors straddle v(e) (split_edge with targets
/// s(e) + v(e) +- u).
struct SplitPair {
  EGraph base;
  EGraph split;
};
SplitPair random_split_pair(const RandomNetOptions& opt, std::mt19937_64& rng);

}  // namespace crnet
