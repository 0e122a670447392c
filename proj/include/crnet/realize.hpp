// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crnet/egraph.hpp"
#include "crnet/rational.hpp"

namespace crnet {

/// How an output edge set relates to the input edge set.
///
/// For SourceOnly and ExtremallyWeaklyReversible2D each record decomposes
/// one input edge over output edges at the same source:
///   v_in(input_edges[0]) = sum_i lambdas[i] * v_out(output_edges[i]).
/// For ZeroSourceElimination each record composes one output edge from
/// input edges:
///   v_out(output_edges[0]) = sum_i lambdas[i] * v_in(input_edges[i]).
struct ProvenanceRecord {
  std::vector<std::size_t> input_edges;
  std::vector<std::size_t> output_edges;
  RationalVector lambdas;
};

struct RealizationResult {
  enum class Kind { SourceOnly, ZeroSourceElimination, ExtremallyWeaklyReversible2D };
  Kind kind = Kind::SourceOnly;
  EGraph graph;
  std::optional<RateAssignment> rate_map;
  std::vector<ProvenanceRecord> provenance;
};

/// Throws InternalInvariantBroken unless every provenance identity holds
/// exactly against the input graph and result.graph.
void recheck_provenance(const EGraph& input, const RealizationResult& result);

/// Realization on the source complexes only: every edge whose target is not
/// a source is replaced by edges toward other sources whose reaction vectors
/// positively combine to the replaced vector. Requires an endotactic input;
/// the output is source-only and includes the input's dynamics (both
/// verified).
RealizationResult make_source_only(const EGraph& graph);

/// Removes every source whose net coefficient in the generated field is
/// zero, rewiring flow through it; the output is weakly reversible, has as
/// sources exactly the field's exponents, and generates the same field (all
/// verified). Requires a weakly reversible input.
RealizationResult eliminate_zero_sources(const EGraph& graph,
                                         const RateAssignment& rates);

/// The two-dimensional construction of a weakly reversible, strongly
/// endotactic realization including the input's dynamics. Requires dim 2,
/// a two-dimensional stoichiometric subspace, a strongly endotactic input,
/// and every source on the hull boundary; postconditions verified.
RealizationResult ewr_realize_2d(const EGraph& graph);

}  // namespace crnet
