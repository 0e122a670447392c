// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crnet/cone.hpp"
#include "crnet/egraph.hpp"
#include "crnet/rational.hpp"

namespace crnet {

/// One cell of the hyperplane arrangement of a direction set D: the sign of
/// w . d for each d in D, together with a nonzero rational w realizing
/// exactly those signs.
struct SignCell {
  std::vector<int> signs;  // -1 / 0 / +1, parallel to the input list
  RationalVector witness_w;
};

/// All realizable sign vectors of nonzero w against `directions`, each with
/// an exact witness, in deterministic depth-first order. The all-zero cell
/// appears exactly when the directions do not span R^dim. w = 0 is excluded.
std::vector<SignCell> enumerate_sign_cells(const RationalMatrix& directions,
                                           std::size_t dim);

/// Throws InternalInvariantBroken unless sign(witness_w . d) matches the
/// recorded sign for every direction and witness_w is nonzero.
void recheck_sign_cell(const RationalMatrix& directions, const SignCell& cell);

/// Outcome of an endotacticity test; `w` and `edge_index` describe the
/// violation when holds is false.
struct EndotacticResult {
  bool holds = false;
  RationalVector w;
  std::size_t edge_index = 0;
};

/// Is there a positive combination of all reaction vectors summing to zero?
ConeResult is_consistent(const EGraph& graph);

/// Every direction that some reaction decreases must be countered by a
/// reaction increasing it from a strictly lesser source.
EndotacticResult is_endotactic(const EGraph& graph);

/// Endotactic, with the countering reaction available at a source minimizing
/// w among all sources.
EndotacticResult is_strongly_endotactic(const EGraph& graph);

/// Throws InternalInvariantBroken unless (w, edge_index) exactly violates
/// the (strong) endotacticity condition on `graph`.
void recheck_endotactic_violation(const EGraph& graph, const RationalVector& w,
                                  std::size_t edge_index, bool strong);

/// Subnetwork of the edges whose source lies on the relative boundary of the
/// convex hull of all sources, on the nodes those edges touch.
EGraph extremal_subnetwork(const EGraph& graph);

bool is_extremally_weakly_reversible(const EGraph& graph);

/// Independent 2D check of endotacticity by sweeping all critical directions
/// of the arrangement plus one interior direction per angular arc.
bool endotactic_2d_sweep_oracle(const EGraph& graph);

struct ClassificationReport {
  bool reversible = false;
  bool weakly_reversible = false;
  bool source_only = false;
  bool consistent = false;
  bool endotactic = false;
  bool strongly_endotactic = false;
  bool extremally_weakly_reversible = false;
  ConeWitness consistency_witness;
  std::optional<RationalVector> endotactic_violation_w;
  std::optional<std::size_t> endotactic_violation_edge;
  std::optional<RationalVector> strong_violation_w;
  std::optional<std::size_t> strong_violation_edge;
};

ClassificationReport classify_all(const EGraph& graph);

}  // namespace crnet
