// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crnet/cone.hpp"
#include "crnet/egraph.hpp"
#include "crnet/rational.hpp"
#include "crnet/vector_field.hpp"

namespace crnet {

enum class InclusionFailure { SourceNotCovered, RelIntNotContained };

struct SourceInclusion {
  RationalVector source;
  ConeResult containment;
};

/// Result of the dynamics-inclusion decision for inner ⊑ outer: every field
/// the inner network generates, the outer network generates too.
struct InclusionReport {
  bool holds = false;
  std::optional<RationalVector> failing_source;
  std::optional<InclusionFailure> failing_reason;
  /// Containment results per outer source, in ascending node order, up to
  /// and including the first failure.
  std::vector<SourceInclusion> per_source;
};

/// Inner ⊑ outer iff every inner source is an outer source and, at every
/// outer source s, relint(V^inner(s)) ⊆ relint(V^outer(s)), where V(s) is
/// the cone of reaction vectors at s ({0} for absent sources).
InclusionReport dynamics_included(const EGraph& inner, const EGraph& outer);

struct CapacityReport {
  bool capacity = false;
  /// A field both networks generate, built from one relative-interior point
  /// per shared source (present exactly when capacity holds).
  std::optional<VectorField> shared_field;
  std::optional<RationalVector> failing_source;
  /// Separating direction at the failing source.
  RationalVector separating_w;
};

/// Do the two networks generate a common field? Holds iff at every source of
/// either network the relative interiors of the two reaction cones meet.
CapacityReport capacity_for_equivalence(const EGraph& a, const EGraph& b);

/// Positive rates K with generate_field(graph, K) equal to `field`, found by
/// one strict feasibility program per source. Throws ExponentNotASource when
/// a monomial of the field has no matching source, NoPositiveSolution when
/// some source admits no strictly positive solution.
RateAssignment find_rate_witness(const EGraph& graph, const VectorField& field);

}  // namespace crnet
