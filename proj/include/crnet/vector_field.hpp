// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>

#include "crnet/egraph.hpp"
#include "crnet/rational.hpp"

namespace crnet {

/// Canonical mass-action polynomial vector field: a map from monomial
/// exponent vectors to net coefficient vectors, lexicographically ordered,
/// with all-zero coefficient terms dropped.
struct VectorField {
  std::size_t dim = 0;
  std::map<RationalVector, RationalVector> terms;
};

/// Drops terms whose coefficient vector is identically zero.
void canonicalize(VectorField& field);

/// Sum over edges of k_e x^{s(e)} v(e), grouped by source exponent.
VectorField generate_field(const EGraph& graph, const RateAssignment& rates);

/// Exact equality of canonical forms.
bool fields_equal(const VectorField& f, const VectorField& g);

/// Exact evaluation with the 0^0 = 1 convention. Exponents must be integers
/// unless the matching coordinate of x is 1.
RationalVector evaluate_field(const VectorField& field,
                              const RationalVector& x);

/// Basis of the span of the reaction vectors.
RationalMatrix stoichiometric_subspace(const EGraph& graph);

}  // namespace crnet
