// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "crnet/rational.hpp"

namespace crnet {

/// Reduces `m` to reduced row echelon form in place; returns the pivot
/// column indices (one per nonzero row, ascending).
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of span(vectors), each basis vector a row of the echelon form.
RationalMatrix basis_of_span(const RationalMatrix& vectors, std::size_t dim);

/// Basis of { x : each row of m dotted with x is 0 }.
RationalMatrix nullspace_basis(const RationalMatrix& m, std::size_t dim);

}  // namespace crnet
