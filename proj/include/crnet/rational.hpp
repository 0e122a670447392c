// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace crnet {

/// Exact arbitrary-precision rational; every quantity in this library that is
/// not an index or a flag is one of these.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Parses "p", "-p/q" or a decimal literal like "0.25" into an exact value.
/// Throws Error{SyntaxError} on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

std::string vector_to_string(const RationalVector& v);

RationalVector vec_add(const RationalVector& a, const RationalVector& b);
RationalVector vec_sub(const RationalVector& a, const RationalVector& b);
RationalVector vec_scale(const Rational& c, const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero_vector(const RationalVector& v);

/// Scales a nonzero rational vector to the unique integer vector with
/// coprime entries and the same direction; the zero vector maps to itself.
RationalVector primitive_direction(const RationalVector& v);

}  // namespace crnet
