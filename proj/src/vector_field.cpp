// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crnet/vector_field.hpp"

#include <cstddef>

#include "crnet/errors.hpp"
#include "crnet/linalg.hpp"

namespace crnet {
namespace {

Rational integer_power(const Rational& base, const Integer& exponent) {
  if (exponent == 0) return 1;
  if (exponent < 0) {
    if (base == 0) {
      throw Error(ErrorCode::InternalInvariantBroken,
                  "zero base with negative exponent");
    }
    return Rational(1) / integer_power(base, Integer(-exponent));
  }
  if (exponent > 1000000) {
    throw Error(ErrorCode::InternalInvariantBroken,
                "exponent too large to evaluate");
  }
  const unsigned long n = exponent.convert_to<unsigned long>();
  const Integer num =
      boost::multiprecision::pow(boost::multiprecision::numerator(base), n);
  const Integer den =
      boost::multiprecision::pow(boost::multiprecision::denominator(base), n);
  return Rational(num, den);
}

}  // namespace

void canonicalize(VectorField& field) {
  for (auto it = field.terms.begin(); it != field.terms.end();) {
    if (is_zero_vector(it->second)) {
      it = field.terms.erase(it);
    } else {
      ++it;
    }
  }
}

VectorField generate_field(const EGraph& graph, const RateAssignment& rates) {
  check_rates(graph, rates);
  VectorField field;
  field.dim = graph.dim();
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const RationalVector& exponent = graph.source(e);
    const RationalVector v = graph.reaction_vector(e);
    auto [it, inserted] =
        field.terms.try_emplace(exponent, RationalVector(field.dim, 0));
    for (std::size_t k = 0; k < field.dim; ++k) {
      it->second[k] += rates[e] * v[k];
    }
  }
  canonicalize(field);
  return field;
}

bool fields_equal(const VectorField& f, const VectorField& g) {
  if (f.dim != g.dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "fields live in different dimensions");
  }
  return f.terms == g.terms;
}

RationalVector evaluate_field(const VectorField& field,
                              const RationalVector& x) {
  if (x.size() != field.dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "evaluation point dimension mismatch");
  }
  for (const Rational& c : x) {
    if (c < 0) {
      throw Error(ErrorCode::NegativeCoordinate,
                  "evaluation point must be componentwise nonnegative");
    }
  }
  RationalVector value(field.dim, 0);
  for (const auto& [exponent, coeff] : field.terms) {
    Rational monomial = 1;
    for (std::size_t j = 0; j < field.dim; ++j) {
      const Rational& e = exponent[j];
      if (boost::multiprecision::denominator(e) == 1) {
        monomial *= integer_power(x[j], boost::multiprecision::numerator(e));
      } else if (x[j] == 1) {
        continue;
      } else {
        throw Error(ErrorCode::NonIntegerExponentAtEvaluation,
                    "non-integer exponent at coordinate with value not 1");
      }
      if (monomial == 0) break;
    }
    if (monomial == 0) continue;
    for (std::size_t k = 0; k < field.dim; ++k) {
      value[k] += monomial * coeff[k];
    }
  }
  return value;
}

RationalMatrix stoichiometric_subspace(const EGraph& graph) {
  RationalMatrix vectors;
  vectors.reserve(graph.edges().size());
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    vectors.push_back(graph.reaction_vector(e));
  }
  return basis_of_span(vectors, graph.dim());
}

}  // namespace crnet
