// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "crnet/rational.hpp"

namespace crnet {

/// Certificate attached to every cone decision.
///
/// Coefficients: lambdas, one per generator, with
///   sum_i lambdas[i] * gens[i] equal to the queried vector
///   (nonnegative for membership, strictly positive for relative
///   interior membership).
/// SeparatingDirection: a vector w certifying the negative answer.
///   For non-membership: w . gens[i] >= 0 for all i and w . v < 0.
///   For v in the cone but outside its relative interior: either
///   w . gens[i] >= 0 for all i with w . v = 0 and w . g > 0 for some
///   generator g, or (when v = 0) w . gens[i] <= 0 for all i with at
///   least one strict.
struct ConeWitness {
  enum class Kind { Coefficients, SeparatingDirection };
  Kind kind = Kind::Coefficients;
  RationalVector lambdas;
  RationalVector w;
};

struct ConeResult {
  bool member = false;
  ConeWitness witness;
};

/// Is v in Cone(gens)? The cone of an empty generator list is {0}.
ConeResult cone_member(const RationalVector& v, const RationalMatrix& gens);

/// Is v in the relative interior of Cone(gens)? relint({0}) = {0}.
ConeResult relint_member(const RationalVector& v, const RationalMatrix& gens);

/// Is relint(Cone(gens_inner)) a subset of relint(Cone(gens_outer))?
/// Decided as: every inner generator lies in the outer cone and the sum of
/// the inner generators lies in the outer cone's relative interior.
ConeResult relint_contained(const RationalMatrix& gens_inner,
                            const RationalMatrix& gens_outer);

struct IntersectResult {
  bool intersects = false;
  /// A common point of both relative interiors (when intersects).
  RationalVector point;
  RationalVector lambdas_a;
  RationalVector lambdas_b;
  /// Separating direction (when disjoint): w . a >= 0 for all generators a
  /// of the first cone, w . b <= 0 for all generators b of the second, and
  /// the two cones are not both contained in the hyperplane w . x = 0.
  RationalVector w;
};

/// Do the relative interiors of the two cones meet? Both relints contain 0
/// only when both generator lists span the zero cone or cancel; the zero
/// vector counts as a common point exactly when it lies in both relints.
IntersectResult relint_intersect(const RationalMatrix& gens_a,
                                 const RationalMatrix& gens_b);

/// Is p on the relative boundary of the convex hull of points? A hull of a
/// single point has that point on its boundary by convention. Throws
/// PointNotInSet when p is not one of the points.
bool on_relative_hull_boundary(const RationalVector& p,
                               const RationalMatrix& points);

/// Witness audits. Each throws InternalInvariantBroken when the certificate
/// does not check out exactly; they are run on every emitted witness.
void recheck_cone_member(const RationalVector& v, const RationalMatrix& gens,
                         const ConeResult& result);
void recheck_relint_member(const RationalVector& v, const RationalMatrix& gens,
                           const ConeResult& result);
void recheck_relint_intersect(const RationalMatrix& gens_a,
                              const RationalMatrix& gens_b,
                              const IntersectResult& result);

}  // namespace crnet
