// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crnet/cone.hpp"

#include <cstddef>

#include "crnet/errors.hpp"
#include "crnet/lp.hpp"

namespace crnet {
namespace {

void check_dims(const RationalMatrix& gens, std::size_t dim) {
  for (const RationalVector& g : gens) {
    if (g.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "generator dimension does not match ambient dimension");
    }
  }
}

RationalVector combine(const RationalMatrix& gens,
                       const RationalVector& lambdas) {
  if (gens.empty()) return {};
  RationalVector out(gens[0].size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] += lambdas[i] * gens[i][k];
    }
  }
  return out;
}

RationalVector sum_of(const RationalMatrix& gens, std::size_t dim) {
  RationalVector out(dim, 0);
  for (const RationalVector& g : gens) {
    for (std::size_t k = 0; k < dim; ++k) out[k] += g[k];
  }
  return out;
}

[[noreturn]] void broken(const char* what) {
  throw Error(ErrorCode::InternalInvariantBroken, what);
}

}  // namespace

ConeResult cone_member(const RationalVector& v, const RationalMatrix& gens) {
  const std::size_t d = v.size();
  check_dims(gens, d);
  const std::size_t n = gens.size();

  LpProblem lp;
  lp.num_vars = n;
  lp.rows.assign(d, RationalVector(n, 0));
  lp.rhs = v;
  lp.objective.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) lp.rows[k][i] = gens[i][k];
  }

  const LpSolution s = solve_lp(lp);
  ConeResult result;
  if (s.status == LpStatus::Optimal) {
    result.member = true;
    result.witness.kind = ConeWitness::Kind::Coefficients;
    result.witness.lambdas = s.x;
  } else if (s.status == LpStatus::Infeasible) {
    result.member = false;
    result.witness.kind = ConeWitness::Kind::SeparatingDirection;
    result.witness.w = s.dual;
  } else {
    broken("unbounded membership program");
  }
  recheck_cone_member(v, gens, result);
  return result;
}

ConeResult relint_member(const RationalVector& v, const RationalMatrix& gens) {
  const std::size_t d = v.size();
  check_dims(gens, d);
  const std::size_t n = gens.size();

  ConeResult result;
  if (n == 0) {
    result.member = is_zero_vector(v);
    if (result.member) {
      result.witness.kind = ConeWitness::Kind::Coefficients;
    } else {
      result.witness.kind = ConeWitness::Kind::SeparatingDirection;
      result.witness.w = vec_scale(Rational(-1), v);
    }
    recheck_relint_member(v, gens, result);
    return result;
  }

  // Columns: delta, one slack per generator, then t with delta + t = 1.
  // lambda_i = delta + slack_i, so max delta > 0 exactly at relint members.
  LpProblem lp;
  lp.num_vars = n + 2;
  lp.rows.assign(d + 1, RationalVector(n + 2, 0));
  lp.rhs = v;
  lp.rhs.push_back(1);
  lp.objective.assign(n + 2, 0);
  lp.objective[0] = 1;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      lp.rows[k][i + 1] = gens[i][k];
      lp.rows[k][0] += gens[i][k];
    }
  }
  lp.rows[d][0] = 1;
  lp.rows[d][n + 1] = 1;

  const LpSolution s = solve_lp(lp);
  if (s.status == LpStatus::Infeasible) {
    result.member = false;
    result.witness.kind = ConeWitness::Kind::SeparatingDirection;
    result.witness.w.assign(s.dual.begin(), s.dual.begin() + d);
  } else if (s.status == LpStatus::Optimal) {
    if (s.objective_value > 0) {
      result.member = true;
      result.witness.kind = ConeWitness::Kind::Coefficients;
      result.witness.lambdas.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        result.witness.lambdas[i] = s.x[0] + s.x[i + 1];
      }
    } else {
      result.member = false;
      result.witness.kind = ConeWitness::Kind::SeparatingDirection;
      result.witness.w.assign(s.dual.begin(), s.dual.begin() + d);
      if (is_zero_vector(v)) {
        result.witness.w = vec_scale(Rational(-1), result.witness.w);
      }
    }
  } else {
    broken("unbounded relative interior program");
  }
  recheck_relint_member(v, gens, result);
  return result;
}

ConeResult relint_contained(const RationalMatrix& gens_inner,
                            const RationalMatrix& gens_outer) {
  if (gens_inner.empty() && gens_outer.empty()) {
    ConeResult result;
    result.member = true;
    result.witness.kind = ConeWitness::Kind::Coefficients;
    return result;
  }
  const std::size_t d =
      gens_inner.empty() ? gens_outer[0].size() : gens_inner[0].size();
  check_dims(gens_inner, d);
  check_dims(gens_outer, d);

  for (const RationalVector& g : gens_inner) {
    ConeResult in_cone = cone_member(g, gens_outer);
    if (!in_cone.member) return in_cone;
  }
  return relint_member(sum_of(gens_inner, d), gens_outer);
}

IntersectResult relint_intersect(const RationalMatrix& gens_a,
                                 const RationalMatrix& gens_b) {
  IntersectResult result;
  if (gens_a.empty() && gens_b.empty()) {
    result.intersects = true;
    recheck_relint_intersect(gens_a, gens_b, result);
    return result;
  }
  const std::size_t d =
      gens_a.empty() ? gens_b[0].size() : gens_a[0].size();
  check_dims(gens_a, d);
  check_dims(gens_b, d);

  if (gens_a.empty() || gens_b.empty()) {
    const RationalMatrix& other = gens_a.empty() ? gens_b : gens_a;
    ConeResult zero_in = relint_member(RationalVector(d, 0), other);
    if (zero_in.member) {
      result.intersects = true;
      result.point.assign(d, 0);
      (gens_a.empty() ? result.lambdas_b : result.lambdas_a) =
          zero_in.witness.lambdas;
    } else {
      result.intersects = false;
      result.w = gens_a.empty()
                     ? zero_in.witness.w
                     : vec_scale(Rational(-1), zero_in.witness.w);
    }
    recheck_relint_intersect(gens_a, gens_b, result);
    return result;
  }

  const std::size_t p = gens_a.size();
  const std::size_t q = gens_b.size();
  LpProblem lp;
  lp.num_vars = p + q + 2;
  lp.rows.assign(d + 1, RationalVector(p + q + 2, 0));
  lp.rhs.assign(d + 1, 0);
  lp.rhs[d] = 1;
  lp.objective.assign(p + q + 2, 0);
  lp.objective[0] = 1;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < p; ++i) {
      lp.rows[k][i + 1] = gens_a[i][k];
      lp.rows[k][0] += gens_a[i][k];
    }
    for (std::size_t j = 0; j < q; ++j) {
      lp.rows[k][p + 1 + j] = -gens_b[j][k];
      lp.rows[k][0] -= gens_b[j][k];
    }
  }
  lp.rows[d][0] = 1;
  lp.rows[d][p + q + 1] = 1;

  const LpSolution s = solve_lp(lp);
  if (s.status != LpStatus::Optimal) {
    broken("intersection program not optimal");
  }
  if (s.objective_value > 0) {
    result.intersects = true;
    result.lambdas_a.resize(p);
    result.lambdas_b.resize(q);
    for (std::size_t i = 0; i < p; ++i) {
      result.lambdas_a[i] = s.x[0] + s.x[i + 1];
    }
    for (std::size_t j = 0; j < q; ++j) {
      result.lambdas_b[j] = s.x[0] + s.x[p + 1 + j];
    }
    result.point = combine(gens_a, result.lambdas_a);
  } else {
    result.intersects = false;
    result.w.assign(s.dual.begin(), s.dual.begin() + d);
  }
  recheck_relint_intersect(gens_a, gens_b, result);
  return result;
}

bool on_relative_hull_boundary(const RationalVector& p,
                               const RationalMatrix& points) {
  const std::size_t d = p.size();
  check_dims(points, d);
  const std::size_t n = points.size();
  bool present = false;
  for (const RationalVector& q : points) {
    if (q == p) {
      present = true;
      break;
    }
  }
  if (!present) {
    throw Error(ErrorCode::PointNotInSet,
                "point is not a member of the hull's point set");
  }
  if (n == 1) return true;

  // Barycentric weights lambda_i = delta + slack_i summing to one; p is in
  // the hull's relative interior exactly when max delta is positive.
  LpProblem lp;
  lp.num_vars = n + 1;
  lp.rows.assign(d + 1, RationalVector(n + 1, 0));
  lp.rhs = p;
  lp.rhs.push_back(1);
  lp.objective.assign(n + 1, 0);
  lp.objective[0] = 1;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      lp.rows[k][i + 1] = points[i][k];
      lp.rows[k][0] += points[i][k];
    }
  }
  lp.rows[d][0] = Rational(n);
  for (std::size_t i = 0; i < n; ++i) lp.rows[d][i + 1] = 1;

  const LpSolution s = solve_lp(lp);
  if (s.status != LpStatus::Optimal) {
    broken("hull membership program not optimal");
  }
  return s.objective_value == 0;
}

void recheck_cone_member(const RationalVector& v, const RationalMatrix& gens,
                         const ConeResult& result) {
  if (result.member) {
    if (result.witness.kind != ConeWitness::Kind::Coefficients ||
        result.witness.lambdas.size() != gens.size()) {
      broken("membership witness malformed");
    }
    for (const Rational& l : result.witness.lambdas) {
      if (l < 0) broken("membership coefficient negative");
    }
    RationalVector rebuilt = combine(gens, result.witness.lambdas);
    if (rebuilt.empty()) rebuilt.assign(v.size(), 0);
    if (rebuilt != v) broken("membership coefficients do not reproduce v");
    return;
  }
  if (result.witness.kind != ConeWitness::Kind::SeparatingDirection ||
      result.witness.w.size() != v.size()) {
    broken("separation witness malformed");
  }
  for (const RationalVector& g : gens) {
    if (dot(result.witness.w, g) < 0) broken("separator cuts a generator");
  }
  if (dot(result.witness.w, v) >= 0) broken("separator does not cut v");
}

void recheck_relint_member(const RationalVector& v, const RationalMatrix& gens,
                           const ConeResult& result) {
  if (result.member) {
    if (result.witness.kind != ConeWitness::Kind::Coefficients ||
        result.witness.lambdas.size() != gens.size()) {
      broken("relint witness malformed");
    }
    for (const Rational& l : result.witness.lambdas) {
      if (l <= 0) broken("relint coefficient not positive");
    }
    RationalVector rebuilt = combine(gens, result.witness.lambdas);
    if (rebuilt.empty()) rebuilt.assign(v.size(), 0);
    if (rebuilt != v) broken("relint coefficients do not reproduce v");
    return;
  }
  if (result.witness.kind != ConeWitness::Kind::SeparatingDirection ||
      result.witness.w.size() != v.size()) {
    broken("relint separation witness malformed");
  }
  const RationalVector& w = result.witness.w;
  const Rational wv = dot(w, v);
  bool all_nonneg = true;
  bool some_pos = false;
  bool all_nonpos = true;
  bool some_neg = false;
  for (const RationalVector& g : gens) {
    const Rational wg = dot(w, g);
    if (wg < 0) all_nonneg = false;
    if (wg > 0) {
      some_pos = true;
      all_nonpos = false;
    }
    if (wg < 0) some_neg = true;
  }
  const bool farkas = all_nonneg && wv < 0;
  const bool supporting = all_nonneg && wv == 0 && some_pos;
  const bool stiemke = is_zero_vector(v) && all_nonpos && some_neg;
  if (!farkas && !supporting && !stiemke) {
    broken("relint separator fails every certificate form");
  }
}

void recheck_relint_intersect(const RationalMatrix& gens_a,
                              const RationalMatrix& gens_b,
                              const IntersectResult& result) {
  if (result.intersects) {
    if (result.lambdas_a.size() != gens_a.size() ||
        result.lambdas_b.size() != gens_b.size()) {
      broken("intersection witness malformed");
    }
    for (const Rational& l : result.lambdas_a) {
      if (l <= 0) broken("intersection coefficient not positive");
    }
    for (const Rational& l : result.lambdas_b) {
      if (l <= 0) broken("intersection coefficient not positive");
    }
    RationalVector pa = combine(gens_a, result.lambdas_a);
    RationalVector pb = combine(gens_b, result.lambdas_b);
    if (pa.empty()) pa.assign(result.point.size(), 0);
    if (pb.empty()) pb.assign(result.point.size(), 0);
    if (pa != result.point || pb != result.point) {
      broken("intersection point not reproduced from both sides");
    }
    return;
  }
  const RationalVector& w = result.w;
  bool some_strict = false;
  for (const RationalVector& g : gens_a) {
    const Rational wg = dot(w, g);
    if (wg < 0) broken("separator cuts first cone");
    if (wg > 0) some_strict = true;
  }
  for (const RationalVector& g : gens_b) {
    const Rational wg = dot(w, g);
    if (wg > 0) broken("separator cuts second cone");
    if (wg < 0) some_strict = true;
  }
  if (!some_strict) broken("separator supports both cones trivially");
}

}  // namespace crnet
