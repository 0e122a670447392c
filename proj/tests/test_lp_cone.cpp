// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"

#include "crnet/cone.hpp"
#include "crnet/errors.hpp"
#include "crnet/lp.hpp"
#include "crnet/randomnet.hpp"

#include "helpers.hpp"

using namespace crnet;
using testutil::code_of;
using testutil::q;
using testutil::rv;

TEST_CASE("solve_lp basic optimum and duals") {
  // maximize x1 + x2 s.t. x1 + 2 x2 = 4, x1, x2 >= 0
  LpProblem p;
  p.num_vars = 2;
  p.rows = {rv({1, 2})};
  p.rhs = rv({4});
  p.objective = rv({1, 1});
  LpSolution s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective_value == 4);
  CHECK(s.x[0] == 4);
  CHECK(s.x[1] == 0);
  // duals: y * A_j >= c_j, y * b = optimum
  CHECK(s.dual[0] * 4 == s.objective_value);
  CHECK(s.dual[0] * 1 >= 1);
  CHECK(s.dual[0] * 2 >= 1);
}

TEST_CASE("solve_lp infeasible gives a Farkas certificate") {
  // x1 + x2 = -1 with x >= 0 is infeasible.
  LpProblem p;
  p.num_vars = 2;
  p.rows = {rv({1, 1})};
  p.rhs = rv({-1});
  p.objective = rv({0, 0});
  LpSolution s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Infeasible);
  CHECK(s.dual[0] * 1 >= 0);
  CHECK(s.dual[0] * (-1) < 0);
}

TEST_CASE("solve_lp detects unboundedness") {
  // maximize x1 s.t. x1 - x2 = 0: both can grow without bound.
  LpProblem p;
  p.num_vars = 2;
  p.rows = {rv({1, -1})};
  p.rhs = rv({0});
  p.objective = rv({1, 0});
  LpSolution s = solve_lp(p);
  CHECK(s.status == LpStatus::Unbounded);
}

TEST_CASE("solve_lp with redundant rows") {
  LpProblem p;
  p.num_vars = 2;
  p.rows = {rv({1, 1}), rv({2, 2})};
  p.rhs = rv({3, 6});
  p.objective = rv({1, 0});
  LpSolution s = solve_lp(p);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective_value == 3);
  CHECK(s.dual.size() == 2);
  CHECK(s.dual[0] * 3 + s.dual[1] * 6 == 3);
}

TEST_CASE("cone_member examples") {
  auto r = cone_member(rv({1, 1}), {rv({1, 0}), rv({0, 1})});
  CHECK(r.member);
  CHECK(r.witness.lambdas == rv({1, 1}));
  recheck_cone_member(rv({1, 1}), {rv({1, 0}), rv({0, 1})}, r);

  auto f = cone_member(rv({-1, 0}), {rv({1, 0}), rv({0, 1})});
  CHECK_FALSE(f.member);
  CHECK(f.witness.w[0] > 0);
  recheck_cone_member(rv({-1, 0}), {rv({1, 0}), rv({0, 1})}, f);

  auto z = cone_member(rv({0, 0}), {});
  CHECK(z.member);
  CHECK(z.witness.lambdas.empty());
  recheck_cone_member(rv({0, 0}), {}, z);

  CHECK(code_of([] { cone_member(rv({1}), {rv({1, 0})}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("relint_member examples") {
  auto r = relint_member(rv({1, 0}), {rv({1, 1}), rv({1, -1})});
  CHECK(r.member);
  CHECK(r.witness.lambdas == RationalVector{q(1, 2), q(1, 2)});
  recheck_relint_member(rv({1, 0}), {rv({1, 1}), rv({1, -1})}, r);

  // Any positive combination of these three has positive second coordinate.
  RationalMatrix gens = {rv({1, 0}), rv({-1, 0}), rv({0, 1})};
  auto f = relint_member(rv({0, 0}), gens);
  CHECK_FALSE(f.member);
  recheck_relint_member(rv({0, 0}), gens, f);

  auto t = relint_member(rv({0, 0}), {rv({1, 0}), rv({-1, 0})});
  CHECK(t.member);
  CHECK(t.witness.lambdas.size() == 2);
  CHECK(t.witness.lambdas[0] > 0);
  CHECK(t.witness.lambdas[1] > 0);
  recheck_relint_member(rv({0, 0}), {rv({1, 0}), rv({-1, 0})}, t);
}

TEST_CASE("relint_member edge cases") {
  // Empty generator list: relint({0}) = {0}.
  CHECK(relint_member(rv({0, 0}), {}).member);
  CHECK_FALSE(relint_member(rv({1, 0}), {}).member);
  // Boundary of the quadrant.
  CHECK_FALSE(relint_member(rv({1, 0}), {rv({1, 0}), rv({0, 1})}).member);
  CHECK(cone_member(rv({1, 0}), {rv({1, 0}), rv({0, 1})}).member);
}

TEST_CASE("relint_contained examples") {
  // Reaction cone of X1 -> X2 inside the fan spanned at the same source by
  // the two replacement edges.
  CHECK(relint_contained({rv({-1, 1})}, {rv({0, 1}), rv({-1, 0})}).member);
  CHECK_FALSE(relint_contained({}, {rv({1, 0})}).member);
  CHECK_FALSE(relint_contained({rv({1, 0})}, {rv({1, 0}), rv({0, 1})}).member);
  CHECK(relint_contained({}, {}).member);
  CHECK(relint_contained({rv({1, 1})}, {rv({1, 0}), rv({0, 1})}).member);
}

TEST_CASE("relint_contained transitivity spot check") {
  RationalMatrix a = {rv({1, 1})};
  RationalMatrix b = {rv({1, 0}), rv({0, 1})};
  RationalMatrix c = {rv({1, 0}), rv({0, 1}), rv({1, 1})};
  CHECK(relint_contained(a, b).member);
  CHECK(relint_contained(b, c).member);
  CHECK(relint_contained(a, c).member);
}

TEST_CASE("relint_intersect examples") {
  auto r = relint_intersect({rv({1, 0}), rv({0, 1})}, {rv({1, 1})});
  CHECK(r.intersects);
  CHECK(r.point == rv({1, 1}));
  recheck_relint_intersect({rv({1, 0}), rv({0, 1})}, {rv({1, 1})}, r);

  auto f = relint_intersect({rv({1, 0})}, {});
  CHECK_FALSE(f.intersects);
  recheck_relint_intersect({rv({1, 0})}, {}, f);

  // ex1 edge at source (1,1) against the ex12 split pair.
  auto p = relint_intersect({rv({1, 1})}, {rv({2, -1}), rv({-1, 2})});
  CHECK(p.intersects);
  CHECK(p.point == rv({1, 1}));
  recheck_relint_intersect({rv({1, 1})}, {rv({2, -1}), rv({-1, 2})}, p);

  auto both_zero = relint_intersect({}, {});
  CHECK(both_zero.intersects);
  CHECK(is_zero_vector(both_zero.point));
}

TEST_CASE("on_relative_hull_boundary examples") {
  RationalMatrix pts = {rv({3, 0}), rv({0, 3}), rv({0, 0}), rv({1, 1})};
  CHECK_FALSE(on_relative_hull_boundary(rv({1, 1}), pts));
  CHECK(on_relative_hull_boundary(rv({3, 0}), pts));
  CHECK(on_relative_hull_boundary(rv({0}), {rv({0})}));
  CHECK(code_of([&] { on_relative_hull_boundary(rv({5, 5}), pts); }) ==
        ErrorCode::PointNotInSet);
}

TEST_CASE("hull boundary on collinear sets uses the relative interior") {
  RationalMatrix line = {rv({0, 0}), rv({1, 1}), rv({2, 2})};
  CHECK(on_relative_hull_boundary(rv({0, 0}), line));
  CHECK(on_relative_hull_boundary(rv({2, 2}), line));
  CHECK_FALSE(on_relative_hull_boundary(rv({1, 1}), line));
}

TEST_CASE("cone decisions are invariant under positive generator scaling") {
  RationalMatrix gens = {rv({2, 1}), rv({-1, 3})};
  RationalMatrix scaled;
  for (const auto& g : gens) scaled.push_back(vec_scale(q(7, 3), g));
  for (const auto& v : {rv({1, 4}), rv({-3, 2}), rv({5, 0}), rv({0, 0})}) {
    CHECK(cone_member(v, gens).member == cone_member(v, scaled).member);
    CHECK(relint_member(v, gens).member == relint_member(v, scaled).member);
  }
}

TEST_CASE("relint membership of a constructed positive combination") {
  // Grid oracle: assemble v from strictly positive lambdas, relint_member
  // must accept; compare against a brute-force grid search where feasible.
  std::mt19937_64 rng(42);
  const std::vector<Rational> grid = {q(1, 2), q(1), q(3, 2), q(2)};
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 1 + bounded(rng, 3);
    RationalMatrix gens;
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector g(2);
      g[0] = Rational(static_cast<long>(bounded(rng, 7)) - 3);
      g[1] = Rational(static_cast<long>(bounded(rng, 7)) - 3);
      if (is_zero_vector(g)) g[0] = 1;
      gens.push_back(g);
    }
    RationalVector v(2, Rational(0));
    RationalVector lambdas;
    for (const auto& g : gens) {
      const Rational l = grid[bounded(rng, grid.size())];
      lambdas.push_back(l);
      v = vec_add(v, vec_scale(l, g));
    }
    auto r = relint_member(v, gens);
    CHECK(r.member);
    recheck_relint_member(v, gens, r);
    CHECK(cone_member(v, gens).member);

    // Brute-force grid witness: some positive grid assignment hits v.
    bool found = false;
    std::vector<std::size_t> idx(gens.size(), 0);
    for (;;) {
      RationalVector sum(2, Rational(0));
      for (std::size_t i = 0; i < gens.size(); ++i) {
        sum = vec_add(sum, vec_scale(grid[idx[i]], gens[i]));
      }
      if (sum == v) {
        found = true;
        break;
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == grid.size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
    CHECK(found);
  }
}

TEST_CASE("exactly one Farkas branch holds") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t dim = 1 + bounded(rng, 3);
    const std::size_t n = bounded(rng, 4);
    RationalMatrix gens;
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector g(dim);
      bool zero = true;
      for (auto& c : g) {
        c = Rational(static_cast<long>(bounded(rng, 5)) - 2);
        zero = zero && c == 0;
      }
      if (zero) g[0] = 1;
      gens.push_back(g);
    }
    RationalVector v(dim);
    for (auto& c : v) c = Rational(static_cast<long>(bounded(rng, 5)) - 2);

    auto c = cone_member(v, gens);
    recheck_cone_member(v, gens, c);
    auto r = relint_member(v, gens);
    recheck_relint_member(v, gens, r);
    if (r.member) CHECK(c.member);
  }
}
