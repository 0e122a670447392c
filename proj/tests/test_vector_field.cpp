// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <vector>

#include "doctest.h"

#include "crnet/egraph.hpp"
#include "crnet/errors.hpp"
#include "crnet/linalg.hpp"
#include "crnet/randomnet.hpp"
#include "crnet/vector_field.hpp"
#include "helpers.hpp"

using namespace crnet;
using testutil::code_of;
using testutil::load_graph;
using testutil::load_net;
using testutil::q;
using testutil::rv;

namespace {

VectorField field_of(const std::string& name) {
  auto [graph, rates] = load_net(name);
  REQUIRE(rates.has_value());
  return generate_field(graph, *rates);
}

}  // namespace

TEST_CASE("generate_field groups edge contributions by source exponent") {
  VectorField f = field_of("system1.crn");
  REQUIRE(f.dim == 2);
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms.at(rv({1, 0})) == rv({-1, 1}));
  CHECK(f.terms.at(rv({0, 1})) == rv({1, -1}));
}

TEST_CASE("distinct networks can generate the same field") {
  CHECK(fields_equal(field_of("system1.crn"), field_of("system2.crn")));
  CHECK(fields_equal(field_of("eq11.crn"), field_of("eq12.crn")));

  VectorField f = field_of("eq11.crn");
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms.at(rv({0})) == rv({1}));
  CHECK(f.terms.at(rv({2})) == rv({-1}));
}

TEST_CASE("rate choice decides whether the bigger network matches the cycle") {
  EGraph gbig = load_graph("gbig.crn");
  EGraph gsmall = load_graph("gsmall.crn");
  VectorField matched = generate_field(gbig, {q(2), q(2), q(3), q(3)});
  CHECK(fields_equal(matched, generate_field(gsmall, {q(2), q(3)})));

  VectorField skewed = generate_field(gbig, {q(1), q(2), q(1), q(1)});
  CHECK_FALSE(fields_equal(skewed, generate_field(gsmall, {q(1), q(1)})));
  CHECK(skewed.terms.at(rv({1, 0})) == rv({-2, 1}));
}

TEST_CASE("cancelling edges drop out of the canonical form") {
  // X -> 2X and X -> 0 at equal rates cancel at source (1).
  EGraph g = validate({rv({1}), rv({2}), rv({0})}, {{0, 1}, {0, 2}}, 1);
  VectorField f = generate_field(g, {q(1), q(1)});
  CHECK(f.terms.empty());
  VectorField h = generate_field(g, {q(2), q(1)});
  REQUIRE(h.terms.size() == 1);
  CHECK(h.terms.at(rv({1})) == rv({1}));
}

TEST_CASE("evaluate_field") {
  VectorField f = field_of("system1.crn");
  CHECK(evaluate_field(f, rv({3, 5})) == rv({2, -2}));
  CHECK(evaluate_field(f, rv({0, 0})) == rv({0, 0}));

  VectorField g = field_of("eq11.crn");
  CHECK(evaluate_field(g, rv({0})) == rv({1}));
  CHECK(evaluate_field(g, rv({1})) == rv({0}));
  CHECK(evaluate_field(g, RationalVector{q(1, 2)}) == RationalVector{q(3, 4)});

  EGraph eq12 = load_graph("eq12.crn");
  VectorField h = generate_field(eq12, {q(2), q(1, 2)});
  CHECK(evaluate_field(h, rv({2})) == rv({0}));

  CHECK(code_of([&] { evaluate_field(f, rv({1})); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { evaluate_field(g, rv({-1})); }) == ErrorCode::NegativeCoordinate);
}

TEST_CASE("fractional exponents evaluate only where the base is one") {
  EGraph g = validate({RationalVector{q(1, 2)}, RationalVector{q(3, 2)}}, {{0, 1}}, 1);
  VectorField f = generate_field(g, {q(1)});
  CHECK(evaluate_field(f, rv({1})) == rv({1}));
  CHECK(code_of([&] { evaluate_field(f, rv({4})); }) ==
        ErrorCode::NonIntegerExponentAtEvaluation);
}

TEST_CASE("fields_equal requires matching dimensions") {
  VectorField f = field_of("eq11.crn");
  VectorField g = field_of("system1.crn");
  CHECK(code_of([&] { fields_equal(f, g); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("stoichiometric_subspace") {
  RationalMatrix cyc = stoichiometric_subspace(load_graph("gsmall.crn"));
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0][0] == -cyc[0][1]);
  CHECK(cyc[0][0] != 0);

  CHECK(stoichiometric_subspace(load_graph("ex1.crn")).size() == 2);

  EGraph inflow = validate({rv({0}), rv({1})}, {{0, 1}}, 1);
  RationalMatrix line = stoichiometric_subspace(inflow);
  REQUIRE(line.size() == 1);
  CHECK(line[0] == rv({1}));
}

TEST_CASE("generate_field is linear in the rate vector") {
  EGraph gbig = load_graph("gbig.crn");
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 20; ++iter) {
    RateAssignment k1 = random_rates(gbig, rng);
    RateAssignment k2 = random_rates(gbig, rng);
    Rational a = q(1 + static_cast<long>(bounded(rng, 4)));
    Rational b = q(1 + static_cast<long>(bounded(rng, 4)), 2);
    RateAssignment mix(k1.size());
    for (std::size_t i = 0; i < k1.size(); ++i) mix[i] = a * k1[i] + b * k2[i];

    VectorField f1 = generate_field(gbig, k1);
    VectorField f2 = generate_field(gbig, k2);
    VectorField fm = generate_field(gbig, mix);
    for (const auto& [expnt, coeff] : fm.terms) {
      RationalVector expect(coeff.size(), 0);
      if (auto it = f1.terms.find(expnt); it != f1.terms.end())
        expect = vec_add(expect, vec_scale(a, it->second));
      if (auto it = f2.terms.find(expnt); it != f2.terms.end())
        expect = vec_add(expect, vec_scale(b, it->second));
      CHECK(coeff == expect);
    }
  }
}

TEST_CASE("field values stay inside the stoichiometric subspace") {
  std::mt19937_64 rng(7);
  RandomNetOptions opt;
  opt.dim = 3;
  opt.num_nodes = 5;
  opt.num_edges = 6;
  opt.coord_bound = 2;
  for (int iter = 0; iter < 25; ++iter) {
    EGraph g = random_network(opt, rng);
    RateAssignment k = random_rates(g, rng);
    VectorField f = generate_field(g, k);
    RationalMatrix basis = stoichiometric_subspace(g);
    RationalVector x = {q(1 + static_cast<long>(bounded(rng, 3))),
                        q(1 + static_cast<long>(bounded(rng, 3))),
                        q(1 + static_cast<long>(bounded(rng, 3)), 2)};
    RationalVector value = evaluate_field(f, x);
    RationalMatrix extended = basis;
    extended.push_back(value);
    CHECK(rank(extended) == rank(basis));
  }
}
