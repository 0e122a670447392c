// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <vector>

#include "doctest.h"

#include "crnet/cone.hpp"
#include "crnet/egraph.hpp"
#include "crnet/equivalence.hpp"
#include "crnet/errors.hpp"
#include "crnet/randomnet.hpp"
#include "crnet/vector_field.hpp"
#include "helpers.hpp"

using namespace crnet;
using testutil::code_of;
using testutil::load_graph;
using testutil::q;
using testutil::rv;

namespace {

RationalMatrix gens_at(const EGraph& g, const RationalVector& s) {
  RationalMatrix gens;
  if (auto id = g.find_node(s); id.has_value()) {
    for (std::size_t e : g.edges_from(*id)) gens.push_back(g.reaction_vector(e));
  }
  return gens;
}

RationalVector combine(const RationalMatrix& gens, const RationalVector& lambdas,
                       std::size_t dim) {
  RationalVector out(dim, 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out = vec_add(out, vec_scale(lambdas[i], gens[i]));
  }
  return out;
}

}  // namespace

TEST_CASE("dynamics_included holds across the bundled pairs") {
  EGraph system1 = load_graph("system1.crn");
  EGraph system2 = load_graph("system2.crn");
  InclusionReport r = dynamics_included(system1, system2);
  REQUIRE(r.holds);
  CHECK(r.per_source.size() == 2);
  for (const SourceInclusion& entry : r.per_source) {
    REQUIRE(entry.containment.member);
    REQUIRE(entry.containment.witness.kind == ConeWitness::Kind::Coefficients);
    RationalMatrix inner = gens_at(system1, entry.source);
    RationalMatrix outer = gens_at(system2, entry.source);
    RationalVector inner_sum(system1.dim(), 0);
    for (const auto& v : inner) inner_sum = vec_add(inner_sum, v);
    const RationalVector& lam = entry.containment.witness.lambdas;
    REQUIRE(lam.size() == outer.size());
    for (const Rational& l : lam) CHECK(l > 0);
    CHECK(combine(outer, lam, system1.dim()) == inner_sum);
  }

  CHECK(dynamics_included(load_graph("ex1.crn"), load_graph("ex12.crn")).holds);
  CHECK(dynamics_included(load_graph("gsmall.crn"), load_graph("gbig.crn")).holds);
}

TEST_CASE("dynamics_included is reflexive") {
  for (const char* name : {"system1.crn", "system2.crn", "ex1.crn", "ex3.crn", "chain.crn"}) {
    CAPTURE(name);
    EGraph g = load_graph(name);
    CHECK(dynamics_included(g, g).holds);
  }
}

TEST_CASE("inclusion fails when a source is missing from the outer network") {
  InclusionReport r =
      dynamics_included(load_graph("x_to_2x.crn"), load_graph("2x_to_x.crn"));
  REQUIRE_FALSE(r.holds);
  CHECK(r.failing_reason == InclusionFailure::SourceNotCovered);
  CHECK(r.failing_source == rv({1}));
}

TEST_CASE("inclusion fails when a reaction cone escapes the outer cone") {
  EGraph system1 = load_graph("system1.crn");
  EGraph system2 = load_graph("system2.crn");
  InclusionReport r = dynamics_included(system2, system1);
  REQUIRE_FALSE(r.holds);
  CHECK(r.failing_reason == InclusionFailure::RelIntNotContained);
  CHECK(r.failing_source == rv({1, 0}));
  REQUIRE_FALSE(r.per_source.empty());
  const SourceInclusion& failed = r.per_source.back();
  CHECK(failed.source == rv({1, 0}));
  REQUIRE_FALSE(failed.containment.member);
  CHECK(failed.containment.witness.kind == ConeWitness::Kind::SeparatingDirection);

  InclusionReport back = dynamics_included(load_graph("ex12.crn"), load_graph("ex1.crn"));
  REQUIRE_FALSE(back.holds);
  CHECK(back.failing_reason == InclusionFailure::RelIntNotContained);
  CHECK(back.failing_source == rv({1, 1}));
}

TEST_CASE("inclusion requires matching dimensions") {
  CHECK(code_of([] {
          dynamics_included(load_graph("eq11.crn"), load_graph("system1.crn"));
        }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("capacity_for_equivalence on the bundled pairs") {
  EGraph gbig = load_graph("gbig.crn");
  EGraph gsmall = load_graph("gsmall.crn");
  CapacityReport r = capacity_for_equivalence(gbig, gsmall);
  REQUIRE(r.capacity);
  REQUIRE(r.shared_field.has_value());
  RateAssignment kb = find_rate_witness(gbig, *r.shared_field);
  RateAssignment ks = find_rate_witness(gsmall, *r.shared_field);
  CHECK(fields_equal(generate_field(gbig, kb), *r.shared_field));
  CHECK(fields_equal(generate_field(gsmall, ks), *r.shared_field));

  CHECK(capacity_for_equivalence(load_graph("ex1.crn"), load_graph("ex12.crn")).capacity);
  CHECK(capacity_for_equivalence(load_graph("system1.crn"), load_graph("system2.crn")).capacity);
}

TEST_CASE("capacity is symmetric on fixtures") {
  const char* names[] = {"system1.crn", "system2.crn", "gbig.crn",
                         "gsmall.crn",  "ex1.crn",     "x_to_2x.crn"};
  for (const char* a : names) {
    for (const char* b : names) {
      EGraph ga = load_graph(a);
      EGraph gb = load_graph(b);
      if (ga.dim() != gb.dim()) continue;
      CHECK(capacity_for_equivalence(ga, gb).capacity ==
            capacity_for_equivalence(gb, ga).capacity);
    }
  }
}

TEST_CASE("capacity fails with a separating direction") {
  CapacityReport r =
      capacity_for_equivalence(load_graph("x_to_2x.crn"), load_graph("2x_to_x.crn"));
  REQUIRE_FALSE(r.capacity);
  CHECK(r.failing_source == rv({1}));
  REQUIRE(r.separating_w.size() == 1);
  // At source (1) the first cone is the ray through +1, the second is {0}.
  CHECK(r.separating_w[0] > 0);
}

TEST_CASE("one-way inclusion still grants capacity") {
  EGraph inner = load_graph("gsmall.crn");
  EGraph outer = load_graph("gbig.crn");
  REQUIRE(dynamics_included(inner, outer).holds);
  REQUIRE_FALSE(dynamics_included(outer, inner).holds);
  CHECK(capacity_for_equivalence(inner, outer).capacity);
}

TEST_CASE("find_rate_witness recovers the unique cycle rates") {
  EGraph gbig = load_graph("gbig.crn");
  EGraph gsmall = load_graph("gsmall.crn");
  VectorField f = generate_field(gbig, {q(2), q(2), q(3), q(3)});
  RateAssignment k = find_rate_witness(gsmall, f);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == q(2));
  CHECK(k[1] == q(3));
}

TEST_CASE("find_rate_witness error cases") {
  EGraph gsmall = load_graph("gsmall.crn");
  SUBCASE("monomial that is not a source") {
    VectorField f;
    f.dim = 2;
    f.terms[rv({1, 1})] = rv({1, 0});
    CHECK(code_of([&] { find_rate_witness(gsmall, f); }) == ErrorCode::ExponentNotASource);
  }
  SUBCASE("zero field needs cancelling reactions") {
    VectorField zero;
    zero.dim = 1;
    CHECK(code_of([&] { find_rate_witness(load_graph("x_to_2x.crn"), zero); }) ==
          ErrorCode::NoPositiveSolution);
    EGraph cancelling = validate({rv({1}), rv({2}), rv({0})}, {{0, 1}, {0, 2}}, 1);
    RateAssignment k = find_rate_witness(cancelling, zero);
    REQUIRE(k.size() == 2);
    CHECK(k[0] == k[1]);
    CHECK(fields_equal(generate_field(cancelling, k), zero));
  }
  SUBCASE("dimension mismatch") {
    VectorField f;
    f.dim = 1;
    CHECK(code_of([&] { find_rate_witness(gsmall, f); }) == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("inclusion is sharp: some fields of the larger network are unreachable") {
  EGraph system1 = load_graph("system1.crn");
  EGraph system2 = load_graph("system2.crn");
  VectorField f = generate_field(system2, {q(1), q(3), q(1)});
  CHECK(code_of([&] { find_rate_witness(system1, f); }) == ErrorCode::NoPositiveSolution);
  // Every field of the smaller network is reachable by the larger one.
  for (long a : {1, 2, 5}) {
    for (long b : {1, 3}) {
      VectorField g = generate_field(system1, {q(a), q(b)});
      RateAssignment k = find_rate_witness(system2, g);
      CHECK(fields_equal(generate_field(system2, k), g));
    }
  }
}

TEST_CASE("split networks reproduce every field of the base network") {
  EGraph ex1 = load_graph("ex1.crn");
  EGraph ex12 = load_graph("ex12.crn");
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 10; ++iter) {
    RateAssignment k = random_rates(ex1, rng);
    VectorField f = generate_field(ex1, k);
    RateAssignment k2 = find_rate_witness(ex12, f);
    CHECK(fields_equal(generate_field(ex12, k2), f));
  }
}

TEST_CASE("random split pairs satisfy inclusion") {
  std::mt19937_64 rng(808);
  RandomNetOptions opt;
  opt.dim = 2;
  opt.num_nodes = 4;
  opt.num_edges = 4;
  for (int iter = 0; iter < 20; ++iter) {
    SplitPair pair = random_split_pair(opt, rng);
    InclusionReport r = dynamics_included(pair.base, pair.split);
    CHECK(r.holds);
    CHECK(capacity_for_equivalence(pair.base, pair.split).capacity);
  }
}
