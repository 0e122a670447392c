// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "crnet/classify.hpp"
#include "crnet/egraph.hpp"
#include "crnet/equivalence.hpp"
#include "crnet/errors.hpp"
#include "crnet/randomnet.hpp"
#include "crnet/realize.hpp"
#include "crnet/vector_field.hpp"
#include "helpers.hpp"

using namespace crnet;
using testutil::code_of;
using testutil::load_graph;
using testutil::load_net;
using testutil::q;
using testutil::rv;
using testutil::same_network;

namespace {

std::set<RationalVector> source_labels(const EGraph& g) {
  std::set<RationalVector> out;
  for (std::size_t id : g.source_node_ids()) out.insert(g.node(id));
  return out;
}

Rational rate_of(const RealizationResult& r, const RationalVector& from,
                 const RationalVector& to) {
  const EGraph& g = r.graph;
  REQUIRE(r.rate_map.has_value());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (g.source(e) == from && g.target(e) == to) return (*r.rate_map)[e];
  }
  FAIL("edge not found");
  return 0;
}

}  // namespace

TEST_CASE("make_source_only splits the pure product edge of ex1") {
  EGraph ex1 = load_graph("ex1.crn");
  RealizationResult r = make_source_only(ex1);
  CHECK(r.kind == RealizationResult::Kind::SourceOnly);
  CHECK(same_network(r.graph, load_graph("ex12.crn")));
  CHECK(is_source_only(r.graph));
  CHECK(dynamics_included(ex1, r.graph).holds);
  CHECK(source_labels(r.graph) == source_labels(ex1));
  CHECK_FALSE(r.rate_map.has_value());
  CHECK_NOTHROW(recheck_provenance(ex1, r));
  REQUIRE_FALSE(r.provenance.empty());
}

TEST_CASE("make_source_only is the identity on source-only inputs") {
  for (const char* name : {"ex3.crn", "gsmall.crn", "system1.crn"}) {
    CAPTURE(name);
    EGraph g = load_graph(name);
    RealizationResult r = make_source_only(g);
    CHECK(same_network(r.graph, g));
    CHECK_NOTHROW(recheck_provenance(g, r));
  }
}

TEST_CASE("make_source_only rejects non-endotactic inputs") {
  CHECK(code_of([] { make_source_only(load_graph("gbig.crn")); }) ==
        ErrorCode::NotEndotactic);
  CHECK(code_of([] { make_source_only(load_graph("system2.crn")); }) ==
        ErrorCode::NotEndotactic);
}

TEST_CASE("recheck_provenance rejects tampered certificates") {
  EGraph ex1 = load_graph("ex1.crn");
  RealizationResult r = make_source_only(ex1);
  REQUIRE_FALSE(r.provenance.empty());
  REQUIRE_FALSE(r.provenance[0].lambdas.empty());
  r.provenance[0].lambdas[0] += 1;
  CHECK(code_of([&] { recheck_provenance(ex1, r); }) ==
        ErrorCode::InternalInvariantBroken);
}

TEST_CASE("eliminate_zero_sources collapses the chain onto its end complexes") {
  auto [chain, chain_rates] = load_net("chain.crn");
  REQUIRE(chain_rates.has_value());

  RealizationResult r = eliminate_zero_sources(chain, *chain_rates);
  CHECK(r.kind == RealizationResult::Kind::ZeroSourceElimination);
  EGraph expected = validate({rv({0}), rv({2})}, {{0, 1}, {1, 0}}, 1);
  CHECK(same_network(r.graph, expected));
  CHECK(rate_of(r, rv({0}), rv({2})) == q(1, 2));
  CHECK(rate_of(r, rv({2}), rv({0})) == q(1, 2));
  CHECK(is_weakly_reversible(r.graph));
  VectorField f = generate_field(chain, *chain_rates);
  CHECK(fields_equal(generate_field(r.graph, *r.rate_map), f));
  CHECK_NOTHROW(recheck_provenance(chain, r));

  std::set<RationalVector> exponents;
  for (const auto& [e, c] : f.terms) exponents.insert(e);
  CHECK(source_labels(r.graph) == exponents);
}

TEST_CASE("eliminate_zero_sources scales with the input rates") {
  EGraph chain = load_graph("chain.crn");
  RealizationResult r = eliminate_zero_sources(chain, {q(3), q(2), q(2), q(5)});
  CHECK(rate_of(r, rv({0}), rv({2})) == q(3, 2));
  CHECK(rate_of(r, rv({2}), rv({0})) == q(5, 2));
  VectorField f = generate_field(r.graph, *r.rate_map);
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms.at(rv({0})) == rv({3}));
  CHECK(f.terms.at(rv({2})) == rv({-5}));
}

TEST_CASE("eliminate_zero_sources keeps sources with nonzero net coefficient") {
  EGraph cyc = load_graph("gsmall.crn");
  RealizationResult r = eliminate_zero_sources(cyc, {q(1), q(2)});
  CHECK(same_network(r.graph, cyc));
  CHECK(fields_equal(generate_field(r.graph, *r.rate_map),
                     generate_field(cyc, {q(1), q(2)})));
  CHECK_NOTHROW(recheck_provenance(cyc, r));
}

TEST_CASE("eliminate_zero_sources requires weak reversibility") {
  auto net = load_net("eq11.crn");
  REQUIRE(net.second.has_value());
  CHECK(code_of([&] { eliminate_zero_sources(net.first, *net.second); }) ==
        ErrorCode::NotWeaklyReversible);
}

TEST_CASE("eliminate_zero_sources on engineered weakly reversible networks") {
  std::mt19937_64 rng(606);
  for (int iter = 0; iter < 10; ++iter) {
    auto [g, rates] = random_zero_source_wr(2, rng);
    REQUIRE(is_weakly_reversible(g));
    VectorField f = generate_field(g, rates);
    REQUIRE(f.terms.size() < g.source_node_ids().size());

    RealizationResult r = eliminate_zero_sources(g, rates);
    CHECK(is_weakly_reversible(r.graph));
    CHECK(fields_equal(generate_field(r.graph, *r.rate_map), f));
    std::set<RationalVector> exponents;
    for (const auto& [e, c] : f.terms) exponents.insert(e);
    CHECK(source_labels(r.graph) == exponents);
    CHECK_NOTHROW(recheck_provenance(g, r));
  }
}

TEST_CASE("ewr_realize_2d precondition failures") {
  CHECK(code_of([] { ewr_realize_2d(load_graph("gsmall.crn")); }) ==
        ErrorCode::WrongDimension);
  CHECK(code_of([] { ewr_realize_2d(load_graph("eq11.crn")); }) ==
        ErrorCode::WrongDimension);
  CHECK(code_of([] { ewr_realize_2d(load_graph("ex1.crn")); }) ==
        ErrorCode::InteriorSourcePresent);
  CHECK(code_of([] { ewr_realize_2d(load_graph("ex3.crn")); }) ==
        ErrorCode::NotStronglyEndotactic);
}

TEST_CASE("ewr_realize_2d on a triangular strongly endotactic network") {
  EGraph g = validate({rv({0, 0}), rv({2, 0}), rv({0, 2}), rv({1, 0})},
                      {{0, 1}, {1, 2}, {2, 3}}, 2);
  REQUIRE(is_strongly_endotactic(g).holds);

  RealizationResult r = ewr_realize_2d(g);
  CHECK(r.kind == RealizationResult::Kind::ExtremallyWeaklyReversible2D);
  CHECK(is_weakly_reversible(r.graph));
  CHECK(is_strongly_endotactic(r.graph).holds);
  CHECK(dynamics_included(g, r.graph).holds);
  CHECK_NOTHROW(recheck_provenance(g, r));
}

TEST_CASE("ewr_realize_2d on random strongly endotactic networks") {
  std::mt19937_64 rng(7117);
  for (int iter = 0; iter < 10; ++iter) {
    EGraph g = random_strongly_endotactic_2d(rng);
    REQUIRE(is_strongly_endotactic(g).holds);
    RealizationResult r = ewr_realize_2d(g);
    CHECK(is_weakly_reversible(r.graph));
    CHECK(is_strongly_endotactic(r.graph).holds);
    CHECK(dynamics_included(g, r.graph).holds);
    CHECK_NOTHROW(recheck_provenance(g, r));
  }
}
