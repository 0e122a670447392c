// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crnet/equivalence.hpp"

#include <cstddef>
#include <set>

#include "crnet/errors.hpp"

namespace crnet {
namespace {

// Reaction vectors of the edges whose source complex is `coords`.
RationalMatrix cone_generators_at(const EGraph& g,
                                  const RationalVector& coords) {
  RationalMatrix gens;
  const auto id = g.find_node(coords);
  if (!id.has_value()) return gens;
  for (std::size_t e : g.edges_from(*id)) {
    gens.push_back(g.reaction_vector(e));
  }
  return gens;
}

}  // namespace

InclusionReport dynamics_included(const EGraph& inner, const EGraph& outer) {
  if (inner.dim() != outer.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "networks live in different dimensions");
  }
  InclusionReport report;

  for (std::size_t id : inner.source_node_ids()) {
    const RationalVector& s = inner.node(id);
    const auto outer_id = outer.find_node(s);
    if (!outer_id.has_value() || !outer.node_is_source(*outer_id)) {
      report.holds = false;
      report.failing_source = s;
      report.failing_reason = InclusionFailure::SourceNotCovered;
      return report;
    }
  }

  for (std::size_t id : outer.source_node_ids()) {
    const RationalVector& s = outer.node(id);
    SourceInclusion entry;
    entry.source = s;
    entry.containment =
        relint_contained(cone_generators_at(inner, s), cone_generators_at(outer, s));
    const bool ok = entry.containment.member;
    report.per_source.push_back(std::move(entry));
    if (!ok) {
      report.holds = false;
      report.failing_source = s;
      report.failing_reason = InclusionFailure::RelIntNotContained;
      return report;
    }
  }

  report.holds = true;
  return report;
}

CapacityReport capacity_for_equivalence(const EGraph& a, const EGraph& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "networks live in different dimensions");
  }
  std::set<RationalVector> sources;
  for (std::size_t id : a.source_node_ids()) sources.insert(a.node(id));
  for (std::size_t id : b.source_node_ids()) sources.insert(b.node(id));

  CapacityReport report;
  VectorField field;
  field.dim = a.dim();
  for (const RationalVector& s : sources) {
    const IntersectResult r =
        relint_intersect(cone_generators_at(a, s), cone_generators_at(b, s));
    if (!r.intersects) {
      report.capacity = false;
      report.failing_source = s;
      report.separating_w = r.w;
      return report;
    }
    field.terms[s] = r.point;
  }
  canonicalize(field);
  report.capacity = true;
  report.shared_field = std::move(field);
  return report;
}

RateAssignment find_rate_witness(const EGraph& graph,
                                 const VectorField& field) {
  if (graph.dim() != field.dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "field dimension does not match network dimension");
  }
  for (const auto& [exponent, coeff] : field.terms) {
    const auto id = graph.find_node(exponent);
    if (!id.has_value() || !graph.node_is_source(*id)) {
      throw Error(ErrorCode::ExponentNotASource,
                  "field monomial " + vector_to_string(exponent) +
                      " is not a source of the network");
    }
  }

  RateAssignment rates(graph.edges().size(), 0);
  for (std::size_t id : graph.source_node_ids()) {
    const std::vector<std::size_t> out = graph.edges_from(id);
    RationalMatrix gens;
    gens.reserve(out.size());
    for (std::size_t e : out) gens.push_back(graph.reaction_vector(e));

    RationalVector target(graph.dim(), 0);
    const auto term = field.terms.find(graph.node(id));
    if (term != field.terms.end()) target = term->second;

    const ConeResult r = relint_member(target, gens);
    if (!r.member) {
      throw Error(ErrorCode::NoPositiveSolution,
                  "no positive rates at source " +
                      vector_to_string(graph.node(id)));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      rates[out[i]] = r.witness.lambdas[i];
    }
  }

  if (!fields_equal(generate_field(graph, rates), field)) {
    throw Error(ErrorCode::InternalInvariantBroken,
                "rate witness does not reproduce the field");
  }
  return rates;
}

}  // namespace crnet
