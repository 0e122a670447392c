// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crnet/egraph.hpp"
#include "crnet/rational.hpp"

namespace crnet {

/// One parsed reaction line. Complexes hold only nonzero coefficients;
/// species with an explicit zero coefficient are still registered in the
/// document's species order.
struct ReactionLine {
  std::map<std::string, Rational> lhs;
  std::map<std::string, Rational> rhs;
  bool reversible = false;
  std::optional<Rational> rate_forward;
  std::optional<Rational> rate_backward;
  std::size_t line = 0;

  friend bool operator==(const ReactionLine&, const ReactionLine&) = default;
};

struct NetworkDocument {
  std::vector<std::string> species_order;
  std::vector<ReactionLine> reactions;

  friend bool operator==(const NetworkDocument&,
                         const NetworkDocument&) = default;
};

/// Line-oriented format:
///   # comment
///   species: X1 X2
///   2 X1 + X2 -> 3 X2 , k = 5/2
///   X1 <-> X2 , k = 1, 2
/// "0" denotes the empty complex; coefficients default to 1 and must be
/// nonnegative rationals written as p or p/q (no decimals).
NetworkDocument parse(const std::string& text);

/// Canonical text form; parse(serialize(parse(t))) == parse(t).
std::string serialize(const NetworkDocument& doc);

/// Builds the embedded graph: nodes are the distinct complex coordinate
/// vectors under species_order, one edge per direction of each reaction.
/// Rates are returned when every reaction carries them, absent when none
/// does; a mixture throws MissingRate.
std::pair<EGraph, std::optional<RateAssignment>> to_egraph(
    const NetworkDocument& doc);

}  // namespace crnet
