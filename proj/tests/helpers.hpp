// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crnet/egraph.hpp"
#include "crnet/errors.hpp"
#include "crnet/parser.hpp"
#include "crnet/rational.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(CRNET_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline crnet::NetworkDocument load_doc(const std::string& name) {
  return crnet::parse(slurp(data_path(name)));
}

inline std::pair<crnet::EGraph, std::optional<crnet::RateAssignment>> load_net(
    const std::string& name) {
  return crnet::to_egraph(load_doc(name));
}

inline crnet::EGraph load_graph(const std::string& name) {
  return load_net(name).first;
}

inline crnet::RationalVector rv(std::initializer_list<long> xs) {
  crnet::RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline crnet::Rational q(long num, long den = 1) { return {num, den}; }

/// Structural equality up to node and edge order.
inline bool same_network(const crnet::EGraph& a, const crnet::EGraph& b) {
  if (a.dim() != b.dim()) return false;
  std::set<crnet::RationalVector> na(a.nodes().begin(), a.nodes().end());
  std::set<crnet::RationalVector> nb(b.nodes().begin(), b.nodes().end());
  if (na != nb) return false;
  std::set<std::pair<crnet::RationalVector, crnet::RationalVector>> ea, eb;
  for (std::size_t e = 0; e < a.edges().size(); ++e) ea.insert({a.source(e), a.target(e)});
  for (std::size_t e = 0; e < b.edges().size(); ++e) eb.insert({b.source(e), b.target(e)});
  if (a.edges().size() != ea.size() || b.edges().size() != eb.size()) return false;
  return ea == eb;
}

template <typename F>
std::optional<crnet::ErrorCode> code_of(F&& f) {
  try {
    std::forward<F>(f)();
    return std::nullopt;
  } catch (const crnet::Error& e) {
    return e.code();
  }
}

}  // namespace testutil
