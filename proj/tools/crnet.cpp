// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
//
// crnet: command-line front end. Verbs: classify | compare | realize |
// odes | random. Exit codes: 0 affirmative, 1 negative answer or
// precondition failure, 2 input or usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crnet/classify.hpp"
#include "crnet/equivalence.hpp"
#include "crnet/errors.hpp"
#include "crnet/parser.hpp"
#include "crnet/randomnet.hpp"
#include "crnet/realize.hpp"
#include "crnet/vector_field.hpp"

using json = nlohmann::ordered_json;
using namespace crnet;

namespace {

constexpr const char* kSchemaVersion = "1";

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

struct Input {
  std::string path;
  std::string text;
  NetworkDocument doc;
};

Input load_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Input input{path, buf.str(), {}};
  input.doc = parse(input.text);
  return input;
}

json inputs_json(const std::vector<const Input*>& inputs) {
  json arr = json::array();
  for (const Input* in : inputs) {
    arr.push_back({{"path", in->path}, {"fnv1a64", hex64(fnv1a64(in->text))}});
  }
  return arr;
}

json report_shell(const std::string& command, const std::vector<const Input*>& inputs) {
  json r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = command;
  r["inputs"] = inputs_json(inputs);
  return r;
}

std::string rat(const Rational& r) { return rational_to_string(r); }

json vec_json(const RationalVector& v) {
  json arr = json::array();
  for (const Rational& c : v) arr.push_back(rat(c));
  return arr;
}

json witness_json(const ConeWitness& w) {
  json j;
  j["kind"] = w.kind == ConeWitness::Kind::Coefficients ? "coefficients"
                                                        : "separating-direction";
  j["lambdas"] = vec_json(w.lambdas);
  j["w"] = vec_json(w.w);
  return j;
}

json field_json(const VectorField& f) {
  json arr = json::array();
  for (const auto& [expo, coeffs] : f.terms) {
    arr.push_back({{"exponent", vec_json(expo)}, {"vector", vec_json(coeffs)}});
  }
  return arr;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::SyntaxError, "cannot write '" + out_path + "'");
  out << payload;
}

// ---------------------------------------------------------------------------
// Shared plumbing

std::vector<std::string> default_species(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= dim; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

std::map<std::string, Rational> complex_of(const RationalVector& point,
                                           const std::vector<std::string>& species) {
  std::map<std::string, Rational> c;
  for (std::size_t j = 0; j < species.size(); ++j) {
    if (point[j] != 0) c[species[j]] = point[j];
  }
  return c;
}

NetworkDocument document_from_graph(const EGraph& graph,
                                    const std::vector<std::string>& species,
                                    const std::optional<RateAssignment>& rates) {
  NetworkDocument doc;
  doc.species_order = species;
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    ReactionLine line;
    line.lhs = complex_of(graph.source(e), species);
    line.rhs = complex_of(graph.target(e), species);
    if (rates) line.rate_forward = (*rates)[e];
    doc.reactions.push_back(std::move(line));
  }
  return doc;
}

/// Species alignment by name: the union of both declaration orders, first
/// file first. Zero-padding for absent species falls out of the complex maps.
std::vector<std::string> union_species(const NetworkDocument& a, const NetworkDocument& b) {
  std::vector<std::string> names = a.species_order;
  for (const std::string& n : b.species_order) {
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  return names;
}

RateAssignment parse_rates_flag(const std::string& flag, std::size_t num_edges) {
  RateAssignment rates;
  std::istringstream in(flag);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t eq = item.find('=');
    const std::string value = eq == std::string::npos ? item : item.substr(eq + 1);
    rates.push_back(parse_rational(value));
  }
  if (rates.size() != num_edges) {
    throw Error(ErrorCode::RateLengthMismatch,
                "--rates lists " + std::to_string(rates.size()) + " values for " +
                    std::to_string(num_edges) + " edges");
  }
  return rates;
}

// ---------------------------------------------------------------------------
// classify

json classification_json(const ClassificationReport& rep) {
  json r;
  r["reversible"] = rep.reversible;
  r["weakly_reversible"] = rep.weakly_reversible;
  r["endotactic"] = rep.endotactic;
  r["strongly_endotactic"] = rep.strongly_endotactic;
  r["extremally_weakly_reversible"] = rep.extremally_weakly_reversible;
  r["source_only"] = rep.source_only;
  r["consistent"] = rep.consistent;
  r["consistency_witness"] = witness_json(rep.consistency_witness);
  if (rep.endotactic_violation_w) {
    r["endotactic_violation"] = {{"w", vec_json(*rep.endotactic_violation_w)},
                                 {"edge", *rep.endotactic_violation_edge}};
  }
  if (rep.strong_violation_w) {
    r["strong_violation"] = {{"w", vec_json(*rep.strong_violation_w)},
                             {"edge", *rep.strong_violation_edge}};
  }
  return r;
}

bool report_flag(const ClassificationReport& rep, const std::string& name, bool& out) {
  if (name == "reversible") out = rep.reversible;
  else if (name == "weakly_reversible") out = rep.weakly_reversible;
  else if (name == "endotactic") out = rep.endotactic;
  else if (name == "strongly_endotactic") out = rep.strongly_endotactic;
  else if (name == "extremally_weakly_reversible") out = rep.extremally_weakly_reversible;
  else if (name == "source_only") out = rep.source_only;
  else if (name == "consistent") out = rep.consistent;
  else return false;
  return true;
}

int cmd_classify(const std::string& file, bool as_json, const std::string& out_path,
                 const std::vector<std::string>& expects) {
  Input input = load_input(file);
  auto [graph, rates] = to_egraph(input.doc);
  (void)rates;
  ClassificationReport rep = classify_all(graph);

  std::string payload;
  if (as_json) {
    json r = report_shell("classify", {&input});
    r["result"] = classification_json(rep);
    payload = r.dump(2);
  } else {
    std::ostringstream out;
    out << "reversible: " << (rep.reversible ? "true" : "false") << '\n'
        << "weakly_reversible: " << (rep.weakly_reversible ? "true" : "false") << '\n'
        << "endotactic: " << (rep.endotactic ? "true" : "false") << '\n'
        << "strongly_endotactic: " << (rep.strongly_endotactic ? "true" : "false") << '\n'
        << "extremally_weakly_reversible: "
        << (rep.extremally_weakly_reversible ? "true" : "false") << '\n'
        << "source_only: " << (rep.source_only ? "true" : "false") << '\n'
        << "consistent: " << (rep.consistent ? "true" : "false") << '\n';
    if (rep.consistent) {
      out << "consistency lambdas: " << vector_to_string(rep.consistency_witness.lambdas)
          << '\n';
    } else {
      out << "consistency separating w: " << vector_to_string(rep.consistency_witness.w)
          << '\n';
    }
    if (rep.endotactic_violation_w) {
      out << "endotactic violation: w = " << vector_to_string(*rep.endotactic_violation_w)
          << ", edge = " << *rep.endotactic_violation_edge << '\n';
    }
    if (rep.strong_violation_w) {
      out << "strong violation: w = " << vector_to_string(*rep.strong_violation_w)
          << ", edge = " << *rep.strong_violation_edge << '\n';
    }
    payload = out.str();
  }
  emit(payload, out_path);

  for (const std::string& expect : expects) {
    const std::size_t eq = expect.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::SyntaxError, "--expect needs flag=bool, got '" + expect + "'");
    }
    const std::string name = expect.substr(0, eq);
    const std::string value = expect.substr(eq + 1);
    bool want;
    if (value == "true" || value == "1") want = true;
    else if (value == "false" || value == "0") want = false;
    else throw Error(ErrorCode::SyntaxError, "--expect value must be boolean, got '" + value + "'");
    bool got;
    if (!report_flag(rep, name, got)) {
      throw Error(ErrorCode::SyntaxError, "unknown classification flag '" + name + "'");
    }
    if (got != want) {
      std::cerr << "expect failed: " << name << " = " << (got ? "true" : "false") << '\n';
      return 1;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// compare

int cmd_compare(const std::string& file_a, const std::string& file_b, bool includes,
                bool as_json, const std::string& out_path) {
  Input ia = load_input(file_a);
  Input ib = load_input(file_b);
  const std::vector<std::string> species = union_species(ia.doc, ib.doc);
  NetworkDocument da = ia.doc;
  NetworkDocument db = ib.doc;
  da.species_order = species;
  db.species_order = species;
  EGraph ga = to_egraph(da).first;
  EGraph gb = to_egraph(db).first;

  bool holds;
  json result;
  std::ostringstream text;
  if (includes) {
    InclusionReport rep = dynamics_included(ga, gb);
    holds = rep.holds;
    result["mode"] = "includes";
    result["holds"] = rep.holds;
    if (rep.failing_source) {
      result["failing_source"] = vec_json(*rep.failing_source);
      result["failing_reason"] = *rep.failing_reason == InclusionFailure::SourceNotCovered
                                     ? "source-not-covered"
                                     : "relint-not-contained";
    }
    json per = json::array();
    for (const SourceInclusion& si : rep.per_source) {
      per.push_back({{"source", vec_json(si.source)},
                     {"member", si.containment.member},
                     {"witness", witness_json(si.containment.witness)}});
    }
    result["per_source"] = per;
    text << "includes: " << (holds ? "true" : "false") << '\n';
    if (rep.failing_source) {
      text << "failing source: " << vector_to_string(*rep.failing_source) << " ("
           << std::string(result["failing_reason"]) << ")\n";
    }
  } else {
    CapacityReport rep = capacity_for_equivalence(ga, gb);
    holds = rep.capacity;
    result["mode"] = "capacity";
    result["capacity"] = rep.capacity;
    if (rep.shared_field) result["shared_field"] = field_json(*rep.shared_field);
    if (rep.failing_source) {
      result["failing_source"] = vec_json(*rep.failing_source);
      result["separating_w"] = vec_json(rep.separating_w);
    }
    text << "capacity: " << (holds ? "true" : "false") << '\n';
    if (rep.failing_source) {
      text << "failing source: " << vector_to_string(*rep.failing_source)
           << ", separating w: " << vector_to_string(rep.separating_w) << '\n';
    }
  }

  if (as_json) {
    json r = report_shell("compare", {&ia, &ib});
    r["result"] = result;
    emit(r.dump(2), out_path);
  } else {
    emit(text.str(), out_path);
  }
  return holds ? 0 : 1;
}

// ---------------------------------------------------------------------------
// realize

const char* kind_name(RealizationResult::Kind kind) {
  switch (kind) {
    case RealizationResult::Kind::SourceOnly: return "source-only";
    case RealizationResult::Kind::ZeroSourceElimination: return "zero-source-elimination";
    case RealizationResult::Kind::ExtremallyWeaklyReversible2D: return "ewr-2d";
  }
  return "?";
}

int cmd_realize(const std::string& file, const std::string& which,
                const std::string& rates_flag, bool as_json, const std::string& out_path) {
  Input input = load_input(file);
  auto [graph, file_rates] = to_egraph(input.doc);

  RealizationResult res;
  json post;
  if (which == "source-only") {
    res = make_source_only(graph);
    post["source_only"] = is_source_only(res.graph);
    post["dynamics_included"] = dynamics_included(graph, res.graph).holds;
  } else if (which == "wr-eliminate") {
    RateAssignment rates;
    if (!rates_flag.empty()) {
      rates = parse_rates_flag(rates_flag, graph.edges().size());
    } else if (file_rates) {
      rates = *file_rates;
    } else {
      throw Error(ErrorCode::MissingRate, "wr-eliminate needs rates (file or --rates)");
    }
    res = eliminate_zero_sources(graph, rates);
    post["weakly_reversible"] = is_weakly_reversible(res.graph);
    post["fields_equal"] =
        fields_equal(generate_field(res.graph, *res.rate_map), generate_field(graph, rates));
    VectorField f = generate_field(graph, rates);
    bool sources_match = f.terms.size() == res.graph.source_node_ids().size();
    for (std::size_t id : res.graph.source_node_ids()) {
      sources_match = sources_match && f.terms.count(res.graph.node(id)) > 0;
    }
    post["sources_match_exponents"] = sources_match;
  } else {  // ewr2d
    res = ewr_realize_2d(graph);
    post["weakly_reversible"] = is_weakly_reversible(res.graph);
    post["strongly_endotactic"] = is_strongly_endotactic(res.graph).holds;
    post["dynamics_included"] = dynamics_included(graph, res.graph).holds;
  }
  recheck_provenance(graph, res);

  std::vector<std::string> species = input.doc.species_order;
  const std::string network =
      serialize(document_from_graph(res.graph, species, res.rate_map));

  json prov = json::array();
  for (const ProvenanceRecord& p : res.provenance) {
    prov.push_back({{"input_edges", p.input_edges},
                    {"output_edges", p.output_edges},
                    {"lambdas", vec_json(p.lambdas)}});
  }

  if (as_json) {
    json r = report_shell("realize", {&input});
    r["result"] = {{"kind", kind_name(res.kind)},
                   {"postconditions", post},
                   {"provenance", prov},
                   {"network", network}};
    if (res.rate_map) {
      json rates = json::array();
      for (const Rational& k : *res.rate_map) rates.push_back(rat(k));
      r["result"]["rates"] = rates;
    }
    if (!out_path.empty()) {
      emit(network, out_path);
      r["result"]["output_file"] = out_path;
    }
    std::cout << r.dump(2) << '\n';
  } else {
    std::ostringstream text;
    text << "kind: " << kind_name(res.kind) << '\n';
    for (const auto& [name, value] : post.items()) {
      text << "postcondition " << name << ": " << (value.get<bool>() ? "true" : "false")
           << '\n';
    }
    text << "provenance records: " << res.provenance.size() << '\n';
    if (!out_path.empty()) {
      emit(network, out_path);
      text << "wrote: " << out_path << '\n';
      std::cout << text.str();
    } else {
      std::cout << text.str() << network;
    }
  }

  for (const auto& [name, value] : post.items()) {
    (void)name;
    if (!value.get<bool>()) return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// odes

bool exponent_before(const RationalVector& a, const RationalVector& b) {
  Rational da = 0, db = 0;
  for (const Rational& c : a) da += c;
  for (const Rational& c : b) db += c;
  if (da != db) return da < db;
  return a > b;  // within a degree, higher lex first: x1 terms before x2 terms
}

std::string monomial_string(const RationalVector& expo,
                            const std::vector<std::string>& species, bool latex) {
  std::string out;
  for (std::size_t j = 0; j < expo.size(); ++j) {
    if (expo[j] == 0) continue;
    if (!out.empty()) out += latex ? " " : "*";
    out += species[j];
    if (expo[j] != 1) {
      const std::string e = rat(expo[j]);
      if (latex) {
        out += "^{" + e + "}";
      } else {
        out += e.find('/') == std::string::npos ? "^" + e : "^(" + e + ")";
      }
    }
  }
  return out;
}

std::string polynomial_string(const std::vector<std::pair<RationalVector, Rational>>& terms,
                              const std::vector<std::string>& species, bool latex) {
  std::string out;
  for (const auto& [expo, coeff] : terms) {
    if (coeff == 0) continue;
    const bool negative = coeff < 0;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    const std::string mono = monomial_string(expo, species, latex);
    std::string piece;
    if (mono.empty()) {
      piece = rat(mag);
    } else if (mag == 1) {
      piece = mono;
    } else {
      piece = rat(mag) + (latex ? " " : "*") + mono;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + piece;
    } else {
      out += (negative ? " - " : " + ") + piece;
    }
  }
  return out.empty() ? "0" : out;
}

int cmd_odes(const std::string& file, const std::string& rates_flag, const std::string& format,
             bool as_json, const std::string& out_path) {
  Input input = load_input(file);
  auto [graph, file_rates] = to_egraph(input.doc);
  RateAssignment rates;
  if (!rates_flag.empty()) {
    rates = parse_rates_flag(rates_flag, graph.edges().size());
  } else if (file_rates) {
    rates = *file_rates;
  } else {
    throw Error(ErrorCode::MissingRate, "odes needs rates (file or --rates)");
  }
  const bool latex = format == "latex";
  VectorField f = generate_field(graph, rates);

  std::vector<std::pair<RationalVector, Rational>> comp;
  const std::vector<std::string>& species = input.doc.species_order;
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < species.size(); ++i) {
    comp.clear();
    for (const auto& [expo, coeffs] : f.terms) comp.emplace_back(expo, coeffs[i]);
    std::sort(comp.begin(), comp.end(),
              [](const auto& a, const auto& b) { return exponent_before(a.first, b.first); });
    const std::string poly = polynomial_string(comp, species, latex);
    if (latex) {
      lines.push_back("\\dot{" + species[i] + "} = " + poly);
    } else {
      lines.push_back("d" + species[i] + "/dt = " + poly);
    }
  }
  std::string text;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) text += latex ? " \\\\\n" : " ; ";
    text += lines[i];
  }

  if (as_json) {
    json r = report_shell("odes", {&input});
    r["result"] = {{"format", latex ? "latex" : "text"}, {"odes", text}};
    emit(r.dump(2), out_path);
  } else {
    emit(text + "\n", out_path);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// random

int cmd_random(std::size_t dim, std::size_t sources, std::size_t edges, std::uint64_t seed,
               const std::vector<std::string>& require, bool as_json,
               const std::string& out_path) {
  if (dim < 1 || dim > 3) {
    throw Error(ErrorCode::SyntaxError, "--dim must be 1, 2, or 3");
  }
  std::vector<NetRequirement> reqs;
  for (const std::string& name : require) {
    auto r = requirement_from_name(name);
    if (!r) throw Error(ErrorCode::SyntaxError, "unknown --require flag '" + name + "'");
    reqs.push_back(*r);
  }
  RandomNetOptions opt;
  opt.dim = dim;
  opt.num_nodes = sources;
  opt.num_edges = edges == 0 ? sources + 1 : edges;
  std::mt19937_64 rng(seed);
  EGraph g = reqs.empty() ? random_network(opt, rng)
                          : random_network_satisfying(opt, reqs, rng);
  RateAssignment rates = random_rates(g, rng);
  const std::string network = serialize(document_from_graph(g, default_species(dim), rates));

  if (as_json) {
    json r = report_shell("random", {});
    json names = json::array();
    for (NetRequirement req : reqs) names.push_back(requirement_name(req));
    r["result"] = {{"seed", seed}, {"require", names}, {"network", network}};
    emit(r.dump(2), out_path);
  } else {
    emit(network, out_path);
  }
  return 0;
}

int exit_code_for(const Error& err) {
  switch (err.code()) {
    case ErrorCode::NotEndotactic:
    case ErrorCode::NotWeaklyReversible:
    case ErrorCode::WrongDimension:
    case ErrorCode::NotStronglyEndotactic:
    case ErrorCode::InteriorSourcePresent:
    case ErrorCode::NoPositiveSolution:
    case ErrorCode::ExponentNotASource:
    case ErrorCode::RejectionBudgetExceeded:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic toolkit for Euclidean embedded reaction networks"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, rates_flag, format = "text";
  bool as_json = false, mode_includes = false, mode_capacity = false;
  bool r_source_only = false, r_wr_eliminate = false, r_ewr2d = false;
  std::vector<std::string> expects, require;
  std::size_t dim = 2, sources = 4, edges = 0;
  std::uint64_t seed = 0;

  CLI::App* classify = app.add_subcommand("classify", "classification flags and witnesses");
  classify->add_option("file", file)->required();
  classify->add_flag("--json", as_json);
  classify->add_option("--out", out_path);
  classify->add_option("--expect", expects, "flag=bool; exit 1 on mismatch");

  CLI::App* compare = app.add_subcommand("compare", "dynamics inclusion or capacity");
  compare->add_option("fileA", file)->required();
  compare->add_option("fileB", file_b)->required();
  compare->add_flag("--includes", mode_includes, "decide fileA included in fileB");
  compare->add_flag("--capacity", mode_capacity, "decide capacity for dynamical equivalence");
  compare->add_flag("--json", as_json);
  compare->add_option("--out", out_path);

  CLI::App* realize = app.add_subcommand("realize", "constructive realizations");
  realize->add_option("file", file)->required();
  realize->add_flag("--source-only", r_source_only);
  realize->add_flag("--wr-eliminate", r_wr_eliminate);
  realize->add_flag("--ewr2d", r_ewr2d);
  realize->add_option("--rates", rates_flag, "comma list, optionally name=value");
  realize->add_flag("--json", as_json);
  realize->add_option("--out", out_path, "write the realized network here");

  CLI::App* odes = app.add_subcommand("odes", "emit the generated vector field");
  odes->add_option("file", file)->required();
  odes->add_option("--rates", rates_flag);
  odes->add_option("--format", format)->check(CLI::IsMember({"text", "latex"}));
  odes->add_flag("--json", as_json);
  odes->add_option("--out", out_path);

  CLI::App* random = app.add_subcommand("random", "seeded fixture generator");
  random->add_option("--dim", dim)->required();
  random->add_option("--sources", sources);
  random->add_option("--edges", edges);
  random->add_option("--seed", seed)->required();
  random->add_option("--require", require, "constraint flags (repeatable)");
  random->add_flag("--json", as_json);
  random->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(file, as_json, out_path, expects);
    if (compare->parsed()) {
      if (mode_includes == mode_capacity) {
        throw Error(ErrorCode::SyntaxError, "pick exactly one of --includes / --capacity");
      }
      return cmd_compare(file, file_b, mode_includes, as_json, out_path);
    }
    if (realize->parsed()) {
      const int picked = int(r_source_only) + int(r_wr_eliminate) + int(r_ewr2d);
      if (picked != 1) {
        throw Error(ErrorCode::SyntaxError,
                    "pick exactly one of --source-only / --wr-eliminate / --ewr2d");
      }
      const std::string which =
          r_source_only ? "source-only" : (r_wr_eliminate ? "wr-eliminate" : "ewr2d");
      return cmd_realize(file, which, rates_flag, as_json, out_path);
    }
    if (odes->parsed()) return cmd_odes(file, rates_flag, format, as_json, out_path);
    if (random->parsed())
      return cmd_random(dim, sources, edges, seed, require, as_json, out_path);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return exit_code_for(err);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
