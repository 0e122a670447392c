// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crnet/parser.hpp"

#include <cctype>
#include <cstddef>
#include <sstream>

#include "crnet/errors.hpp"

namespace crnet {
namespace {

enum class TokenKind { Name, Number, Plus, Comma, Equals, Colon, Arrow, BothArrow };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;  // 1-based
};

[[noreturn]] void syntax_error(std::size_t line, std::size_t column,
                               const std::string& expected) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": expected " << expected;
  throw Error(ErrorCode::SyntaxError, os.str());
}

std::vector<Token> tokenize_line(const std::string& text, std::size_t line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t column = i + 1;
    if (c == '#') break;
    if (c == '+') {
      tokens.push_back({TokenKind::Plus, "+", column});
      ++i;
    } else if (c == ',') {
      tokens.push_back({TokenKind::Comma, ",", column});
      ++i;
    } else if (c == '=') {
      tokens.push_back({TokenKind::Equals, "=", column});
      ++i;
    } else if (c == ':') {
      tokens.push_back({TokenKind::Colon, ":", column});
      ++i;
    } else if (c == '<') {
      if (text.compare(i, 3, "<->") != 0) {
        syntax_error(line, column, "'<->'");
      }
      tokens.push_back({TokenKind::BothArrow, "<->", column});
      i += 3;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tokens.push_back({TokenKind::Arrow, "->", column});
      i += 2;
    } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      if (text[j] == '-') ++j;
      const std::size_t digits_start = j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == digits_start) syntax_error(line, column, "digits");
      if (j < text.size() && text[j] == '/') {
        ++j;
        const std::size_t den_start = j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == den_start) syntax_error(line, j, "denominator digits");
      }
      tokens.push_back({TokenKind::Number, text.substr(i, j - i), column});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      tokens.push_back({TokenKind::Name, text.substr(i, j - i), column});
      i = j;
    } else {
      syntax_error(line, column, "a term, arrow, or rate clause");
    }
  }
  return tokens;
}

struct LineParser {
  const std::vector<Token>& tokens;
  std::size_t line;
  std::size_t pos = 0;

  bool done() const { return pos == tokens.size(); }
  const Token& peek() const { return tokens[pos]; }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (done()) {
      syntax_error(line, tokens.empty() ? 1 : tokens.back().column + 1, what);
    }
    if (tokens[pos].kind != kind) syntax_error(line, tokens[pos].column, what);
    return tokens[pos++];
  }

  Rational rational(const std::string& what) {
    const Token& t = expect(TokenKind::Number, what);
    return parse_rational(t.text);
  }

  // complex := '0' | term ('+' term)*, term := [rational] name
  std::map<std::string, Rational> complex(std::vector<std::string>* order,
                                          std::map<std::string, bool>* known) {
    std::map<std::string, Rational> out;
    const bool bare_zero = !done() && peek().kind == TokenKind::Number &&
                           parse_rational(peek().text) == 0 &&
                           (pos + 1 == tokens.size() ||
                            tokens[pos + 1].kind != TokenKind::Name);
    if (bare_zero) {
      ++pos;
      return out;
    }
    for (;;) {
      Rational coeff = 1;
      std::size_t coeff_column = done() ? 0 : peek().column;
      if (!done() && peek().kind == TokenKind::Number) {
        coeff = rational("coefficient");
      }
      const Token& name = expect(TokenKind::Name, "species name");
      if (coeff < 0) {
        throw Error(ErrorCode::NegativeCoefficient,
                    "line " + std::to_string(line) + ", column " +
                        std::to_string(coeff_column) +
                        ": coefficient of " + name.text + " is negative");
      }
      if (!known->count(name.text)) {
        (*known)[name.text] = true;
        order->push_back(name.text);
      }
      if (coeff != 0) out[name.text] += coeff;
      if (done() || peek().kind != TokenKind::Plus) break;
      ++pos;
    }
    return out;
  }
};

std::string complex_to_string(const std::map<std::string, Rational>& complex,
                              const std::vector<std::string>& order) {
  if (complex.empty()) return "0";
  std::string out;
  for (const std::string& name : order) {
    const auto it = complex.find(name);
    if (it == complex.end()) continue;
    if (!out.empty()) out += " + ";
    if (it->second != 1) {
      out += rational_to_string(it->second);
      out += ' ';
    }
    out += name;
  }
  return out;
}

}  // namespace

NetworkDocument parse(const std::string& text) {
  NetworkDocument doc;
  std::map<std::string, bool> known;

  std::istringstream stream(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const std::vector<Token> tokens = tokenize_line(raw, line_no);
    if (tokens.empty()) continue;
    LineParser p{tokens, line_no};

    if (tokens[0].kind == TokenKind::Name && tokens[0].text == "species" &&
        tokens.size() > 1 && tokens[1].kind == TokenKind::Colon) {
      p.pos = 2;
      if (p.done()) syntax_error(line_no, tokens[1].column + 1, "species name");
      while (!p.done()) {
        const Token& name = p.expect(TokenKind::Name, "species name");
        if (known.count(name.text)) {
          throw Error(ErrorCode::DuplicateSpeciesDeclaration,
                      "line " + std::to_string(line_no) + ": species " +
                          name.text + " declared twice");
        }
        known[name.text] = true;
        doc.species_order.push_back(name.text);
      }
      continue;
    }

    ReactionLine reaction;
    reaction.line = line_no;
    reaction.lhs = p.complex(&doc.species_order, &known);
    if (p.done()) syntax_error(line_no, raw.size() + 1, "'->' or '<->'");
    if (p.peek().kind == TokenKind::Arrow) {
      reaction.reversible = false;
    } else if (p.peek().kind == TokenKind::BothArrow) {
      reaction.reversible = true;
    } else {
      syntax_error(line_no, p.peek().column, "'->' or '<->'");
    }
    ++p.pos;
    reaction.rhs = p.complex(&doc.species_order, &known);

    if (!p.done()) {
      p.expect(TokenKind::Comma, "',' before rate clause");
      const Token& k = p.expect(TokenKind::Name, "'k'");
      if (k.text != "k") syntax_error(line_no, k.column, "'k'");
      p.expect(TokenKind::Equals, "'='");
      reaction.rate_forward = p.rational("rate value");
      if (reaction.reversible) {
        p.expect(TokenKind::Comma, "',' before backward rate");
        reaction.rate_backward = p.rational("backward rate value");
      }
      if (!p.done()) syntax_error(line_no, p.peek().column, "end of line");
    }
    doc.reactions.push_back(std::move(reaction));
  }
  return doc;
}

std::string serialize(const NetworkDocument& doc) {
  std::string out;
  if (!doc.species_order.empty()) {
    out += "species:";
    for (const std::string& name : doc.species_order) {
      out += ' ';
      out += name;
    }
    out += '\n';
  }
  for (const ReactionLine& r : doc.reactions) {
    out += complex_to_string(r.lhs, doc.species_order);
    out += r.reversible ? " <-> " : " -> ";
    out += complex_to_string(r.rhs, doc.species_order);
    if (r.rate_forward.has_value()) {
      out += " , k = ";
      out += rational_to_string(*r.rate_forward);
      if (r.rate_backward.has_value()) {
        out += ", ";
        out += rational_to_string(*r.rate_backward);
      }
    }
    out += '\n';
  }
  return out;
}

std::pair<EGraph, std::optional<RateAssignment>> to_egraph(
    const NetworkDocument& doc) {
  const std::size_t dim = doc.species_order.size();
  std::map<std::string, std::size_t> axis;
  for (std::size_t i = 0; i < dim; ++i) axis[doc.species_order[i]] = i;

  auto to_coords = [&](const std::map<std::string, Rational>& complex) {
    RationalVector v(dim, 0);
    for (const auto& [name, coeff] : complex) v[axis.at(name)] = coeff;
    return v;
  };

  std::vector<RationalVector> nodes;
  std::map<RationalVector, std::size_t> node_id;
  auto intern = [&](const RationalVector& coords) {
    auto it = node_id.find(coords);
    if (it != node_id.end()) return it->second;
    node_id.emplace(coords, nodes.size());
    nodes.push_back(coords);
    return nodes.size() - 1;
  };

  std::vector<Edge> edges;
  std::vector<std::optional<Rational>> rates;
  for (const ReactionLine& r : doc.reactions) {
    const std::size_t lhs = intern(to_coords(r.lhs));
    const std::size_t rhs = intern(to_coords(r.rhs));
    edges.push_back({lhs, rhs});
    rates.push_back(r.rate_forward);
    if (r.reversible) {
      edges.push_back({rhs, lhs});
      rates.push_back(r.rate_backward);
    }
  }

  EGraph graph = validate(nodes, edges, dim);
  std::size_t with_rate = 0;
  for (const auto& r : rates) {
    if (r.has_value()) ++with_rate;
  }
  if (with_rate == 0) return {std::move(graph), std::nullopt};
  if (with_rate != rates.size()) {
    throw Error(ErrorCode::MissingRate,
                "some reactions carry rates and others do not");
  }
  RateAssignment assignment;
  assignment.reserve(rates.size());
  for (const auto& r : rates) assignment.push_back(*r);
  return {std::move(graph), std::move(assignment)};
}

}  // namespace crnet
