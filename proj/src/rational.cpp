// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crnet/rational.hpp"

#include <cctype>
#include <sstream>

#include "crnet/errors.hpp"

namespace crnet {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw Error(ErrorCode::SyntaxError, "empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
      throw Error(ErrorCode::SyntaxError, "malformed rational literal '" + text + "'");
    }
    Integer d(den);
    if (d == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) whole = whole.substr(1);
    if (whole.empty() && frac.empty()) {
      throw Error(ErrorCode::SyntaxError, "malformed rational literal '" + text + "'");
    }
    if (!whole.empty() && !is_integer_token(whole)) {
      throw Error(ErrorCode::SyntaxError, "malformed rational literal '" + text + "'");
    }
    if (!frac.empty() && !is_integer_token(frac)) {
      throw Error(ErrorCode::SyntaxError, "malformed rational literal '" + text + "'");
    }
    Integer num = whole.empty() ? Integer(0) : Integer(whole);
    Integer den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rational r(num, den);
    return negative ? Rational(-r) : r;
  }

  if (!is_integer_token(s)) {
    throw Error(ErrorCode::SyntaxError, "malformed rational literal '" + text + "'");
  }
  return Rational(Integer(s));
}

std::string rational_to_string(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::string vector_to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rational_to_string(v[i]);
  }
  out += ")";
  return out;
}

RationalVector vec_add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector vec_sub(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector vec_scale(const Rational& c, const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

RationalVector primitive_direction(const RationalVector& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (is_zero_vector(v)) return v;
  Integer lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, denominator(x));
  Integer gcd_num = 0;
  std::vector<Integer> scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    gcd_num = gcd(gcd_num, scaled[i]);
  }
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(scaled[i] / gcd_num);
  return out;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::SelfLoopEdge: return "SelfLoopEdge";
    case ErrorCode::IsolatedNode: return "IsolatedNode";
    case ErrorCode::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MergeableParallelEdges: return "MergeableParallelEdges";
    case ErrorCode::RateLengthMismatch: return "RateLengthMismatch";
    case ErrorCode::NonIntegerExponentAtEvaluation: return "NonIntegerExponentAtEvaluation";
    case ErrorCode::PointNotInSet: return "PointNotInSet";
    case ErrorCode::SplitConeViolation: return "SplitConeViolation";
    case ErrorCode::EmptyExtremalSet: return "EmptyExtremalSet";
    case ErrorCode::NotEndotactic: return "NotEndotactic";
    case ErrorCode::ReplacementInfeasible: return "ReplacementInfeasible";
    case ErrorCode::NotWeaklyReversible: return "NotWeaklyReversible";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NotStronglyEndotactic: return "NotStronglyEndotactic";
    case ErrorCode::InteriorSourcePresent: return "InteriorSourcePresent";
    case ErrorCode::PostconditionFailed: return "PostconditionFailed";
    case ErrorCode::ExponentNotASource: return "ExponentNotASource";
    case ErrorCode::NoPositiveSolution: return "NoPositiveSolution";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::MissingRate: return "MissingRate";
    case ErrorCode::DuplicateSpeciesDeclaration: return "DuplicateSpeciesDeclaration";
    case ErrorCode::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorCode::InternalInvariantBroken: return "InternalInvariantBroken";
  }
  return "UnknownError";
}

}  // namespace crnet
