#pragma once

// Text notation for roots and coefficients used by the CLI and corpus files.
//   root:    signed sums of simple roots, "a1", "a1+2*a2", "-a1-a2", "2a3"
//   support: comma separated roots, each with an optional "=value" suffix
//   value:   a rational ("3/2") for Q and F_p, a polynomial in t ("1+2*t^3")
//            for F_q(t), with coefficients written as field element codes

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chevalley/chevalley_lie.hpp"
#include "chevalley/fields.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

struct NotationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(strip(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::size_t parse_root(const RootSystem& rs, std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw NotationError("empty root expression");
  IntVec v(static_cast<std::size_t>(rs.rank()), 0);
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw NotationError("bad root expression '" + s + "'");
    }
    first = false;
    long mult = 1;
    std::size_t digits = pos;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
    if (digits > pos) {
      mult = std::stol(s.substr(pos, digits - pos));
      pos = digits;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos >= s.size() || (s[pos] != 'a' && s[pos] != 'A')) throw NotationError("bad root expression '" + s + "'");
    ++pos;
    digits = pos;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
    if (digits == pos) throw NotationError("bad root expression '" + s + "'");
    const long i = std::stol(s.substr(pos, digits - pos));
    if (i < 1 || i > rs.rank()) throw NotationError("simple root index out of range in '" + s + "'");
    v[static_cast<std::size_t>(i - 1)] += static_cast<int>(sign * mult);
    pos = digits;
  }
  auto idx = rs.index_of(v);
  if (!idx) throw NotationError("'" + s + "' is not a root of " + rs.type_name());
  return *idx;
}

// (root index, coefficient text) pairs; duplicate roots are rejected.
inline std::vector<std::pair<std::size_t, std::string>> parse_support(const RootSystem& rs, std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) throw NotationError("empty support entry");
    auto eq = item.find('=');
    const std::size_t root = parse_root(rs, item.substr(0, eq));
    const std::string coeff = eq == std::string::npos ? "1" : strip(item.substr(eq + 1));
    for (const auto& [r, c] : out)
      if (r == root) throw NotationError("root listed twice in support");
    out.emplace_back(root, coeff);
  }
  return out;
}

inline mpq_class parse_rational(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw NotationError("empty coefficient");
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  bool slash = false, digits = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = true;
    } else if (s[i] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw NotationError("bad rational '" + s + "'");
    }
  }
  if (!digits) throw NotationError("bad rational '" + s + "'");
  mpq_class q(s[0] == '+' ? s.substr(1) : s);
  if (q.get_den() == 0) throw NotationError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline mpq_class parse_coefficient(const RationalField&, std::string_view text) { return parse_rational(text); }

inline std::int64_t parse_coefficient(const PrimeField& f, std::string_view text) {
  const mpq_class q = parse_rational(text);
  const mpz_class p = f.characteristic();
  mpz_class num = q.get_num() % p, den = q.get_den() % p;
  if (den == 0) throw NotationError("coefficient denominator vanishes mod " + p.get_str());
  if (num < 0) num += p;
  return f.div(num.get_si(), den.get_si());
}

// Polynomial in t with coefficients given as element codes of F_q.
inline RationalFunction parse_coefficient(const RationalFunctionField& f, std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw NotationError("empty coefficient");
  const auto& ring = f.ring();
  const GaloisField& k = ring.base();
  PolynomialRing::Poly acc;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw NotationError("bad polynomial '" + s + "'");
    }
    first = false;
    int c = 1;
    std::size_t d = pos;
    while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
    const bool has_const = d > pos;
    if (has_const) {
      const long code = std::stol(s.substr(pos, d - pos));
      if (code >= k.order()) throw NotationError("field element code out of range in '" + s + "'");
      c = static_cast<int>(code);
      pos = d;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    int degree = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        d = pos;
        while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
        if (d == pos) throw NotationError("bad exponent in '" + s + "'");
        degree = std::stoi(s.substr(pos, d - pos));
        pos = d;
      }
    } else if (!has_const) {
      throw NotationError("bad polynomial '" + s + "'");
    }
    PolynomialRing::Poly term(static_cast<std::size_t>(degree) + 1, 0);
    term.back() = negative ? k.neg(c) : c;
    PolynomialRing::trim(term);
    acc = ring.add(acc, term);
  }
  return f.from_poly(acc);
}

template <class F>
LieElement<F> parse_element(const StructureConstants& sc, const F& field, std::string_view support) {
  LieElement<F> x(field);
  for (const auto& [root, coeff] : parse_support(sc.root_system(), support))
    x.add_term(root, parse_coefficient(field, coeff));
  return x;
}

inline IntVec parse_int_vector(std::string_view text, std::size_t expected) {
  IntVec out;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw NotationError("bad integer '" + item + "'");
    }
    if (used != item.size()) throw NotationError("bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.size() != expected)
    throw NotationError("expected " + std::to_string(expected) + " coordinates, got " + std::to_string(out.size()));
  return out;
}

inline RatVec parse_rat_vector(std::string_view text, std::size_t expected) {
  RatVec out;
  for (const auto& item : split(text, ',')) out.push_back(parse_rational(item));
  if (out.size() != expected)
    throw NotationError("expected " + std::to_string(expected) + " coordinates, got " + std::to_string(out.size()));
  return out;
}

}  // namespace chevalley
