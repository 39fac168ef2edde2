#pragma once

// Gradings of the Lie algebra by a cocharacter, the invariants m_Y and rho_Y,
// and modulus characters evaluated on torus valuation data.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chevalley/chevalley_lie.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

// Rational cocharacter in lattice coordinates, with its squared norm.
struct CocharRational {
  RatVec coords;
  mpq_class norm_sq;

  static CocharRational make(const RootSystem& rs, RatVec coords) {
    if (coords.size() != static_cast<std::size_t>(rs.rank()))
      throw std::invalid_argument("cocharacter has wrong dimension");
    for (auto& c : coords) c.canonicalize();
    CocharRational out{std::move(coords), 0};
    out.norm_sq = rs.cochar_form(out.coords, out.coords);
    return out;
  }
  static CocharRational make(const RootSystem& rs, const IntVec& coords) {
    return make(rs, RatVec(coords.begin(), coords.end()));
  }

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }
  bool is_integral() const {
    for (const auto& c : coords)
      if (c.get_den() != 1) return false;
    return true;
  }
  bool is_primitive() const {
    if (!is_integral() || is_zero()) return false;
    mpz_class g = 0;
    for (const auto& c : coords) g = gcd(g, c.get_num());
    return g == 1;
  }
  IntVec integer_coords() const {
    if (!is_integral()) throw std::domain_error("cocharacter is not integral");
    IntVec out;
    for (const auto& c : coords) out.push_back(static_cast<int>(c.get_num().get_si()));
    return out;
  }
  bool operator==(const CocharRational& o) const { return coords == o.coords; }
};

struct GradingReport {
  std::map<int, std::vector<std::size_t>> weight_spaces;  // degree -> roots
  std::map<int, std::size_t> dims;                         // degree -> dimension, Cartan in degree 0
  int rank = 0;

  std::size_t dim(int degree) const {
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
  }
  const std::vector<std::size_t>& roots_in(int degree) const {
    static const std::vector<std::size_t> none;
    auto it = weight_spaces.find(degree);
    return it == weight_spaces.end() ? none : it->second;
  }
};

inline GradingReport grade(const RootSystem& rs, const CocharRational& lambda) {
  if (!lambda.is_integral()) throw std::invalid_argument("grade: cocharacter is not integral");
  const IntVec l = lambda.integer_coords();
  GradingReport g;
  g.rank = rs.rank();
  g.dims[0] = static_cast<std::size_t>(rs.rank());
  for (std::size_t a = 0; a < rs.num_roots(); ++a) {
    const int d = static_cast<int>(rs.pairing(a, l));
    g.weight_spaces[d].push_back(a);
    g.dims[d] += 1;
  }
  return g;
}

template <class F>
std::vector<std::size_t> root_support(const StructureConstants& sc, const LieElement<F>& y) {
  std::vector<std::size_t> out;
  const std::size_t n = sc.root_system().num_roots();
  for (const auto& [i, v] : y.terms()) {
    if (i >= n) throw std::invalid_argument("element has a Cartan component");
    out.push_back(i);
  }
  return out;
}

// min over the support of <alpha, mu>
inline mpq_class min_pairing(const RootSystem& rs, const std::vector<std::size_t>& support, const RatVec& mu) {
  if (support.empty()) throw std::invalid_argument("empty support");
  std::optional<mpq_class> best;
  for (auto a : support) {
    const mpq_class v = rs.pairing(a, mu);
    if (!best || v < *best) best = v;
  }
  return *best;
}

struct MResult {
  int k = 0;
  // rho_Y(lambda)^2 = k^2 / (lambda, lambda), kept exact.
  mpq_class k_sq;
  mpq_class norm_sq;
  mpq_class rho_sq() const { return k_sq / norm_sq; }
};

inline MResult m_of(const RootSystem& rs, const std::vector<std::size_t>& support, const CocharRational& lambda) {
  if (support.empty()) throw std::invalid_argument("m_of: Y = 0");
  if (!lambda.is_integral()) throw std::invalid_argument("m_of: cocharacter is not integral");
  const mpq_class k = min_pairing(rs, support, lambda.coords);
  if (k < 1) throw std::invalid_argument("m_of: Y is not in the unipotent radical of lambda");
  MResult out;
  out.k = static_cast<int>(k.get_num().get_si());
  out.k_sq = k * k;
  out.norm_sq = lambda.norm_sq;
  return out;
}

template <class F>
MResult m_of(const StructureConstants& sc, const LieElement<F>& y, const CocharRational& lambda) {
  if (y.is_zero()) throw std::invalid_argument("m_of: Y = 0");
  return m_of(sc.root_system(), root_support(sc, y), lambda);
}

// Exponent e with delta_{lambda,s}(t^v) = q^-e (or delta_{lambda,(s,t)} when
// `upper` is given): the sum of <alpha, v> over roots with s <= <alpha,lambda>
// (< upper).
inline std::int64_t delta_exponent(const RootSystem& rs, const CocharRational& lambda, int s, std::optional<int> upper,
                                   const IntVec& valuation) {
  if (s < 1) throw std::invalid_argument("delta_exponent: s must be >= 1");
  if (upper && *upper <= s) throw std::invalid_argument("delta_exponent: t must exceed s");
  if (!lambda.is_integral()) throw std::invalid_argument("delta_exponent: cocharacter is not integral");
  if (valuation.size() != static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument("delta_exponent: valuation covector has wrong dimension");
  const IntVec l = lambda.integer_coords();
  std::int64_t e = 0;
  for (std::size_t a = 0; a < rs.num_roots(); ++a) {
    const long d = rs.pairing(a, l);
    if (d < s || (upper && d >= *upper)) continue;
    e += rs.pairing(a, valuation);
  }
  return e;
}

}  // namespace chevalley
