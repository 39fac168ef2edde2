#pragma once

// Bad-prime phenomena: the cokernel of X(T) -> Hom(Z coroots, Z), the mod-p
// degeneracy of the H_alpha for the regular nilpotent, the C(gamma) pair
// tables, and destabilizing certificates for non-minimal cocharacters.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chevalley/chevalley_lie.hpp"
#include "chevalley/fields.hpp"
#include "chevalley/grading.hpp"
#include "chevalley/linalg.hpp"
#include "chevalley/optimality.hpp"

namespace chevalley {

// Matrix of <chi_i, coroot(alpha_j)> for chi_i the basis dual to the
// cocharacter lattice basis: entry (j, i) is coordinate i of coroot(alpha_j).
inline Matrix<mpz_class> eta_matrix(const RootSystem& rs) {
  const auto r = static_cast<std::size_t>(rs.rank());
  Matrix<mpz_class> m(r, r, 0);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) m(j, i) = rs.coroot(j)[i];
  return m;
}

// Elementary divisors of eta; coker(eta) is the product of Z/d.
inline std::vector<mpz_class> coker_eta(const RootSystem& rs) { return smith_divisors(eta_matrix(rs)); }

struct RegularCounterexample {
  std::int64_t p = 0;
  LieElement<PrimeField> x;
  LieElement<PrimeField> y;
  CocharRational lambda;
  int k = 0;
  std::vector<PrimeField::value_type> cartan_of_bracket;  // Cartan component of [X, Y]; all zero
  int degree_of_x = 0;                                    // = -k
};

// Y = sum of E_alpha over simple roots, lambda its optimal cocharacter.  When
// the H_alpha (alpha simple) are linearly dependent over F_p, returns a nonzero
// X = sum c_alpha E_-alpha with [X, Y] having zero Cartan component.
inline std::optional<RegularCounterexample> regular_counterexample(const StructureConstants& sc, std::int64_t p) {
  const RootSystem& rs = sc.root_system();
  const PrimeField fp(p);
  const auto r = static_cast<std::size_t>(rs.rank());
  // columns: coroots of simple roots in the Cartan basis
  auto m = zero_matrix(fp, r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t j = 0; j < r; ++j) m(j, a) = fp.from_int(rs.coroot(a)[j]);
  const auto kernel = kernel_basis(fp, m);
  if (kernel.empty()) return std::nullopt;
  auto c = kernel.front();
  // scale so the first nonzero coefficient is 1
  for (const auto& v : c)
    if (v != 0) {
      const auto s = fp.inv(v);
      for (auto& w : c) w = fp.mul(w, s);
      break;
    }

  std::vector<std::size_t> simple;
  for (std::size_t a = 0; a < r; ++a) simple.push_back(a);
  const auto cert = optimal_cocharacter(rs, simple);

  RegularCounterexample out{p, LieElement<PrimeField>(fp), LieElement<PrimeField>(fp), cert.lambda, cert.k, {}, 0};
  for (std::size_t a = 0; a < r; ++a) {
    out.y.add_term(a, fp.one());
    out.x.add_term(rs.negative_of(a), c[a]);
  }
  out.cartan_of_bracket = cartan_component(sc, bracket(sc, out.x, out.y));
  out.degree_of_x = static_cast<int>(rs.pairing(out.x.terms().begin()->first, cert.lambda.integer_coords()));
  return out;
}

struct CGammaTable {
  std::vector<std::size_t> support_x, support_y;
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> gamma_map;  // only nonempty C(gamma)
};

inline CGammaTable c_gamma(const StructureConstants& sc, const std::vector<std::size_t>& support_x,
                           const std::vector<std::size_t>& support_y) {
  CGammaTable t{support_x, support_y, {}};
  for (auto a : support_x)
    for (auto b : support_y)
      if (auto g = sc.root_sum(a, b)) t.gamma_map[*g].emplace_back(a, b);
  return t;
}

struct DestabilizingCertificate {
  std::int64_t a = 0;
  CocharRational mu;  // lambda_tilde + eta / a
};

// Smallest a >= 1 with mu = lambda_tilde + eta/a satisfying <beta, mu> >= 1 on
// the support and (mu, mu) < (lambda_tilde, lambda_tilde).  Requires
// <beta, eta> >= 0 on the support and (lambda_tilde, eta) < 0.
inline DestabilizingCertificate destabilizing_certificate(const RootSystem& rs, const std::vector<std::size_t>& support,
                                                          const CocharRational& lambda_tilde, const RatVec& eta) {
  if (support.empty()) throw std::invalid_argument("destabilizing_certificate: empty support");
  for (auto b : support)
    if (rs.pairing(b, eta) < 0)
      throw std::invalid_argument("destabilizing_certificate: eta pairs negatively with the support");
  const mpq_class cross = rs.cochar_form(lambda_tilde.coords, eta);
  if (cross >= 0) throw std::invalid_argument("destabilizing_certificate: (lambda, eta) is not negative");
  const mpq_class eta_sq = rs.cochar_form(eta, eta);
  // (mu,mu) < (l,l)  <=>  a > -(eta,eta) / (2 (l,eta))
  const mpq_class bound = -eta_sq / (2 * cross);
  mpz_class a_min;
  mpz_fdiv_q(a_min.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  a_min += 1;
  if (a_min < 1) a_min = 1;
  std::optional<mpq_class> a_max;
  for (auto b : support) {
    const mpq_class base = rs.pairing(b, lambda_tilde.coords);
    if (base >= 1) continue;
    const mpq_class up = rs.pairing(b, eta);
    if (up == 0) throw std::invalid_argument("destabilizing_certificate: support constraint cannot be met");
    const mpq_class limit = up / (1 - base);
    if (!a_max || limit < *a_max) a_max = limit;
  }
  if (a_max && mpq_class(a_min) > *a_max)
    throw std::invalid_argument("destabilizing_certificate: no admissible a");
  DestabilizingCertificate out;
  out.a = a_min.get_si();
  RatVec mu = lambda_tilde.coords;
  for (std::size_t j = 0; j < mu.size(); ++j) mu[j] += eta[j] / mpq_class(a_min);
  out.mu = CocharRational::make(rs, mu);
  for (auto b : support)
    if (rs.pairing(b, out.mu.coords) < 1) throw std::logic_error("destabilizing_certificate: infeasible result");
  if (!(out.mu.norm_sq < lambda_tilde.norm_sq)) throw std::logic_error("destabilizing_certificate: norm did not drop");
  return out;
}

// Root form: eta is the coroot of `alpha`, the cocharacter identified with alpha
// up to a positive scalar.
inline DestabilizingCertificate destabilizing_certificate(const RootSystem& rs, const std::vector<std::size_t>& support,
                                                          const CocharRational& lambda_tilde, std::size_t alpha) {
  const IntVec& c = rs.coroot(alpha);
  return destabilizing_certificate(rs, support, lambda_tilde, RatVec(c.begin(), c.end()));
}

}  // namespace chevalley
