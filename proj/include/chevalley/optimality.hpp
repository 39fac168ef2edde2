#pragma once

// Optimal virtual cocharacters of nilpotent elements within the fixed maximal
// torus.  The normalized optimum mu is the unique point of least norm in the
// polyhedron { mu : <alpha, mu> >= 1 for alpha in supp(Y) }; it is found
// exactly by enumerating active sets.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevalley/chevalley_lie.hpp"
#include "chevalley/fields.hpp"
#include "chevalley/grading.hpp"
#include "chevalley/linalg.hpp"
#include "chevalley/root_system.hpp"

namespace chevalley {

struct MinNormResult {
  RatVec point;                       // in the coordinates of the constraint vectors
  mpq_class norm_sq;
  std::vector<std::size_t> active;    // inequality indices held with equality in the chosen face
  RatVec multipliers;                 // KKT multipliers on `active` (all >= 0 at the optimum)
};

// Least-norm point of { x : (g_i, x) >= 1, (h_j, x) = 0 } for the inner product
// given by `gram`, or nullopt if the set is empty.  Every linearly independent
// subset S of inequalities (together with all equalities) yields the
// least-norm point of its affine face; the feasible candidate of least norm is
// the optimum.
inline std::optional<MinNormResult> min_norm_point(const Matrix<mpq_class>& gram, const std::vector<RatVec>& ineq,
                                                   const std::vector<RatVec>& eq = {}) {
  const RationalField q;
  const std::size_t dim = gram.rows();
  auto ip = [&](const RatVec& x, const RatVec& y) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) s += x[i] * gram(i, j) * y[j];
    }
    return s;
  };
  std::optional<MinNormResult> best;
  std::vector<std::size_t> chosen;

  auto evaluate = [&]() {
    std::vector<const RatVec*> vecs;
    for (auto i : chosen) vecs.push_back(&ineq[i]);
    for (const auto& h : eq) vecs.push_back(&h);
    const std::size_t m = vecs.size();
    if (m == 0) {
      // the origin
      RatVec zero(dim, 0);
      for (const auto& g : ineq)
        if (ip(g, zero) < 1) return;
      best = MinNormResult{zero, 0, {}, {}};
      return;
    }
    Matrix<mpq_class> system(m, m, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) system(a, b) = ip(*vecs[a], *vecs[b]);
    if (rank(q, system) < m) return;
    std::vector<mpq_class> rhs(m, 0);
    for (std::size_t a = 0; a < chosen.size(); ++a) rhs[a] = 1;
    auto coeffs = solve(q, system, rhs);
    if (!coeffs) return;
    RatVec x(dim, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t i = 0; i < dim; ++i) x[i] += (*coeffs)[a] * (*vecs[a])[i];
    for (const auto& g : ineq)
      if (ip(g, x) < 1) return;
    const mpq_class n = ip(x, x);
    if (best && n >= best->norm_sq) return;
    RatVec mult(coeffs->begin(), coeffs->begin() + static_cast<long>(chosen.size()));
    best = MinNormResult{x, n, chosen, mult};
  };

  const std::size_t max_size = dim > eq.size() ? dim - eq.size() : 0;
  std::function<void(std::size_t)> recurse = [&](std::size_t start) {
    evaluate();
    if (chosen.size() == max_size) return;
    for (std::size_t i = start; i < ineq.size(); ++i) {
      chosen.push_back(i);
      recurse(i + 1);
      chosen.pop_back();
    }
  };
  recurse(0);
  return best;
}

struct OptimalityCertificate {
  CocharRational mu;       // normalized minimizer, m_Y(mu) = 1
  CocharRational lambda;   // primitive integral multiple of mu
  int k = 0;               // m_Y(lambda)
  std::vector<std::size_t> support;
  std::vector<std::size_t> active;  // support roots with <alpha, mu> = 1
  RatVec multipliers;               // mu = sum multipliers_i * active_i (as vectors)
  bool brute_force_checked = false;
  int box_radius = 0;
};

inline std::vector<RatVec> root_vectors(const RootSystem& rs, const std::vector<std::size_t>& support) {
  std::vector<RatVec> out;
  for (auto a : support) out.emplace_back(rs.root(a).begin(), rs.root(a).end());
  return out;
}

// Primitive integral lambda on the ray of mu, and the factor k with lambda = k mu.
inline std::pair<CocharRational, mpq_class> primitive_on_ray(const RootSystem& rs, const RatVec& mu) {
  mpz_class lcm_den = 1;
  for (const auto& c : mu) lcm_den = lcm(lcm_den, c.get_den());
  IntVec ints;
  mpz_class g = 0;
  for (const auto& c : mu) {
    const mpz_class v = c.get_num() * (lcm_den / c.get_den());
    g = gcd(g, v);
  }
  if (g == 0) throw std::invalid_argument("primitive_on_ray: zero cocharacter");
  for (const auto& c : mu) {
    const mpz_class v = c.get_num() * (lcm_den / c.get_den()) / g;
    ints.push_back(static_cast<int>(v.get_si()));
  }
  return {CocharRational::make(rs, ints), mpq_class(lcm_den, g)};
}

inline OptimalityCertificate optimal_cocharacter(const RootSystem& rs, const std::vector<std::size_t>& support) {
  if (support.empty()) throw std::invalid_argument("optimal_cocharacter: empty support");
  auto result = min_norm_point(rs.gram(), root_vectors(rs, support));
  if (!result) throw std::invalid_argument("optimal_cocharacter: support is not contained in any unipotent radical");
  OptimalityCertificate cert;
  cert.support = support;
  cert.mu = CocharRational::make(rs, rs.cochar_from_vector(result->point));
  auto [lambda, factor] = primitive_on_ray(rs, cert.mu.coords);
  if (factor.get_den() != 1) throw std::logic_error("optimal_cocharacter: non-integral k");
  cert.lambda = lambda;
  cert.k = static_cast<int>(factor.get_num().get_si());
  for (auto a : support)
    if (rs.pairing(a, cert.mu.coords) == 1) cert.active.push_back(a);
  // multipliers indexed like cert.active
  for (auto a : cert.active) {
    mpq_class m = 0;
    for (std::size_t i = 0; i < result->active.size(); ++i)
      if (support[result->active[i]] == a) m = result->multipliers[i];
    cert.multipliers.push_back(m);
  }
  return cert;
}

template <class F>
OptimalityCertificate optimal_cocharacter(const StructureConstants& sc, const LieElement<F>& y) {
  if (y.is_zero()) throw std::invalid_argument("optimal_cocharacter: Y = 0");
  return optimal_cocharacter(sc.root_system(), root_support(sc, y));
}

struct BruteForceReport {
  int box_radius = 0;
  std::uint64_t candidates = 0;   // integral cocharacters in the box with supp(Y) in positive degrees
  std::vector<IntVec> violators;  // first few lambda' with rho' > rho
  std::uint64_t violator_count = 0;
  bool ok() const { return violator_count == 0; }
};

// Exhaustive check of rho_Y(lambda')^2 <= rho_Y(lambda)^2 over the box.
inline BruteForceReport brute_force_verify(const RootSystem& rs, const std::vector<std::size_t>& support,
                                           const OptimalityCertificate& cert, int box_radius) {
  const IntVec lam = cert.lambda.integer_coords();
  for (int c : lam)
    if (std::abs(c) > box_radius) throw std::invalid_argument("brute_force_verify: box does not contain lambda");
  const auto r = static_cast<std::size_t>(rs.rank());
  // rows a^T P for the support
  std::vector<std::vector<long>> rows;
  for (auto a : support) {
    std::vector<long> row(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
      IntVec e(r, 0);
      e[j] = 1;
      row[j] = rs.pairing(a, e);
    }
    rows.push_back(row);
  }
  const mpq_class best = mpq_class(cert.k * cert.k) / cert.lambda.norm_sq;
  BruteForceReport rep;
  rep.box_radius = box_radius;
  IntVec cur(r, -box_radius);
  RatVec curq(r);
  for (;;) {
    long m = 0;
    bool first = true, inside = true;
    for (const auto& row : rows) {
      long v = 0;
      for (std::size_t j = 0; j < r; ++j) v += row[j] * cur[j];
      if (v < 1) {
        inside = false;
        break;
      }
      if (first || v < m) m = v;
      first = false;
    }
    if (inside) {
      ++rep.candidates;
      for (std::size_t j = 0; j < r; ++j) curq[j] = cur[j];
      const mpq_class rho = mpq_class(m * m) / rs.cochar_form(curq, curq);
      if (rho > best) {
        ++rep.violator_count;
        if (rep.violators.size() < 8) rep.violators.push_back(cur);
      }
    }
    std::size_t j = 0;
    while (j < r && cur[j] == box_radius) cur[j++] = -box_radius;
    if (j == r) break;
    ++cur[j];
  }
  return rep;
}

// True iff no rational mu with (mu, lambda) = 0 has <alpha, mu> >= 1 on the
// whole support: the torus part of the Kirwan-Ness semistability condition.
inline bool kirwan_ness_torus_check(const RootSystem& rs, const std::vector<std::size_t>& support,
                                    const CocharRational& lambda) {
  if (support.empty()) throw std::invalid_argument("kirwan_ness_torus_check: empty support");
  const mpq_class k = rs.pairing(support.front(), lambda.coords);
  for (auto a : support)
    if (rs.pairing(a, lambda.coords) != k)
      throw std::invalid_argument("kirwan_ness_torus_check: Y is not concentrated in one degree");
  const RatVec h = rs.vector_from_cochar(lambda.coords);
  return !min_norm_point(rs.gram(), root_vectors(rs, support), {h}).has_value();
}

// Independent optimality certificate in characteristic 0: mu is optimal for Y
// iff Y extends to an sl_2-triple (Y, H_{2mu}, X).  With Y homogeneous of
// degree k for lambda, X is sought in degree -k.  Returns X or nullopt.
inline std::optional<LieElement<RationalField>> sl2_partner(const StructureConstants& sc,
                                                            const LieElement<RationalField>& y,
                                                            const OptimalityCertificate& cert) {
  const RootSystem& rs = sc.root_system();
  const RationalField q = y.field();
  const GradingReport g = grade(rs, cert.lambda);
  for (const auto& [i, v] : y.terms())
    if (i >= rs.num_roots() || rs.pairing(i, cert.lambda.coords) != cert.k)
      throw std::invalid_argument("sl2_partner: Y is not homogeneous of degree k");
  const auto& unknowns = g.roots_in(-cert.k);
  // rows: degree-0 coordinates (roots of degree 0, then Cartan basis)
  std::vector<std::size_t> rows = g.roots_in(0);
  for (int j = 0; j < rs.rank(); ++j) rows.push_back(sc.cartan_index(j));
  Matrix<mpq_class> a(rows.size(), unknowns.size(), 0);
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    const auto col = bracket(sc, y, LieElement<RationalField>::basis(q, unknowns[c], 1));
    for (std::size_t r = 0; r < rows.size(); ++r) a(r, c) = col.coeff(rows[r]);
  }
  std::vector<mpq_class> rhs(rows.size(), 0);
  for (int j = 0; j < rs.rank(); ++j)
    rhs[g.roots_in(0).size() + static_cast<std::size_t>(j)] = 2 * cert.mu.coords[static_cast<std::size_t>(j)];
  auto x = solve(q, a, rhs);
  if (!x) return std::nullopt;
  LieElement<RationalField> out(q);
  for (std::size_t c = 0; c < unknowns.size(); ++c) out.add_term(unknowns[c], (*x)[c]);
  return out;
}

}  // namespace chevalley
