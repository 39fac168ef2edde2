#pragma once

// Shared generators and independent oracles for the test suites.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chevalley/chevalley_lie.hpp"
#include "chevalley/fields.hpp"
#include "chevalley/grading.hpp"
#include "chevalley/linalg.hpp"
#include "chevalley/root_system.hpp"

namespace testing_support {

using namespace chevalley;

// Engine output only: the distributions in <random> are not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // uniform in [lo, hi]
  long range(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return engine_() & 1U; }

 private:
  std::mt19937_64 engine_;
};

inline mpq_class random_value(Rng& rng, const RationalField&) {
  mpq_class v(rng.range(-6, 6), rng.range(1, 4));
  v.canonicalize();
  return v;
}
inline std::int64_t random_value(Rng& rng, const PrimeField& f) { return rng.range(0, f.characteristic() - 1); }
inline int random_value(Rng& rng, const GaloisField& f) { return static_cast<int>(rng.range(0, f.order() - 1)); }
inline RationalFunction random_value(Rng& rng, const RationalFunctionField& f) {
  auto poly = [&] {
    PolynomialRing::Poly p(static_cast<std::size_t>(rng.range(1, 3)), 0);
    for (auto& c : p) c = static_cast<int>(rng.range(0, f.order() - 1));
    return p;
  };
  auto den = poly();
  PolynomialRing::trim(den);
  if (den.empty()) den = {1};
  return f.make(poly(), den);
}

template <class F>
typename F::value_type random_nonzero(Rng& rng, const F& f) {
  for (;;) {
    auto v = random_value(rng, f);
    if (!f.is_zero(v)) return v;
  }
}

template <class F>
LieElement<F> random_element(Rng& rng, const StructureConstants& sc, const F& f, std::size_t terms) {
  LieElement<F> x(f);
  for (std::size_t t = 0; t < terms; ++t) x.add_term(rng.index(sc.dimension()), random_value(rng, f));
  return x;
}

template <class F>
LieElement<F> on_roots(const F& f, const std::vector<std::size_t>& roots, const std::vector<typename F::value_type>& c) {
  LieElement<F> x(f);
  for (std::size_t i = 0; i < roots.size(); ++i) x.add_term(roots[i], c[i]);
  return x;
}

template <class F>
LieElement<F> jacobi(const StructureConstants& sc, const LieElement<F>& x, const LieElement<F>& y,
                     const LieElement<F>& z) {
  return bracket(sc, bracket(sc, x, y), z) + bracket(sc, bracket(sc, y, z), x) + bracket(sc, bracket(sc, z, x), y);
}

// Chain lengths by scanning the root list directly.
inline std::pair<int, int> chain_by_scan(const RootSystem& rs, std::size_t a, std::size_t b) {
  auto is_root = [&](int j) {
    IntVec v = rs.root(b);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += j * rs.root(a)[i];
    for (const auto& r : rs.roots())
      if (r == v) return true;
    return false;
  };
  int q = 0, r = 0;
  while (is_root(-(q + 1))) ++q;
  while (is_root(r + 1)) ++r;
  return {q, r};
}

inline CocharRational cochar(const RootSystem& rs, const IntVec& v) { return CocharRational::make(rs, v); }

inline std::vector<std::size_t> simple_roots(const RootSystem& rs) {
  std::vector<std::size_t> out;
  for (int i = 0; i < rs.rank(); ++i) out.push_back(rs.simple(i));
  return out;
}

// sum of positive coroots, in lattice coordinates
inline RatVec coroot_sum(const RootSystem& rs) {
  RatVec out(static_cast<std::size_t>(rs.rank()), 0);
  for (std::size_t a = 0; a < rs.num_positive(); ++a)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += rs.coroot(a)[j];
  return out;
}

inline Matrix<mpz_class> int_matrix(const std::vector<std::vector<long>>& rows) {
  Matrix<mpz_class> m(rows.size(), rows.empty() ? 0 : rows[0].size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace testing_support
