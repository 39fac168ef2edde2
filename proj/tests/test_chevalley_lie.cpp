#include <gtest/gtest.h>

#include <set>

#include "chevalley/chevalley_lie.hpp"
#include "support.hpp"

using namespace chevalley;
using testing_support::Rng;

namespace {

StructureConstants constants(const std::string& t, Isogeny iso = Isogeny::simply_connected) {
  return StructureConstants(RootSystem::build(t, iso));
}

// e_i - e_j for a root of A_{n-1} in simple-root coordinates
std::pair<int, int> matrix_position(const RootSystem& rs, std::size_t a) {
  const auto& r = rs.root(a);
  int lo = -1, hi = -1;
  for (int i = 0; i < rs.rank(); ++i)
    if (r[static_cast<std::size_t>(i)] != 0) {
      if (lo < 0) lo = i;
      hi = i;
    }
  return rs.is_positive(a) ? std::pair{lo, hi + 1} : std::pair{hi + 1, lo};
}

}  // namespace

TEST(ChevalleyLie, A2SignConvention) {
  const auto sc = constants("A2");
  EXPECT_EQ(sc.N(0, 1), 1);
  EXPECT_EQ(sc.N(1, 0), -1);
  EXPECT_EQ(sc.N(0, 0), 0);
}

TEST(ChevalleyLie, MagnitudeBoundsPerType) {
  EXPECT_EQ(constants("G2").max_abs(), 3);
  for (const char* t : {"A3", "D4", "E6", "A1xA2"}) EXPECT_EQ(constants(t).max_abs(), 1) << t;
  for (const char* t : {"B2", "C3", "F4"}) EXPECT_EQ(constants(t).max_abs(), 2) << t;
  const auto b2 = constants("B2");
  std::set<int> seen;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) seen.insert(std::abs(b2.N(a, b)));
  EXPECT_TRUE(seen.count(2));
}

TEST(ChevalleyLie, ChainMagnitudesAndSymmetries) {
  for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4", "B2xA1"})
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto sc = constants(t, iso);
      const auto& rs = sc.root_system();
      for (std::size_t a = 0; a < rs.num_roots(); ++a)
        for (std::size_t b = 0; b < rs.num_roots(); ++b) {
          if (!sc.root_sum(a, b)) {
            EXPECT_EQ(sc.N(a, b), 0);
            continue;
          }
          EXPECT_EQ(std::abs(sc.N(a, b)), testing_support::chain_by_scan(rs, a, b).first + 1) << t;
          EXPECT_EQ(sc.N(a, b), -sc.N(b, a));
          EXPECT_EQ(sc.N(rs.negative_of(a), rs.negative_of(b)), -sc.N(a, b));
        }
    }
}

TEST(ChevalleyLie, AgreesWithMatrixRealizationOfSln) {
  // [E_ij, E_kl] = d_jk E_il - d_li E_kj in gl_n
  for (int n = 2; n <= 6; ++n) {
    const auto sc = constants("A" + std::to_string(n - 1));
    const auto& rs = sc.root_system();
    for (std::size_t a = 0; a < rs.num_roots(); ++a)
      for (std::size_t b = 0; b < rs.num_roots(); ++b) {
        if (b == rs.negative_of(a)) continue;
        const auto [i, j] = matrix_position(rs, a);
        const auto [k, l] = matrix_position(rs, b);
        const bool matrix_nonzero = (j == k) != (l == i);
        EXPECT_EQ(sc.N(a, b) != 0, matrix_nonzero);
      }
  }
}

TEST(ChevalleyLie, BasicBrackets) {
  const auto sl2 = constants("A1");
  const RationalField q;
  const auto h = bracket(sl2, LieElement<RationalField>::basis(q, 0, 1), LieElement<RationalField>::basis(q, 1, 1));
  EXPECT_EQ(h, LieElement<RationalField>::basis(q, sl2.cartan_index(0), 1));
  // [H, E] = <alpha, alpha-check> E = 2E
  const auto e = bracket(sl2, LieElement<RationalField>::basis(q, sl2.cartan_index(0), 1),
                         LieElement<RationalField>::basis(q, 0, 1));
  EXPECT_EQ(e, LieElement<RationalField>::basis(q, 0, 2));

  Rng rng(3);
  const auto b3 = constants("B3");
  for (int t = 0; t < 30; ++t) {
    const auto x = testing_support::random_element(rng, b3, q, 6);
    EXPECT_TRUE(bracket(b3, x, x).is_zero());
    const auto y = testing_support::random_element(rng, b3, q, 6);
    EXPECT_EQ(bracket(b3, x, y), -bracket(b3, y, x));
  }
}

TEST(ChevalleyLie, CartanRelations) {
  for (const char* t : {"B2", "G2", "A3"})
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto sc = constants(t, iso);
      const auto& rs = sc.root_system();
      const PrimeField f(101);
      for (int j = 0; j < rs.rank(); ++j)
        for (std::size_t b = 0; b < rs.num_roots(); ++b) {
          IntVec e(static_cast<std::size_t>(rs.rank()), 0);
          e[static_cast<std::size_t>(j)] = 1;
          const auto out = bracket(sc, LieElement<PrimeField>::basis(f, sc.cartan_index(j), 1),
                                   LieElement<PrimeField>::basis(f, b, 1));
          EXPECT_EQ(out, LieElement<PrimeField>::basis(f, b, f.from_int(rs.pairing(b, e))));
        }
      // [E_a, E_-a] = H_{coroot(a)}
      for (std::size_t a = 0; a < rs.num_roots(); ++a) {
        const auto h = bracket(sc, LieElement<PrimeField>::basis(f, a, 1),
                               LieElement<PrimeField>::basis(f, rs.negative_of(a), 1));
        LieElement<PrimeField> expected(f);
        for (int j = 0; j < rs.rank(); ++j)
          expected.add_term(sc.cartan_index(j), f.from_int(rs.coroot(a)[static_cast<std::size_t>(j)]));
        EXPECT_EQ(h, expected);
      }
    }
}

TEST(ChevalleyLie, Pgl3ModThreeDegeneracy) {
  const auto sc = constants("A2", Isogeny::adjoint);
  const PrimeField f3(3);
  LieElement<PrimeField> x(f3), y(f3);
  x.add_term(3, 1);          // E_-a1
  x.add_term(4, f3.neg(1));  // -E_-a2
  y.add_term(0, 1);
  y.add_term(1, 1);
  const auto c = cartan_component(sc, bracket(sc, x, y));
  EXPECT_EQ(c, (std::vector<std::int64_t>{0, 0}));
  // the same element over Q has nonzero Cartan component
  const RationalField q;
  LieElement<RationalField> xq(q), yq(q);
  xq.add_term(3, 1);
  xq.add_term(4, -1);
  yq.add_term(0, 1);
  yq.add_term(1, 1);
  EXPECT_NE(cartan_component(sc, bracket(sc, xq, yq)), (std::vector<mpq_class>{0, 0}));
}

TEST(ChevalleyLie, MixedFieldsRejected) {
  const auto sc = constants("A2");
  const RationalField q2(2), q3(3);
  EXPECT_THROW(bracket(sc, LieElement<RationalField>::basis(q2, 0, 1), LieElement<RationalField>::basis(q3, 1, 1)),
               std::invalid_argument);
  LieElement<RationalField> a(q2);
  EXPECT_THROW(a += LieElement<RationalField>(q3), std::invalid_argument);
}

TEST(ChevalleyLie, CanonicalSparseForm) {
  const PrimeField f(5);
  LieElement<PrimeField> x(f);
  x.add_term(3, 2);
  x.add_term(3, 3);
  EXPECT_TRUE(x.is_zero());
  x.add_term(1, 0);
  EXPECT_TRUE(x.terms().empty());
}
