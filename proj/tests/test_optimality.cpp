#include <gtest/gtest.h>

#include "chevalley/optimality.hpp"
#include "support.hpp"

using namespace chevalley;
using testing_support::cochar;

TEST(Optimality, Sl2RootVector) {
  const auto rs = RootSystem::build("A1", Isogeny::simply_connected);
  const auto c = optimal_cocharacter(rs, {0});
  EXPECT_EQ(c.mu.coords, (RatVec{mpq_class(1, 2)}));
  EXPECT_EQ(c.lambda.coords, (RatVec{1}));
  EXPECT_EQ(c.k, 2);
  EXPECT_EQ(c.active, (std::vector<std::size_t>{0}));
  // in PGL2 the same ray is integral at the coweight
  const auto pgl2 = RootSystem::build("A1", Isogeny::adjoint);
  const auto d = optimal_cocharacter(pgl2, {0});
  EXPECT_EQ(d.lambda.coords, (RatVec{1}));
  EXPECT_EQ(d.k, 1);
}

TEST(Optimality, Sl3RegularAndMinimal) {
  const auto rs = RootSystem::build("A2", Isogeny::simply_connected);
  const auto reg = optimal_cocharacter(rs, {0, 1});
  EXPECT_EQ(reg.mu.coords, (RatVec{1, 1}));
  EXPECT_EQ(reg.lambda.coords, (RatVec{1, 1}));
  EXPECT_EQ(reg.k, 1);
  EXPECT_EQ(reg.multipliers.size(), 2u);
  const auto mini = optimal_cocharacter(rs, {2});
  EXPECT_EQ(mini.mu.coords, (RatVec{mpq_class(1, 2), mpq_class(1, 2)}));
  EXPECT_EQ(mini.lambda.coords, (RatVec{1, 1}));
  EXPECT_EQ(mini.k, 2);
  // a1 and a1+a2: neither single face is feasible, both constraints bind
  const auto mixed = optimal_cocharacter(rs, {0, 2});
  EXPECT_EQ(mixed.active, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(mixed.mu.coords, (RatVec{mpq_class(2, 3), mpq_class(1, 3)}));
  EXPECT_EQ(mixed.lambda.coords, (RatVec{2, 1}));
  EXPECT_EQ(mixed.k, 3);
}

TEST(Optimality, RejectsUnstableSupport) {
  const auto rs = RootSystem::build("A2", Isogeny::simply_connected);
  EXPECT_THROW(optimal_cocharacter(rs, {0, 3}), std::invalid_argument);
  EXPECT_THROW(optimal_cocharacter(rs, {}), std::invalid_argument);
}

TEST(Optimality, BruteForceAgreesAndCatchesCorruption) {
  const auto rs = RootSystem::build("A2", Isogeny::simply_connected);
  const auto reg = optimal_cocharacter(rs, {0, 1});
  for (int radius : {4, 5}) {
    const auto rep = brute_force_verify(rs, {0, 1}, reg, radius);
    EXPECT_TRUE(rep.ok());
    EXPECT_GT(rep.candidates, 0u);
  }
  // 2 lambda + coroot of a1
  auto bad = reg;
  bad.lambda = cochar(rs, {3, 2});
  bad.k = 1;
  const auto rep = brute_force_verify(rs, {0, 1}, bad, 5);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.violators.empty());
  EXPECT_THROW(brute_force_verify(rs, {0, 1}, bad, 2), std::invalid_argument);
}

TEST(Optimality, KirwanNessTorusCondition) {
  const auto rs = RootSystem::build("A2", Isogeny::simply_connected);
  EXPECT_TRUE(kirwan_ness_torus_check(rs, {0, 1}, cochar(rs, {1, 1})));
  EXPECT_TRUE(kirwan_ness_torus_check(rs, {2}, cochar(rs, {1, 1})));
  // E_a1 alone is destabilized further by a cocharacter orthogonal to rho
  EXPECT_FALSE(kirwan_ness_torus_check(rs, {0}, cochar(rs, {1, 1})));
  EXPECT_THROW(kirwan_ness_torus_check(rs, {0, 2}, cochar(rs, {1, 1})), std::invalid_argument);
}

TEST(Optimality, Sl2Partner) {
  const StructureConstants sc(RootSystem::build("A2", Isogeny::simply_connected));
  const auto& rs = sc.root_system();
  const RationalField q;
  const auto y = testing_support::on_roots(q, {0, 1}, std::vector<mpq_class>{1, 1});
  const auto cert = optimal_cocharacter(sc, y);
  const auto x = sl2_partner(sc, y, cert);
  ASSERT_TRUE(x.has_value());
  // [Y, X] is H_{2 mu}
  const auto h = bracket(sc, y, *x);
  for (int j = 0; j < 2; ++j) EXPECT_EQ(h.coeff(sc.cartan_index(j)), 2 * cert.mu.coords[static_cast<std::size_t>(j)]);
  // a non-optimal certificate has no partner
  OptimalityCertificate wrong;
  wrong.mu = cochar(rs, {1, 1});
  wrong.lambda = cochar(rs, {1, 1});
  wrong.k = 1;
  EXPECT_FALSE(sl2_partner(sc, LieElement<RationalField>::basis(q, 0, 1), wrong).has_value());
  EXPECT_THROW(sl2_partner(sc, LieElement<RationalField>::basis(q, 2, 1), wrong), std::invalid_argument);
}

TEST(Optimality, MinNormPointSmallCases) {
  Matrix<mpq_class> gram(2, 2, 0);
  gram(0, 0) = gram(1, 1) = 1;
  // x >= 1, y >= 1 in the plane
  const auto r = min_norm_point(gram, {RatVec{1, 0}, RatVec{0, 1}});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->point, (RatVec{1, 1}));
  EXPECT_EQ(r->norm_sq, 2);
  // x >= 1 and -x >= 1 is empty
  EXPECT_FALSE(min_norm_point(gram, {RatVec{1, 0}, RatVec{-1, 0}}).has_value());
  // x + y >= 1 with x = y
  const auto s = min_norm_point(gram, {RatVec{1, 1}}, {RatVec{1, -1}});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->point, (RatVec{mpq_class(1, 2), mpq_class(1, 2)}));
}
