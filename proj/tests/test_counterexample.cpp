#include <gtest/gtest.h>

#include "chevalley/counterexample_lab.hpp"
#include "support.hpp"

using namespace chevalley;
using testing_support::cochar;

TEST(Counterexample, CokernelOfEta) {
  EXPECT_EQ(coker_eta(RootSystem::build("A2", Isogeny::adjoint)), (std::vector<mpz_class>{1, 3}));
  EXPECT_EQ(coker_eta(RootSystem::build("A1", Isogeny::adjoint)), (std::vector<mpz_class>{2}));
  EXPECT_EQ(coker_eta(RootSystem::build("D4", Isogeny::adjoint)), (std::vector<mpz_class>{1, 1, 2, 2}));
  for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    for (const auto& d : coker_eta(RootSystem::build(t, Isogeny::simply_connected))) EXPECT_EQ(d, 1) << t;
    // |coker| is the index of the coroot lattice: |det Cartan|
    const auto rs = RootSystem::build(t, Isogeny::adjoint);
    mpz_class prod = 1;
    for (const auto& d : coker_eta(rs)) prod *= d;
    Matrix<mpq_class> c(static_cast<std::size_t>(rs.rank()), static_cast<std::size_t>(rs.rank()), 0);
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = rs.cartan_matrix()(i, j);
    EXPECT_EQ(mpq_class(prod), abs(determinant(RationalField(), c))) << t;
  }
}

TEST(Counterexample, Pgl3ModThree) {
  const StructureConstants sc(RootSystem::build("A2", Isogeny::adjoint));
  const auto ce = regular_counterexample(sc, 3);
  ASSERT_TRUE(ce.has_value());
  const PrimeField f(3);
  LieElement<PrimeField> x(f);
  x.add_term(3, 1);
  x.add_term(4, 2);
  EXPECT_EQ(ce->x, x);
  EXPECT_EQ(ce->y, testing_support::on_roots(f, {0, 1}, std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(ce->cartan_of_bracket, (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(ce->k, 1);
  EXPECT_EQ(ce->degree_of_x, -1);
  EXPECT_FALSE(regular_counterexample(sc, 2).has_value());
  EXPECT_FALSE(regular_counterexample(StructureConstants(RootSystem::build("A2", Isogeny::simply_connected)), 3));
}

TEST(Counterexample, CGammaTable) {
  const StructureConstants sc(RootSystem::build("A2", Isogeny::simply_connected));
  const auto t = c_gamma(sc, {3}, {2});
  ASSERT_EQ(t.gamma_map.size(), 1u);
  EXPECT_EQ(t.gamma_map.at(1), (std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}}));
  // -a1, -a2 against a1, a2: differences are never roots except through a1+a2
  const auto u = c_gamma(sc, {3, 4}, {0, 1});
  EXPECT_TRUE(u.gamma_map.empty());
  const auto v = c_gamma(sc, {0, 1}, {0, 1});
  EXPECT_EQ(v.gamma_map.at(2), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}}));
}

TEST(Counterexample, DestabilizingCertificate) {
  const auto rs = RootSystem::build("A2", Isogeny::simply_connected);
  const auto lt = cochar(rs, {1, 0});
  const auto c = destabilizing_certificate(rs, {2}, lt, RatVec{-1, 1});
  EXPECT_EQ(c.a, 2);
  EXPECT_EQ(c.mu.coords, (RatVec{mpq_class(1, 2), mpq_class(1, 2)}));
  EXPECT_LT(c.mu.norm_sq, lt.norm_sq);
  // eta along lambda does not lower the norm
  EXPECT_THROW(destabilizing_certificate(rs, {2}, lt, RatVec{1, 0}), std::invalid_argument);
  // eta pairing negatively with the support
  EXPECT_THROW(destabilizing_certificate(rs, {2}, lt, RatVec{-1, 0}), std::invalid_argument);
  EXPECT_THROW(destabilizing_certificate(rs, {}, lt, RatVec{-1, 1}), std::invalid_argument);
}

TEST(Counterexample, NoCertificateAtTheOptimum) {
  for (const char* t : {"A2", "B2", "G2", "A3", "C3"}) {
    const auto rs = RootSystem::build(t, Isogeny::simply_connected);
    std::vector<std::vector<std::size_t>> supports{testing_support::simple_roots(rs), {rs.num_positive() - 1}};
    for (const auto& s : supports) {
      const auto cert = optimal_cocharacter(rs, s);
      for (std::size_t a = 0; a < rs.num_roots(); ++a)
        EXPECT_THROW(destabilizing_certificate(rs, s, cert.mu, a), std::invalid_argument) << t << " root " << a;
    }
  }
}
