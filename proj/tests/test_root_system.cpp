#include <gtest/gtest.h>

#include <map>
#include <string>

#include "chevalley/root_system.hpp"
#include "support.hpp"

using namespace chevalley;

namespace {

const std::vector<std::string> kTypes{"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4",
                                      "D4", "D5", "E6", "F4", "G2", "A1xA1", "B2xG2"};

RootSystem sc_build(const std::string& t) { return RootSystem::build(t, Isogeny::simply_connected); }

}  // namespace

TEST(RootSystem, ClassicalRootCounts) {
  const std::map<std::string, std::size_t> expected{
      {"A1", 2},  {"A2", 6},   {"A5", 30},  {"B2", 8},  {"B3", 18}, {"B5", 50}, {"C3", 18}, {"C5", 50},
      {"D4", 24}, {"D6", 60},  {"E6", 72},  {"E7", 126}, {"E8", 240}, {"F4", 48}, {"G2", 12}, {"A2xB2", 14}};
  for (const auto& [t, n] : expected) {
    const auto rs = sc_build(t);
    EXPECT_EQ(rs.num_roots(), n) << t;
    EXPECT_EQ(rs.num_positive() * 2, n) << t;
  }
}

TEST(RootSystem, RankOneAndAdjointExamples) {
  const auto a1 = sc_build("A1");
  EXPECT_EQ(a1.num_roots(), 2u);
  EXPECT_EQ(a1.root_form(0, 0), 2);
  const auto g2 = RootSystem::build("G2", Isogeny::adjoint);
  EXPECT_EQ(g2.num_roots(), 12u);
  EXPECT_EQ(g2.num_positive(), 6u);
  // in the coweight basis the simple coroots have the Cartan matrix as coordinates
  const auto a2 = RootSystem::build("A2", Isogeny::adjoint);
  EXPECT_EQ(a2.coroot(0), (IntVec{2, -1}));
  EXPECT_EQ(a2.coroot(1), (IntVec{-1, 2}));
  EXPECT_EQ(a2.cartan_matrix()(0, 1), -1);
  // simply connected: simple coroots are the basis
  const auto a2sc = sc_build("A2");
  EXPECT_EQ(a2sc.coroot(0), (IntVec{1, 0}));
  EXPECT_EQ(a2sc.coroot(1), (IntVec{0, 1}));
}

TEST(RootSystem, InvalidTypesRejected) {
  for (const char* bad : {"A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "H3", "", "A", "Ax"})
    EXPECT_THROW(sc_build(bad), std::invalid_argument) << bad;
  EXPECT_THROW(parse_isogeny("universal"), std::invalid_argument);
}

TEST(RootSystem, LongRootsHaveSquaredLengthTwo) {
  for (const auto& t : kTypes) {
    const auto rs = sc_build(t);
    mpq_class longest = 0;
    for (std::size_t a = 0; a < rs.num_roots(); ++a) longest = std::max(longest, rs.root_form(a, a));
    EXPECT_EQ(longest, 2) << t;
  }
}

TEST(RootSystem, StructuralInvariants) {
  for (const auto& t : kTypes)
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto rs = RootSystem::build(t, iso);
      for (int i = 0; i < rs.rank(); ++i) {
        IntVec e(static_cast<std::size_t>(rs.rank()), 0);
        e[static_cast<std::size_t>(i)] = 1;
        EXPECT_EQ(rs.root(rs.simple(i)), e);
      }
      for (std::size_t a = 0; a < rs.num_roots(); ++a) {
        // roots come in pairs, positives are nonnegative combinations
        IntVec neg = rs.root(a);
        for (auto& c : neg) c = -c;
        EXPECT_EQ(rs.root(rs.negative_of(a)), neg);
        for (int c : rs.root(a)) EXPECT_TRUE(rs.is_positive(a) ? c >= 0 : c <= 0);
        EXPECT_EQ(rs.pairing(a, rs.coroot(a)), 2) << t;
        EXPECT_EQ(rs.index_of(rs.root(a)), a);
        for (std::size_t b = 0; b < rs.num_roots(); ++b) {
          // reflection closure
          const std::size_t sb = rs.reflect(a, b);
          EXPECT_EQ(rs.root_form(sb, sb), rs.root_form(b, b));
          // <beta, coroot(alpha)> two ways
          EXPECT_EQ(rs.pairing(b, rs.coroot(a)), rs.cartan_integer(b, a));
        }
      }
      // Weyl invariance of the form under simple reflections
      for (int s = 0; s < rs.rank(); ++s)
        for (std::size_t a = 0; a < rs.num_roots(); ++a)
          for (std::size_t b = 0; b < rs.num_roots(); ++b)
            ASSERT_EQ(rs.root_form(rs.reflect(rs.simple(s), a), rs.reflect(rs.simple(s), b)), rs.root_form(a, b));
    }
}

TEST(RootSystem, PositiveRootOrderIsHeightThenDescending) {
  for (const auto& t : kTypes) {
    const auto rs = sc_build(t);
    for (std::size_t a = 1; a < rs.num_positive(); ++a) {
      EXPECT_LE(rs.height(a - 1), rs.height(a));
      if (rs.height(a - 1) == rs.height(a)) {
        EXPECT_GT(rs.root(a - 1), rs.root(a));
      }
    }
  }
}

TEST(RootSystem, AlphaChainExamples) {
  const auto a2 = sc_build("A2");
  EXPECT_EQ(a2.alpha_chain(0, 1), (std::pair<int, int>{0, 1}));
  const auto g2 = sc_build("G2");
  const std::size_t shortr = g2.root_form(0, 0) < g2.root_form(1, 1) ? 0 : 1;
  const std::size_t longr = 1 - shortr;
  EXPECT_EQ(g2.alpha_chain(shortr, longr), (std::pair<int, int>{0, 3}));
  const auto a1a1 = sc_build("A1xA1");
  EXPECT_EQ(a1a1.alpha_chain(0, 1), (std::pair<int, int>{0, 0}));
  EXPECT_THROW(a2.alpha_chain(0, 0), std::invalid_argument);
  EXPECT_THROW(a2.alpha_chain(0, a2.negative_of(0)), std::invalid_argument);
}

TEST(RootSystem, ChainIdentityAgainstScan) {
  for (const auto& t : kTypes) {
    const auto rs = sc_build(t);
    for (std::size_t a = 0; a < rs.num_roots(); ++a)
      for (std::size_t b = 0; b < rs.num_roots(); ++b) {
        if (b == a || b == rs.negative_of(a)) continue;
        const auto [q, r] = rs.alpha_chain(a, b);
        EXPECT_EQ(std::make_pair(q, r), testing_support::chain_by_scan(rs, a, b));
        EXPECT_EQ(q - r, rs.cartan_integer(b, a)) << t;
      }
  }
}

TEST(RootSystem, CocharacterIdentificationRoundTrips) {
  testing_support::Rng rng(5);
  for (const auto& t : kTypes)
    for (auto iso : {Isogeny::simply_connected, Isogeny::adjoint}) {
      const auto rs = RootSystem::build(t, iso);
      for (int trial = 0; trial < 5; ++trial) {
        RatVec m(static_cast<std::size_t>(rs.rank()));
        for (auto& c : m) c = testing_support::random_value(rng, RationalField());
        EXPECT_EQ(rs.cochar_from_vector(rs.vector_from_cochar(m)), m);
        // <alpha, m> = (alpha, v) under the identification
        const RatVec v = rs.vector_from_cochar(m);
        for (std::size_t a = 0; a < rs.num_roots(); a += 3) {
          RatVec ra(rs.root(a).begin(), rs.root(a).end());
          EXPECT_EQ(rs.pairing(a, m), rs.form(ra, v));
        }
        EXPECT_EQ(rs.cochar_form(m, m), rs.form(v, v));
      }
    }
}

TEST(RootSystem, ScalingRescalesFormOnOneFactor) {
  const auto rs = sc_build("A1xB2");
  const auto scaled = rs.with_scaling(1, mpq_class(3));
  EXPECT_EQ(scaled.root_form(0, 0), rs.root_form(0, 0));
  EXPECT_EQ(scaled.root_form(1, 1), 3 * rs.root_form(1, 1));
  EXPECT_EQ(scaled.roots(), rs.roots());
  EXPECT_THROW(rs.with_scaling(2, mpq_class(1)), std::out_of_range);
  EXPECT_THROW(rs.with_scaling(0, mpq_class(-1)), std::invalid_argument);
}

TEST(RootSystem, RootNames) {
  const auto b2 = sc_build("B2");
  EXPECT_EQ(b2.root_name(0), "a1");
  EXPECT_EQ(b2.root_name(b2.negative_of(0)), "-a1");
  bool found = false;
  for (std::size_t a = 0; a < b2.num_roots(); ++a) found = found || b2.root_name(a) == "a1+2*a2" || b2.root_name(a) == "2*a1+a2";
  EXPECT_TRUE(found);
}
