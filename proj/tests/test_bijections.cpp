#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hatperm/bijections.hpp"
#include "hatperm/oracle.hpp"
#include "test_util.hpp"

using namespace hatperm;

namespace {

const MarkedPattern k132 = MarkedPattern::classical({1, 3, 2});

// 132-avoider of the given size, drawn through a random Dyck path.
Permutation random_132_avoider(int n, std::mt19937& rng) {
  return phi_inverse(test::random_dyck(n, rng));
}

}  // namespace

TEST(Phi, Examples) {
  EXPECT_EQ(phi({5, 4, 6, 2, 1, 3, 7}).str(), "uuududduududdd");
  EXPECT_EQ(phi({4, 5, 2, 3, 6, 1}).str(), "uuudduudddud");
  EXPECT_EQ(phi_recursive({4, 5, 2, 3, 6, 1}).str(), "uuudduudddud");
  EXPECT_EQ(phi(Permutation{}).str(), "");
  EXPECT_EQ(phi({1}).str(), "ud");
  EXPECT_EQ(phi(Permutation::identity(4)).str(), "uuuudddd");
}

TEST(Phi, InverseExamples) {
  EXPECT_EQ(phi_inverse(DyckWord::parse("uuududduududdd")), (Permutation{5, 4, 6, 2, 1, 3, 7}));
  EXPECT_EQ(phi_inverse(DyckWord::parse("uuuudddd")), Permutation::identity(4));
  EXPECT_EQ(phi_inverse(DyckWord::parse("ud")), (Permutation{1}));
}

TEST(Phi, RejectsNon132Avoiders) {
  EXPECT_THROW(phi({1, 3, 2}), DomainError);
  EXPECT_THROW(phi_recursive({2, 1, 4, 3}), DomainError);
}

TEST(Phi, RandomRoundTripsAtLargerSizes) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 30);
    const auto w = test::random_dyck(n, rng);
    const auto p = phi_inverse(w);
    ASSERT_TRUE(avoids_132(p.values())) << w.str();
    EXPECT_EQ(phi(p), w);
    EXPECT_EQ(phi_recursive(p), w);
  }
}

TEST(Phi, PeaksMatchMinima) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_132_avoider(1 + static_cast<int>(rng() % 25), rng);
    EXPECT_EQ(stats(phi(p)).peaks.size(), ltrm_decompose(p.values()).blocks.size());
  }
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(Permutation{4, 5, 2, 3, 6, 1}.values()).str(),
            "u4 d4 u5 u2 d2 u3 d3 d5 u6 u1 d1 d6");
  EXPECT_EQ(theta(Permutation{1}.values()).str(), "u1 d1");
  EXPECT_EQ(theta_inverse(DyckWord::parse("uduududduudd")), (Permutation{4, 5, 2, 3, 6, 1}));
  EXPECT_EQ(theta_inverse(DyckWord::parse("ud")), (Permutation{1}));
  // The worked example of the phi section has no udu under theta.
  EXPECT_FALSE(contains_u_dpow_u(theta(Permutation{5, 4, 6, 2, 1, 3, 7}.values()).unlabeled(), 3));
}

TEST(Theta, RoundTripEveryWord) {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& w : enumerate_dyck(n)) {
      const auto p = theta_inverse(w);
      ASSERT_TRUE(avoids_132(p.values()));
      EXPECT_EQ(theta(p.values()).unlabeled(), w);
      EXPECT_EQ(theta_labels(w).up_labels(), p.vector());
    }
  }
}

TEST(Theta, PropertiesOnRandomImages) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_132_avoider(1 + static_cast<int>(rng() % 30), rng);
    const auto path = theta(p.values());
    EXPECT_TRUE(check_properties(path).all()) << to_string(p);
    EXPECT_EQ(path.up_labels(), p.vector());
  }
}

TEST(IndexedPath, ParseAndProperties) {
  const auto path = IndexedDyckPath::parse("u4 d4 u5 u2 d2 u3 d3 d5 u6 u1 d1 d6");
  EXPECT_EQ(path.str(), "u4 d4 u5 u2 d2 u3 d3 d5 u6 u1 d1 d6");
  EXPECT_TRUE(check_properties(path).all());
  // Mismatched pair label.
  const auto bad = IndexedDyckPath::parse("u1 u2 d1 d2");
  EXPECT_FALSE(check_properties(bad).well_matching);
  EXPECT_FALSE(check_properties(IndexedDyckPath::parse("u9 d9")).all());
  EXPECT_THROW(IndexedDyckPath::parse("u1 x1"), PathError);
  EXPECT_THROW(IndexedDyckPath::parse("u d"), ParseError);
  EXPECT_THROW(IndexedDyckPath::parse("d1 u1"), PathError);
}

TEST(SimionSchmidt, Examples) {
  EXPECT_EQ(simion_schmidt({7, 5, 6, 1, 2, 3, 4}), (Permutation{7, 5, 6, 1, 4, 3, 2}));
  EXPECT_EQ(simion_schmidt_inverse({7, 5, 6, 1, 4, 3, 2}), (Permutation{7, 5, 6, 1, 2, 3, 4}));
  const Permutation dec{5, 4, 3, 2, 1};
  EXPECT_EQ(simion_schmidt(dec), dec);
  EXPECT_EQ(simion_schmidt_inverse(dec), dec);
  EXPECT_EQ(simion_schmidt({1, 2}), (Permutation{1, 2}));
  EXPECT_THROW(simion_schmidt({1, 3, 2}), DomainError);
  EXPECT_THROW(simion_schmidt_inverse({1, 2, 3}), DomainError);
}

TEST(SimionSchmidt, BijectionBetweenClasses) {
  for (int n = 0; n <= 8; ++n) {
    std::set<Permutation> image;
    for (const auto& p : enumerate_class({n, {k132}})) {
      const auto s = simion_schmidt(p);
      EXPECT_TRUE(avoids_123(s.values()));
      // Same minima in the same places.
      EXPECT_EQ(ltrm_decompose(s.values()).ltrm_indices, ltrm_decompose(p.values()).ltrm_indices);
      EXPECT_EQ(simion_schmidt_inverse(s), p);
      image.insert(s);
    }
    EXPECT_EQ(image.size(), catalan(n));
  }
}

TEST(Geometric, DecreasingHeadsExample) {
  const auto g = geometric_representation({8, 6, 5, 7, 9, 3, 2, 1, 4, 10});
  std::set<std::pair<int, int>> arcs;
  for (const auto& a : g.arcs) arcs.insert({a.from, a.to});
  EXPECT_EQ(arcs, (std::set<std::pair<int, int>>{{1, 4}, {4, 10}, {5, 7}, {7, 9}}));
  EXPECT_EQ(g.singles, (std::vector<int>{2, 3, 6, 8}));
  EXPECT_FALSE(blocks_overlap(g));
  EXPECT_TRUE(g.is_arc_start(4));
  EXPECT_TRUE(g.is_arc_end(4));
  EXPECT_TRUE(g.is_single(8));
}

TEST(Geometric, BlockExamples) {
  const auto one = GeometricRepresentation::from_blocks({{1, 5, 11}});
  ASSERT_EQ(one.arcs.size(), 2u);
  EXPECT_EQ(one.arcs[0], (Arc{1, 5, 0}));
  EXPECT_EQ(one.arcs[1], (Arc{5, 11, 0}));
  EXPECT_FALSE(blocks_overlap(one));
  EXPECT_TRUE(blocks_overlap(GeometricRepresentation::from_blocks({{1, 7, 11, 13}, {2, 6, 12}})));
  const auto dec = geometric_representation({4, 3, 2, 1});
  EXPECT_TRUE(dec.arcs.empty());
  EXPECT_EQ(dec.singles.size(), 4u);
  EXPECT_THROW(geometric_representation({3, 1, 4, 2}), DomainError);
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi(MotzkinWord::parse("ufduududd")), (Permutation{8, 6, 5, 7, 9, 3, 2, 1, 4, 10}));
  EXPECT_EQ(psi(MotzkinWord::parse("ffff")), (Permutation{5, 4, 3, 2, 1}));
  EXPECT_EQ(psi(MotzkinWord::parse("uudd")), (Permutation{3, 2, 4, 1, 5}));
  EXPECT_EQ(psi(MotzkinWord::parse("")), (Permutation{1}));
  EXPECT_EQ(psi_inverse({8, 6, 5, 7, 9, 3, 2, 1, 4, 10}).str(), "ufduududd");
  EXPECT_EQ(psi_inverse({2, 1}).str(), "f");
  EXPECT_EQ(psi_inverse({1}).str(), "");
}

TEST(Psi, InverseRejectsOutsideTheClass) {
  EXPECT_THROW(psi_inverse(Permutation{}), DomainError);
  EXPECT_THROW(psi_inverse({1, 3, 2}), DomainError);
  EXPECT_THROW(psi_inverse({2, 3, 1}), DomainError);
}

TEST(Psi, RandomRoundTrips) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = test::random_motzkin(static_cast<int>(rng() % 40), rng);
    const auto p = psi(m);
    ASSERT_TRUE(avoids_132(p.values())) << m.str();
    ASSERT_FALSE(has_adjacent_consecutive_factor(p.values())) << m.str();
    EXPECT_EQ(psi_inverse(p), m);
  }
}

TEST(Overlap, OverlapCriterionOnRandomInput) {
  std::mt19937 rng(13);
  int checked = 0;
  while (checked < 200) {
    const auto p = test::random_permutation(2 + rng() % 10, rng);
    if (!satisfies_ltrm_conditions(ltrm_decompose(p.values()))) continue;
    ++checked;
    EXPECT_EQ(avoids_132(p.values()), !blocks_overlap(geometric_representation(p))) << to_string(p);
  }
}

TEST(Maps, ForwardThenInverseIsIdentity) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_132_avoider(static_cast<int>(rng() % 20), rng);
    EXPECT_EQ(phi_inverse(phi(p)), p);
    EXPECT_EQ(theta_inverse(theta(p.values()).unlabeled()), p);
    EXPECT_EQ(simion_schmidt_inverse(simion_schmidt(p)), p);
  }
}
