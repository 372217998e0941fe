#include <gtest/gtest.h>

#include "hatperm/oracle.hpp"
#include "hatperm/verify.hpp"

using namespace hatperm;

TEST(Sequences, SmallValues) {
  EXPECT_EQ(catalan(0), 1u);
  EXPECT_EQ(catalan(3), 5u);
  EXPECT_EQ(catalan(10), 16796u);
  EXPECT_EQ(motzkin_number(4), 9u);
  EXPECT_EQ(motzkin_number(8), 323u);
  EXPECT_EQ(fine_number(0), 1u);
  EXPECT_EQ(fine_number(1), 0u);
  EXPECT_EQ(fine_number(2), 1u);
  EXPECT_EQ(fine_number(6), 57u);
}

TEST(Sequences, CatalanMatchesBinomial) {
  // binom(2n, n) / (n + 1) via the multiplicative formula in 128 bits.
  for (int n = 0; n <= 36; ++n) {
    unsigned __int128 b = 1;
    for (int k = 1; k <= n; ++k) b = b * static_cast<unsigned>(n + k) / static_cast<unsigned>(k);
    EXPECT_EQ(catalan(n), static_cast<std::uint64_t>(b / static_cast<unsigned>(n + 1))) << n;
  }
}

TEST(Sequences, Errors) {
  EXPECT_THROW(catalan(-1), InvalidInput);
  EXPECT_THROW(motzkin_number(-1), InvalidInput);
  EXPECT_THROW(fine_number(-1), InvalidInput);
  EXPECT_THROW(catalan(37), OverflowError);
  EXPECT_THROW(motzkin_number(60), OverflowError);
  EXPECT_THROW(fine_number(21), OverflowError);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_class({3, {MarkedPattern::classical({2, 1})}}),
            (std::vector<Permutation>{{1, 2, 3}}));
  EXPECT_EQ(enumerate_class({3, {MarkedPattern::hatted({2, 1}, 1)}}),
            (std::vector<Permutation>{{2, 3, 1}, {3, 1, 2}, {3, 2, 1}}));
  EXPECT_EQ(enumerate_class({0, {MarkedPattern::classical({1, 2})}}), (std::vector<Permutation>{{}}));
  EXPECT_THROW(enumerate_class({-1, {}}), InvalidInput);
}

TEST(Enumerate, CountIsThreadIndependent) {
  const AvoidanceClassSpec spec{8, {MarkedPattern::classical({1, 3, 2}), MarkedPattern::hatted({2, 1, 3}, 2)}};
  const auto serial = count_class(spec, 1);
  EXPECT_EQ(serial, enumerate_class(spec).size());
  for (unsigned t : {2u, 3u, 8u}) EXPECT_EQ(count_class(spec, t), serial);
}

TEST(Growth, Table) {
  const auto rows = growth_table(MarkedPattern::classical({1, 3, 2}), 5);
  std::vector<std::uint64_t> counts;
  for (const auto& r : rows) counts.push_back(r.count);
  EXPECT_EQ(counts, (std::vector<std::uint64_t>{1, 2, 5, 14, 42}));
  EXPECT_FALSE(rows[0].ratio.has_value());
  EXPECT_DOUBLE_EQ(*rows[1].ratio, 2.0);
  EXPECT_TRUE(growth_table(MarkedPattern::classical({1, 2}), 0).empty());
}

TEST(Growth, RunEmbeddingLowerBound) {
  // |S_3n(3 1^ 2)| >= n!: the run embedding is injective into the class.
  const auto pat = MarkedPattern::hatted({3, 1, 2}, 2);
  const std::uint64_t factorial[] = {1, 1, 2, 6};
  for (int n = 1; n <= 3; ++n) {
    EXPECT_GE(count_class({3 * n, {pat}}), factorial[n]);
    for (const auto& p : enumerate_class({n, {}})) {
      EXPECT_TRUE(avoids_hatted(run_embedding(p, 3).values(), pat)) << to_string(p);
    }
  }
}

// Neighbour one larger in the reading direction: increasing runs avoid the
// pattern. Neighbour one smaller: use decreasing runs (the reverse image).
TEST(Growth, RunEmbeddingCasesBySymmetry) {
  for (const char* text : {"^12", "1^2", "^123", "1^23", "12^3", "^231", "2^31", "3^12", "31^2"}) {
    const auto pat = parse_pattern(text);
    for (int n = 1; n <= 4; ++n) {
      for (const auto& p : enumerate_class({n, {}})) {
        EXPECT_TRUE(avoids_hatted(run_embedding(p, static_cast<int>(pat.size())).values(), pat))
            << text << " " << to_string(p);
      }
    }
  }
  for (const char* text : {"2^13", "^213", "3^21", "32^1"}) {
    const auto pat = parse_pattern(text);
    for (int n = 1; n <= 4; ++n) {
      for (const auto& p : enumerate_class({n, {}})) {
        const auto image = reverse(run_embedding(p, static_cast<int>(pat.size())));
        EXPECT_TRUE(avoids_hatted(image.values(), pat)) << text << " " << to_string(p);
      }
    }
  }
}

TEST(Suites, PassAtSmallSizes) {
  for (const auto& name : suite_names()) {
    if (name == "udu" || name == "embed") continue;
    for (const auto& r : run_suite(name, 5)) {
      EXPECT_TRUE(r.passed) << name << ": " << r.name << ": " << r.detail;
      EXPECT_GT(r.cases, 0u) << name;
    }
  }
  EXPECT_THROW(run_suite("nope", 3), InvalidInput);
}

TEST(Suites, UduHoldsForSmallP) {
  EXPECT_TRUE(check_theta_udu_factor(9, 3, 4).passed);
  EXPECT_TRUE(check_theta_udu_factor(4).passed);
}

TEST(Suites, UduFailsFromFiveOn) {
  // 3 2 4 1 5 lies outside S_5(132, 4321^5) yet theta sends it to a path
  // without u d^3 u.
  const auto r = check_theta_udu_factor(5, 5, 5);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.detail.find("3 2 4 1 5"), std::string::npos) << r.detail;
  EXPECT_FALSE(avoids_hatted(Permutation{3, 2, 4, 1, 5}.values(),
                             MarkedPattern::hatted({4, 3, 2, 1, 5}, 4)));
  EXPECT_FALSE(contains_u_dpow_u(theta(Permutation{3, 2, 4, 1, 5}.values()).unlabeled(), 5));
}

TEST(Suites, IncreasingRunsDoNotAvoid2Hat13) {
  // Every increasing run holds a factor a(a+1), which cannot be extended.
  const auto r = check_run_embedding_avoids(MarkedPattern::hatted({2, 1, 3}, 2), 2);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(check_run_embedding_avoids(MarkedPattern::hatted({3, 1, 2}, 2), 3).passed);
}
