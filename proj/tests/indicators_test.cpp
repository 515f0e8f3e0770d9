#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scindex/errors.hpp"
#include "scindex/indicators.hpp"

namespace scindex {
namespace {

using testing::brute_g;
using testing::brute_h;
using testing::direct_entropy;
using testing::rel_close;

const CitationVector kSmall{4, 2, 1};
const CitationVector kUniform{3, 3, 3};
const CitationVector kZero{0, 0, 0};

TEST(CitationVector, CanonicalNonIncreasingOrder) {
  const CitationVector v{1, 4, 2};
  EXPECT_EQ(v, kSmall);
  EXPECT_TRUE(std::is_sorted(v.counts().begin(), v.counts().end(), std::greater<>{}));
  EXPECT_THROW(CitationVector({(std::uint64_t{1} << 53) + 1}), DomainError);
}

TEST(Indicators, EmptyPortfolioRejectedEverywhere) {
  const CitationVector empty;
  for (const auto& d : indicator_registry()) {
    EXPECT_THROW(d.compute(empty), EmptyPortfolioError) << d.name;
  }
  EXPECT_THROW(compute_all(empty), EmptyPortfolioError);
}

TEST(PaperCount, Examples) {
  EXPECT_EQ(paper_count(kSmall).magnitude(), 3);
  EXPECT_EQ(paper_count(kZero).magnitude(), 3);
  EXPECT_EQ(paper_count(CitationVector(std::vector<std::uint64_t>(142, 1))).magnitude(), 142);
  EXPECT_EQ(paper_count(kSmall).dim(), Dimension::papers(1));
}

TEST(TotalCitations, Examples) {
  EXPECT_EQ(total_citations(kSmall).magnitude(), 7);
  EXPECT_EQ(total_citations(kSmall).dim(), Dimension::papers(2));
  EXPECT_EQ(total_citations(kZero).magnitude(), 0);
}

TEST(MeanImpact, Examples) {
  EXPECT_DOUBLE_EQ(mean_impact(kSmall).magnitude(), 7.0 / 3.0);
  EXPECT_EQ(mean_impact(kUniform).magnitude(), 3);
}

TEST(HIndex, Examples) {
  EXPECT_EQ(h_index(CitationVector{10, 5, 3, 2, 1}).magnitude(), 3);
  EXPECT_EQ(h_index(CitationVector{0, 0}).magnitude(), 0);
  EXPECT_EQ(h_index(kUniform).magnitude(), 3);
}

TEST(GIndex, Examples) {
  // cumulative 10,15,18,20,21 against 1,4,9,16,25
  EXPECT_EQ(g_index(CitationVector{10, 5, 3, 2, 1}).magnitude(), 4);
  EXPECT_EQ(g_index(CitationVector{0, 0}).magnitude(), 0);
  EXPECT_EQ(g_index(CitationVector{100}).magnitude(), 1);
}

TEST(Energy, Examples) {
  EXPECT_EQ(energy(kSmall).magnitude(), 21);
  EXPECT_EQ(energy(kUniform).magnitude(), 27);
  EXPECT_EQ(energy(kZero).magnitude(), 0);
  EXPECT_EQ(energy(kSmall).dim(), Dimension::papers(3));
}

TEST(Exergy, Examples) {
  EXPECT_DOUBLE_EQ(exergy(kSmall).magnitude(), 49.0 / 3.0);
  EXPECT_EQ(exergy(kUniform).magnitude(), 27);
  EXPECT_EQ(exergy(kZero).magnitude(), 0);
}

TEST(EntropyTerm, Examples) {
  EXPECT_DOUBLE_EQ(entropy_term(kSmall).magnitude(), 14.0 / 3.0);
  EXPECT_EQ(entropy_term(kUniform).magnitude(), 0);
  EXPECT_EQ(entropy_term(CitationVector{5}).magnitude(), 0);
}

TEST(Consistency, Examples) {
  EXPECT_DOUBLE_EQ(consistency(kSmall).magnitude(), 7.0 / 9.0);
  EXPECT_EQ(consistency(kUniform).magnitude(), 1);
  EXPECT_EQ(consistency(kZero).magnitude(), 1);  // zero vector convention
  EXPECT_TRUE(consistency(kSmall).dim().is_dimensionless());
}

TEST(ZIndex, Examples) {
  EXPECT_NEAR(z_index(kSmall).magnitude(), 7.0 / 3.0, 1e-14);
  EXPECT_NEAR(z_index(kUniform).magnitude(), 3.0, 1e-14);
  EXPECT_EQ(z_index(kZero).magnitude(), 0);
}

TEST(EuclideanIndex, Examples) {
  EXPECT_DOUBLE_EQ(euclidean_index(kSmall).magnitude(), std::sqrt(21.0));
  EXPECT_DOUBLE_EQ(euclidean_index(kUniform).magnitude(), std::sqrt(27.0));
  EXPECT_EQ(euclidean_index(kSmall).dim(), Dimension::papers(3, 2));
  EXPECT_EQ(euclidean_index(kSmall).dim().to_string(), "[P^3/2]");
}

TEST(ComputeAll, SmallVector) {
  const IndicatorReport r = compute_all(kSmall);
  ASSERT_EQ(r.size(), 11u);
  EXPECT_EQ(r.at("P").magnitude(), 3);
  EXPECT_EQ(r.at("C").magnitude(), 7);
  EXPECT_NEAR(r.at("i").magnitude(), 2.3333, 1e-4);
  EXPECT_EQ(r.at("h").magnitude(), 2);
  EXPECT_EQ(r.at("g").magnitude(), 2);
  EXPECT_EQ(r.at("E").magnitude(), 21);
  EXPECT_NEAR(r.at("X").magnitude(), 16.3333, 1e-4);
  EXPECT_NEAR(r.at("S").magnitude(), 4.6667, 1e-4);
  EXPECT_NEAR(r.at("eta").magnitude(), 0.7778, 1e-4);
  EXPECT_NEAR(r.at("z").magnitude(), 2.3333, 1e-4);
  EXPECT_NEAR(r.at("i_E").magnitude(), 4.5826, 1e-4);
}

TEST(ComputeAll, ZeroAndSinglePaper) {
  const IndicatorReport zero = compute_all(kZero);
  for (const auto& [name, q] : zero) {
    const double expected = name == "P" ? 3 : (name == "eta" ? 1 : 0);
    EXPECT_EQ(q.magnitude(), expected) << name;
  }
  const IndicatorReport one = compute_all(CitationVector{5});
  EXPECT_EQ(one.at("P").magnitude(), 1);
  EXPECT_EQ(one.at("C").magnitude(), 5);
  EXPECT_EQ(one.at("i").magnitude(), 5);
  EXPECT_EQ(one.at("h").magnitude(), 1);
  EXPECT_EQ(one.at("g").magnitude(), 1);
  EXPECT_EQ(one.at("E").magnitude(), 25);
  EXPECT_EQ(one.at("X").magnitude(), 25);
  EXPECT_EQ(one.at("S").magnitude(), 0);
  EXPECT_EQ(one.at("eta").magnitude(), 1);
  EXPECT_NEAR(one.at("z").magnitude(), std::cbrt(25.0), 1e-12);
  EXPECT_EQ(one.at("i_E").magnitude(), 5);
}

TEST(Registry, NamesAndSymbols) {
  std::vector<std::string> names;
  for (const auto& d : indicator_registry()) names.emplace_back(d.name);
  EXPECT_EQ(names, (std::vector<std::string>{"P", "C", "i", "h", "g", "X", "E", "S", "eta", "z", "i_E"}));
  EXPECT_THROW(find_indicator("hg"), UnknownIndicatorError);
  EXPECT_EQ(indicator_symbols().at("i_E"), Dimension::papers(3, 2));
}

TEST(HGOracle, ExhaustiveSmallVectors) {
  std::size_t checked = 0;
  testing::for_each_vector(6, 6, [&](const std::vector<std::uint64_t>& v) {
    const CitationVector cv{v};
    ASSERT_EQ(h_index(cv).magnitude(), static_cast<double>(brute_h(v)));
    ASSERT_EQ(g_index(cv).magnitude(), static_cast<double>(brute_g(v)));
    ++checked;
  });
  EXPECT_EQ(checked, 137256u);  // Σ_{n=1..6} 7^n
}

TEST(HGOracle, RandomLargerVectors) {
  std::mt19937_64 rng(99);
  for (int n = 0; n < 10000; ++n) {
    const auto v = testing::random_counts(rng, 200, 10000);
    const CitationVector cv{v};
    ASSERT_EQ(h_index(cv).magnitude(), static_cast<double>(brute_h(v)));
    ASSERT_EQ(g_index(cv).magnitude(), static_cast<double>(brute_g(v)));
  }
}

class IndicatorProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{12345};
};

TEST_F(IndicatorProperties, PermutationInvariance) {
  for (int n = 0; n < 2000; ++n) {
    auto v = testing::random_counts(rng, 60, 500);
    const IndicatorReport base = compute_all(CitationVector{v});
    std::shuffle(v.begin(), v.end(), rng);
    const IndicatorReport shuffled = compute_all(CitationVector{v});
    for (const auto& [name, q] : base) ASSERT_EQ(q.magnitude(), shuffled.at(name).magnitude()) << name;
  }
}

TEST_F(IndicatorProperties, ConsistencyEntropyAndOrdering) {
  for (int n = 0; n < 10000; ++n) {
    const auto v = testing::random_counts(rng, 100, n % 2 ? 5 : 5000);
    const IndicatorReport r = compute_all(CitationVector{v});
    const double eta = r.at("eta").magnitude();
    const double S = r.at("S").magnitude();
    const bool uniform = std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>{}) == v.end();
    ASSERT_GT(eta, 0.0);
    ASSERT_LE(eta, 1.0);
    ASSERT_GE(S, 0.0);
    ASSERT_LE(r.at("X").magnitude(), r.at("E").magnitude());
    ASSERT_EQ(S == 0.0, eta == 1.0);
    ASSERT_EQ(eta == 1.0, uniform);
    ASSERT_TRUE(rel_close(S, direct_entropy(v), 1e-9));
    ASSERT_TRUE(rel_close(S, r.at("E").magnitude() - r.at("X").magnitude(), 1e-9));

    const double h = r.at("h").magnitude();
    const double g = r.at("g").magnitude();
    const double cmax = static_cast<double>(*std::max_element(v.begin(), v.end()));
    ASSERT_LE(h, std::min(r.at("P").magnitude(), cmax));
    ASSERT_GE(g, h);
    ASSERT_LE(g, r.at("P").magnitude());
  }
}

TEST_F(IndicatorProperties, ZCubedTimesEnergyIsExergySquared) {
  for (int n = 0; n < 10000; ++n) {
    const auto v = testing::random_nonzero_counts(rng, 100, 5000);
    const IndicatorReport r = compute_all(CitationVector{v});
    const double z = r.at("z").magnitude();
    const double X = r.at("X").magnitude();
    ASSERT_TRUE(rel_close(z * z * z * r.at("E").magnitude(), X * X, 1e-9));
  }
}

TEST_F(IndicatorProperties, IndicatorLadder) {
  for (int n = 0; n < 10000; ++n) {
    const auto v = testing::random_counts(rng, 100, 5000);
    const IndicatorReport r = compute_all(CitationVector{v});
    const double i = r.at("i").magnitude();
    ASSERT_TRUE(rel_close(r.at("C").magnitude(), i * r.at("P").magnitude(), 1e-12));
    ASSERT_TRUE(rel_close(r.at("X").magnitude(), i * r.at("C").magnitude(), 1e-12));
  }
}

TEST_F(IndicatorProperties, DimensionAudit) {
  for (int n = 0; n < 1000; ++n) {
    const CitationVector v{testing::random_counts(rng, 50, 1000)};
    for (const auto& d : indicator_registry()) ASSERT_EQ(d.compute(v).dim(), d.declared_dim) << d.name;
  }
}

}  // namespace
}  // namespace scindex
