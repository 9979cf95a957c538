#include "astck/sorites.hpp"

#include <cstdlib>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

namespace astck {
namespace {

std::vector<HyperNat> chain(std::size_t length) {
  std::vector<HyperNat> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(finite(i));
  return out;
}

const ChainRelation kChain{ChainDistance{}};

TEST(SoritesTest, InR) {
  EXPECT_TRUE(kChain.in_R(2, finite(0), finite(3)));
  EXPECT_FALSE(kChain.in_R(1, finite(0), finite(3)));
  EXPECT_TRUE(kChain.in_R(0, finite(0), finite(0)));
  EXPECT_FALSE(kChain.in_R(0, finite(0), finite(1)));
  EXPECT_FALSE(kChain.in_R(60, finite(0), huge(1, 0)));
}

TEST(SoritesTest, Related) {
  EXPECT_TRUE(kChain.related(finite(0), finite(1'000'000)));
  EXPECT_FALSE(kChain.related(finite(0), huge(1, 0)));
  EXPECT_TRUE(kChain.related(huge(1, 0), huge(1, 0)));
  EXPECT_TRUE(kChain.related(huge(1, -7), huge(1, 9)));
  EXPECT_FALSE(kChain.related(huge(1, 0), huge(2, 0)));
}

TEST(SoritesTest, GalaxyMembership) {
  EXPECT_TRUE(kChain.in_galaxy(finite(0), finite(12345)));
  EXPECT_FALSE(kChain.in_galaxy(finite(0), huge(1, 0)));
  EXPECT_TRUE(kChain.in_galaxy(huge(3, 2), huge(3, 2)));
}

TEST(SoritesTest, UnreachableDistanceIsUnrelated) {
  const auto rel = make_sorites_relation<int>(
      [](int x, int y) -> std::optional<HyperNat> {
        if ((x < 0) != (y < 0)) return std::nullopt;
        return finite(std::abs(x - y));
      });
  EXPECT_TRUE(rel.related(1, 5));
  EXPECT_FALSE(rel.related(-1, 5));
  EXPECT_FALSE(rel.in_R(10, -1, 5));
}

TEST(SoritesTest, DefaultSequenceSatisfiesGeneratingConditions) {
  const GeneratingSequence gen;
  EXPECT_EQ(gen(0), finite(1));
  EXPECT_EQ(gen(10), finite(1024));
  EXPECT_FALSE(gen.first_violation(200).has_value());
}

TEST(SoritesTest, LinearSequenceFailsDoubling) {
  const GeneratingSequence linear([](std::size_t n) { return finite(n + 1); });
  const auto issue = linear.first_violation(10);
  ASSERT_TRUE(issue.has_value());
  EXPECT_EQ(issue->n, 1u);  // 2*t(1) = 4 > t(2) = 3
}

TEST(SoritesTest, SequenceChecksIdentityAndGrowth) {
  EXPECT_TRUE(GeneratingSequence([](std::size_t n) { return finite(BigInt(2) << n); })
                  .first_violation(5)
                  .has_value());
  EXPECT_TRUE(GeneratingSequence([](std::size_t n) { return n < 3 ? finite(BigInt(1) << n) : huge(1); })
                  .first_violation(5)
                  .has_value());
}

// Oracle: plain integer enumeration of the composition law for threshold t.
template <typename Threshold>
std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> composition_violations(
    std::size_t length, std::size_t n_max, Threshold t) {
  std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> out;
  const auto gap = [](std::size_t a, std::size_t b) { return a > b ? a - b : b - a; };
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t x = 0; x < length; ++x) {
      for (std::size_t y = 0; y < length; ++y) {
        for (std::size_t z = 0; z < length; ++z) {
          if (gap(x, y) < t(n) && gap(y, z) < t(n) && !(gap(x, z) < t(n + 1))) {
            out.emplace(n, x, y, z);
          }
        }
      }
    }
  }
  return out;
}

TEST(SoritesTest, GeneratingAxiomsHoldOnLongChain) {
  const auto sample = chain(100);
  ASSERT_TRUE(composition_violations(100, 6, [](std::size_t n) { return std::size_t{1} << n; })
                  .empty());
  const auto report = kChain.verify_generating_axioms(sample, 6);
  EXPECT_TRUE(report.ok()) << report.violations.size() << " violations";
  EXPECT_EQ(report.sample_size, 100u);
}

TEST(SoritesTest, LinearThresholdReportsCompositionViolations) {
  const auto t = [](std::size_t n) { return n + 1; };
  const ChainRelation linear{ChainDistance{}, GeneratingSequence([&](std::size_t n) { return finite(t(n)); })};
  const auto sample = chain(11);
  const auto report = linear.verify_generating_axioms(sample, 3);
  ASSERT_FALSE(report.ok());

  std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> found;
  for (const auto& v : report.violations) {
    ASSERT_EQ(v.kind, AxiomViolation::Kind::kComposition);
    found.emplace(v.n, v.x, v.y, v.z);
  }
  EXPECT_EQ(found, composition_violations(11, 3, t));
  // gaps 2 + 2 = 4 is not below t(3) = 4
  EXPECT_TRUE(found.count({2, 0, 2, 4}));
}

TEST(SoritesTest, EmptySamplePassesVacuously) {
  const auto report = kChain.verify_generating_axioms(std::span<const HyperNat>{}, 6);
  EXPECT_TRUE(report.ok());
}

TEST(SoritesTest, AsymmetricDistanceIsReported) {
  const auto rel = make_sorites_relation<int>([](int x, int y) { return finite(x < y ? 0 : x - y); });
  const std::vector<int> sample{0, 1, 2};
  const auto report = rel.verify_generating_axioms(sample, 1);
  bool symmetry = false, identity = false;
  for (const auto& v : report.violations) {
    symmetry |= v.kind == AxiomViolation::Kind::kSymmetry;
    identity |= v.kind == AxiomViolation::Kind::kZeroNotIdentity;
  }
  EXPECT_TRUE(symmetry);
  EXPECT_TRUE(identity);
}

TEST(SoritesTest, SuccessorKeepsRelatedness) {
  const HyperNat origin;
  for (long long i = 0; i < 2000; ++i) {
    EXPECT_TRUE(!kChain.related(origin, finite(i)) || kChain.related(origin, finite(i + 1)));
  }
  for (long long k = -100; k <= 100; ++k) {
    const HyperNat i = huge(1, k);
    EXPECT_TRUE(!kChain.related(origin, i) || kChain.related(origin, i.successor()));
  }
}

TEST(SoritesTest, PredecessorKeepsUnrelatedness) {
  const HyperNat origin;
  for (long long k = -100; k <= 100; ++k) {
    const HyperNat i = huge(1, k);
    ASSERT_FALSE(kChain.related(origin, i));
    EXPECT_FALSE(kChain.related(origin, i.predecessor()));
  }
}

TEST(SoritesTest, NoCrossingPoint) {
  const HyperNat origin;
  std::vector<HyperNat> candidates;
  for (long long i = 0; i < 100; ++i) candidates.push_back(finite(i));
  for (long long k = -50; k < 50; ++k) candidates.push_back(huge(1, k));
  for (const auto& beta : candidates) {
    EXPECT_FALSE(kChain.related(origin, beta) && !kChain.related(origin, beta.successor()))
        << beta.to_string();
  }
}

TEST(SoritesTest, RelatedIsAnEquivalence) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> tier(0, 2);
  std::uniform_int_distribution<long long> offset(0, 1000);
  std::vector<HyperNat> xs;
  for (int k = 0; k < 40; ++k) {
    const int c = tier(rng);
    xs.push_back(c == 0 ? finite(offset(rng)) : huge(c, offset(rng) - 500));
  }
  for (const auto& x : xs) {
    EXPECT_TRUE(kChain.related(x, x));
    for (const auto& y : xs) {
      EXPECT_EQ(kChain.related(x, y), kChain.related(y, x));
      for (const auto& z : xs) {
        if (kChain.related(x, y) && kChain.related(y, z)) {
          EXPECT_TRUE(kChain.related(x, z));
        }
      }
    }
  }
}

}  // namespace
}  // namespace astck
