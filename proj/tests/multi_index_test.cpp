#include <gtest/gtest.h>

#include <vector>

#include "hodgeopt/multi_index.hpp"
#include "test_support.hpp"

namespace hodgeopt {
namespace {

TEST(MultiIndex, RankExamples) {
  EXPECT_EQ(rank_multi_index(MultiIndex(3, {1, 2})), 0u);
  EXPECT_EQ(rank_multi_index(MultiIndex(3, {1, 3})), 1u);
  EXPECT_EQ(rank_multi_index(MultiIndex(3, {2, 3})), 2u);
}

TEST(MultiIndex, RankMatchesLexEnumeration) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto subsets = testing::lex_subsets(n, k);
      ASSERT_EQ(subsets.size(), binomial(n, k));
      for (std::size_t pos = 0; pos < subsets.size(); ++pos) {
        const MultiIndex index(n, std::span<const int>(subsets[pos]));
        EXPECT_EQ(rank_multi_index(index), pos);
        EXPECT_EQ(unrank_multi_index(n, k, pos), index);
        EXPECT_EQ(index.indices(), subsets[pos]);
      }
    }
  }
}

TEST(MultiIndex, RoundTripAtMaskLimit) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 40 + static_cast<int>(rng() % 25);
    const int k = static_cast<int>(rng() % (n + 1));
    const std::uint64_t total = binomial(n, k);
    const std::size_t pos = static_cast<std::size_t>(rng() % total);
    const MultiIndex index = unrank_multi_index(n, k, pos);
    EXPECT_EQ(index.grade(), k);
    EXPECT_EQ(rank_multi_index(index), pos);
  }
}

TEST(MultiIndex, RejectsInvalidSets) {
  EXPECT_THROW(MultiIndex(3, {0, 1}), DomainError);
  EXPECT_THROW(MultiIndex(3, {1, 4}), DomainError);
  EXPECT_THROW(MultiIndex(3, {2, 2}), DomainError);
  EXPECT_THROW(MultiIndex(3, {3, 1}), DomainError);
  EXPECT_THROW(MultiIndex(0, {}), DomainError);
  EXPECT_THROW(MultiIndex(65, {}), DomainError);
  EXPECT_THROW(unrank_multi_index(3, 2, 3), DomainError);
  EXPECT_THROW(unrank_multi_index(3, 4, 0), DomainError);
}

TEST(MultiIndex, Complement) {
  EXPECT_EQ(MultiIndex(5, {1, 4}).complement(), MultiIndex(5, {2, 3, 5}));
  EXPECT_EQ(MultiIndex(3, {}).complement(), MultiIndex(3, {1, 2, 3}));
}

TEST(MultiIndex, ShuffleSignMatchesInversionCount) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& subset : testing::lex_subsets(n, k)) {
        const MultiIndex index(n, std::span<const int>(subset));
        const MultiIndex rest = index.complement();
        std::vector<int> perm = index.indices();
        for (int v : rest.indices()) perm.push_back(v);
        EXPECT_EQ(detail::shuffle_sign(index.mask(), rest.mask()), testing::permutation_sign(perm));
      }
    }
  }
}

}  // namespace
}  // namespace hodgeopt
