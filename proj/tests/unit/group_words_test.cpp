#include <random>
#include <set>

#include <gtest/gtest.h>

#include "lambda_gs/errors.hpp"
#include "lambda_gs/group_words.hpp"
#include "test_support.hpp"

using namespace lambda_gs;
using lambda_gs::testing::random_letters;
using lambda_gs::testing::random_word;

namespace {

GroupWord w(std::initializer_list<int> letters) { return reduce(letters, 2); }

std::set<GroupWord> as_set(const std::vector<GroupWord>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Reduce, CancelsAdjacentPairs) {
  EXPECT_TRUE(w({1, 1}).is_identity());
  EXPECT_EQ(w({1, 2, 2}), GroupWord::generator(1));
  EXPECT_EQ(w({2, 1, 1, 2, 3}), GroupWord::generator(3));
  EXPECT_EQ(w({1, 2, 1}).letters(), (std::vector<GroupWord::Letter>{1, 2, 1}));
}

TEST(Reduce, RejectsOutOfRangeGenerators) {
  EXPECT_THROW(w({0}), InvalidGeneratorError);
  EXPECT_THROW(w({1, 4}), InvalidGeneratorError);
  EXPECT_NO_THROW(reduce({4}, 3));
}

TEST(Reduce, IsIdempotent) {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto letters = random_letters(rng, 2, 12);
    const GroupWord once = reduce(letters, 2);
    std::vector<int> again(once.letters().begin(), once.letters().end());
    EXPECT_EQ(reduce(again, 2), once);
    for (std::size_t j = 1; j < once.length(); ++j) {
      EXPECT_NE(once.letters()[j - 1], once.letters()[j]);
    }
  }
}

TEST(Multiply, Examples) {
  EXPECT_EQ(w({1, 2}) * w({2, 3}), w({1, 3}));
  EXPECT_EQ(GroupWord::identity() * w({2}), w({2}));
  EXPECT_TRUE((w({1, 2, 1}) * w({1, 2, 1})).is_identity());
}

TEST(Multiply, MatchesReductionOfConcatenation) {
  std::mt19937 rng(12);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_letters(rng, 2, 8);
    const auto b = random_letters(rng, 2, 8);
    std::vector<int> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_EQ(multiply(reduce(a, 2), reduce(b, 2)), reduce(ab, 2));
  }
}

TEST(Multiply, IsAssociativeWithReversalInverse) {
  std::mt19937 rng(13);
  for (int i = 0; i < 2000; ++i) {
    const auto u = random_word(rng, 2, 8);
    const auto v = random_word(rng, 2, 8);
    const auto x = random_word(rng, 3, 8);
    const auto y = random_word(rng, 3, 8);
    const auto z = random_word(rng, 3, 8);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_TRUE((u * inverse(u)).is_identity());
    EXPECT_TRUE((inverse(v) * v).is_identity());
  }
}

TEST(Parent, DropsLastLetter) {
  EXPECT_EQ(parent(w({1, 2})), w({1}));
  EXPECT_TRUE(parent(w({3})).is_identity());
  EXPECT_THROW(parent(GroupWord::identity()), NoParentError);
}

TEST(Neighbors, Examples) {
  EXPECT_EQ(as_set(neighbors(GroupWord::identity(), 2)),
            (std::set<GroupWord>{w({1}), w({2}), w({3})}));
  EXPECT_EQ(as_set(neighbors(w({1}), 2)),
            (std::set<GroupWord>{GroupWord::identity(), w({1, 2}), w({1, 3})}));
  EXPECT_EQ(as_set(neighbors(w({1, 2}), 2)),
            (std::set<GroupWord>{w({1}), w({1, 2, 1}), w({1, 2, 3})}));
}

TEST(Neighbors, ParentChildStructure) {
  std::mt19937 rng(14);
  for (int k : {1, 2, 3, 4}) {
    for (int i = 0; i < 500; ++i) {
      const auto x = random_word(rng, k, 9);
      const auto nbrs = neighbors(x, k);
      ASSERT_EQ(as_set(nbrs).size(), static_cast<std::size_t>(k + 1));
      int shorter = 0;
      for (const auto& y : nbrs) {
        EXPECT_TRUE(adjacent(x, y));
        shorter += y.length() + 1 == x.length() ? 1 : 0;
      }
      EXPECT_EQ(shorter, x.is_identity() ? 0 : 1);
      EXPECT_EQ(children(x, k).size(),
                static_cast<std::size_t>(x.is_identity() ? k + 1 : k));
      if (!x.is_identity()) {
        const auto up = parent(x);
        EXPECT_TRUE(as_set(nbrs).contains(up));
        EXPECT_TRUE(as_set(neighbors(up, k)).contains(x));
      }
    }
  }
}

TEST(Coset, Examples) {
  const auto A = SubgroupDescriptor::single(2, 1);
  EXPECT_EQ(coset(GroupWord::identity(), A), 0);
  EXPECT_EQ(coset(w({1}), A), 1);
  EXPECT_EQ(coset(w({1, 2, 1}), A), 0);
}

TEST(Coset, MatchesDirectLetterCount) {
  std::mt19937 rng(15);
  const std::vector<int> gens{1, 3};
  const SubgroupDescriptor A(2, gens);
  for (int i = 0; i < 2000; ++i) {
    const auto x = random_word(rng, 2, 10);
    std::vector<int> letters(x.letters().begin(), x.letters().end());
    EXPECT_EQ(coset(x, A), lambda_gs::testing::letter_parity(letters, gens));
  }
}

TEST(Coset, FlipsExactlyOnGeneratorsOfA) {
  std::mt19937 rng(16);
  for (const auto& A : {SubgroupDescriptor(2, {1}), SubgroupDescriptor(2, {2, 3}),
                        SubgroupDescriptor(3, {1, 4})}) {
    for (int i = 0; i < 10000 / 3; ++i) {
      const auto x = random_word(rng, A.order(), 12);
      for (int j = 1; j <= A.order() + 1; ++j) {
        const int flipped = coset(x * GroupWord::generator(j), A);
        EXPECT_EQ(flipped, coset(x, A) ^ (A.contains(j) ? 1 : 0));
      }
    }
  }
}

TEST(Subgroup, RejectsEmptyOrInvalid) {
  EXPECT_THROW(SubgroupDescriptor(2, std::span<const int>{}), InvalidGeneratorError);
  EXPECT_THROW(SubgroupDescriptor(2, {4}), InvalidGeneratorError);
  const SubgroupDescriptor A(2, {3, 1});
  EXPECT_EQ(A.size(), 2);
  EXPECT_EQ(A.generators(), (std::vector<int>{1, 3}));
}

TEST(TranslateLeft, Examples) {
  EXPECT_EQ(translate_left(w({1}), GroupWord::identity()), w({1}));
  EXPECT_TRUE(translate_left(w({1}), w({1})).is_identity());
  EXPECT_EQ(translate_left(w({2, 1}), w({1, 3})), w({2, 3}));
}

TEST(TranslateLeft, PreservesAdjacency) {
  std::mt19937 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const auto g = random_word(rng, 2, 8);
    const auto x = random_word(rng, 2, 8);
    for (const auto& y : neighbors(x, 2)) {
      EXPECT_TRUE(adjacent(translate_left(g, x), translate_left(g, y)));
    }
    const auto far = x * w({1, 2});
    EXPECT_FALSE(adjacent(translate_left(g, x), translate_left(g, far)));
  }
}

TEST(WordText, RoundTrips) {
  std::mt19937 rng(18);
  EXPECT_EQ(to_string(GroupWord::identity()), "e");
  EXPECT_EQ(to_string(w({1, 2, 1})), "1.2.1");
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_word(rng, 2, 10);
    const auto text = to_string(x);
    EXPECT_EQ(parse_word(text, 2), x);
    EXPECT_EQ(to_string(parse_word(text, 2)), text);
  }
}

TEST(WordText, RejectsMalformedInput) {
  for (const char* bad : {"", "1..2", "1.1", "4", "0", "01", "1.", "a", "e.1"}) {
    EXPECT_THROW(parse_word(bad, 2), ParseError) << bad;
  }
}

TEST(Shortlex, OrdersByLengthFirst) {
  EXPECT_LT(GroupWord::identity(), w({3}));
  EXPECT_LT(w({3}), w({1, 2}));
  EXPECT_LT(w({1, 2}), w({1, 3}));
}
