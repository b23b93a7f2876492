#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ttree/ttree.hpp"

namespace ttree {
namespace {

class OrderTest : public ::testing::Test {
 protected:
  TTree T(const char* text) const { return parse_ttree(text, types); }
  TypeSystem types{{"A", "B", "C", "D"}};
};

TEST_F(OrderTest, CompareExamples) {
  EXPECT_EQ(compare(T("B"), T("B")), TreeOrdering::kEqual);
  // The B-list is compared first; an empty B-list is shorter.
  EXPECT_EQ(compare(T("A(C)"), T("A(B)")), TreeOrdering::kLess);
  EXPECT_EQ(compare(T("A(B)"), T("A(C)")), TreeOrdering::kGreater);
  EXPECT_EQ(compare(T("A(B,B(D))"), T("A(B(D),B)")), TreeOrdering::kLess);
  EXPECT_EQ(compare(T("A(B(D),B)"), T("A(B,B(D))")), TreeOrdering::kGreater);
  EXPECT_EQ(compare(T("A(B,C,C)"), T("A(B,C)")), TreeOrdering::kGreater);
  EXPECT_EQ(compare(T("A(B,B)"), T("A(B(D),C,C)")), TreeOrdering::kGreater);
}

// A strictly smaller earlier member decides; later members are not consulted.
TEST_F(OrderTest, LexicographicDecisionAtFirstDifference) {
  EXPECT_EQ(compare(T("A(B,B(D,D))"), T("A(B(D),B(D))")), TreeOrdering::kLess);
  EXPECT_TRUE(less(T("A(B,B(D,D))"), T("A(B(D),B(D))")));
  EXPECT_FALSE(less(T("A(B(D),B(D))"), T("A(B,B(D,D))")));
}

TEST_F(OrderTest, LessExamples) {
  EXPECT_TRUE(less(T("A"), T("A(B(D),C)")));
  EXPECT_TRUE(less(T("A"), T("A")));
  EXPECT_FALSE(less(T("A(B)"), T("A")));
}

TEST_F(OrderTest, RootTypeMismatchThrows) {
  EXPECT_THROW(compare(T("A"), T("B")), TypeMismatchError);
  EXPECT_THROW(less(T("A(B)"), T("B")), TypeMismatchError);
  EXPECT_EQ(compare_any(T("A(B)"), T("B")), TreeOrdering::kLess);
  EXPECT_EQ(compare_any(T("C"), T("B(D)")), TreeOrdering::kGreater);
}

TEST_F(OrderTest, CanonicityExamples) {
  EXPECT_TRUE(is_canonical(T("A")));
  EXPECT_FALSE(is_canonical(T("A(B(D),B)")));
  EXPECT_TRUE(is_canonical(T("A(B,B(D))")));
  EXPECT_FALSE(is_canonical(T("A(B(D,D),B(D))")));
  EXPECT_TRUE(is_canonical(T("A(B(D),B(D,D),C,C)")));
}

TEST_F(OrderTest, CanonicalizeExamples) {
  EXPECT_EQ(canonicalize(T("A")), T("A"));
  EXPECT_EQ(canonicalize(T("A(B(D),B)")), T("A(B,B(D))"));
  EXPECT_EQ(canonicalize(T("A(B(D,D),B(D),C)")), T("A(B(D),B(D,D),C)"));
}

TEST_F(OrderTest, IsomorphismExamples) {
  EXPECT_TRUE(isomorphic(T("A(B(D),C)"), T("A(B(D),C)")));
  EXPECT_TRUE(isomorphic(T("A(B(D),B)"), T("A(B,B(D))")));
  EXPECT_FALSE(isomorphic(T("A(B)"), T("A(C)")));
  EXPECT_FALSE(isomorphic(T("A"), T("B")));
  EXPECT_TRUE(isomorphic_oracle(T("B"), T("B")));
  EXPECT_TRUE(isomorphic_oracle(T("A(B(D),B)"), T("A(B,B(D))")));
  EXPECT_FALSE(isomorphic_oracle(T("A(B)"), T("A(C)")));
}

// The literal pseudocode reading "if C is a leaf return True" agrees with the order.
TEST(OrderProperties, LeafIsMinimal) {
  auto p = testing::abcd_problem();
  for (const auto& t : testing::brute_force_trees(p)) EXPECT_TRUE(less(TTree(p.root()), t));
}

TEST(OrderProperties, ChainCorpusLaws) {
  auto trees = testing::brute_force_trees(chain_problem(2, 2));
  ASSERT_EQ(trees.size(), 13u);
  for (const auto& x : trees) {
    for (const auto& y : trees) {
      EXPECT_TRUE(less(x, y) || less(y, x));
      EXPECT_EQ(less(x, y) && less(y, x), x == y);
      EXPECT_EQ(less(x, y), compare(x, y) != TreeOrdering::kGreater);
      EXPECT_EQ(isomorphic(x, y), isomorphic_oracle(x, y));
      for (const auto& z : trees)
        if (less(x, y) && less(y, z)) EXPECT_TRUE(less(x, z));
    }
  }
  int canonical = 0;
  for (const auto& t : trees) canonical += is_canonical(t);
  EXPECT_EQ(canonical, 10);

  // isomorphism classes by the matching oracle
  std::vector<const TTree*> reps;
  for (const auto& t : trees) {
    bool seen = false;
    for (const auto* r : reps) seen = seen || isomorphic_oracle(*r, t);
    if (!seen) reps.push_back(&t);
  }
  EXPECT_EQ(reps.size(), 10u);
}

TEST(OrderProperties, CanonicalMeansMinimalOfPermutationClass) {
  auto p = testing::abcd_problem();
  for (const auto& t : testing::brute_force_trees(p)) {
    auto minimum = testing::brute_force_minimum(t);
    EXPECT_EQ(is_canonical(t), t == minimum) << render_ttree(t, p.types());
    EXPECT_EQ(canonicalize(t), minimum);
  }
}

TEST(OrderProperties, CanonicalizeIsIdempotentAndClassInvariant) {
  auto p = testing::mixed_problem();
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto t = testing::random_tree(p, 10, rng);
    auto c = canonicalize(t);
    EXPECT_TRUE(is_canonical(c));
    EXPECT_EQ(canonicalize(c), c);
    EXPECT_TRUE(isomorphic_oracle(c, t));
    auto variants = testing::permutation_variants(t);
    auto& v = variants[rng() % variants.size()];
    EXPECT_EQ(canonicalize(v), c);
    EXPECT_TRUE(isomorphic(v, t));
  }
}

TEST(OrderProperties, RandomPairsAgreeWithOracle) {
  auto p = testing::mixed_problem();
  std::mt19937 rng(5);
  std::vector<TTree> trees;
  for (int i = 0; i < 120; ++i) trees.push_back(testing::random_tree(p, 7, rng));
  for (const auto& x : trees)
    for (const auto& y : trees) {
      EXPECT_EQ(isomorphic(x, y), isomorphic_oracle(x, y));
      auto xy = compare(x, y), yx = compare(y, x);
      EXPECT_EQ(xy == TreeOrdering::kEqual, yx == TreeOrdering::kEqual);
      EXPECT_EQ(xy == TreeOrdering::kLess, yx == TreeOrdering::kGreater);
    }
}

TEST(OrderProperties, CanonicityCostOnEqualSiblings) {
  // Comparisons on a complete binary tree stay within n * log2(n).
  for (std::size_t n : {127u, 1023u, 8191u}) {
    auto t = canonicalize(testing::complete_tree(n, 2));
    CompareStats stats;
    EXPECT_TRUE(is_canonical(t, &stats));
    EXPECT_LE(static_cast<double>(stats.comparisons), n * std::log2(static_cast<double>(n)));
  }
}

}  // namespace
}  // namespace ttree
