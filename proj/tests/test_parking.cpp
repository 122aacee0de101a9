#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treepark/parking.hpp"

using namespace treepark;

namespace {

const RootedTree branching = parse_rooted_tree("3 3 5 5 0");
const RootedTree prime_tree = parse_rooted_tree("2 4 4 5 0");

std::vector<std::pair<int, int>> as_pairs(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : edges) out.push_back({e.child, e.parent});
  return out;
}

}  // namespace

TEST(Park, BranchingTree) {
  const auto out = park(branching, std::vector<int>{2, 2, 1, 4, 2});
  EXPECT_EQ(out.spot_of_driver, (std::vector<vertex>{2, 3, 1, 4, 5}));
  EXPECT_TRUE(out.all_parked());
  EXPECT_TRUE(is_parking_function(branching, std::vector<int>{2, 2, 1, 4, 2}));
}

TEST(Park, PathFailures) {
  const auto path = path_tree(5);
  const auto out = park(path, std::vector<int>{3, 3, 3, 4, 5});
  EXPECT_FALSE(out.all_parked());
  EXPECT_FALSE(is_parking_function(path, std::vector<int>{3, 3, 3, 4, 5}));
  EXPECT_FALSE(is_parking_function(path_tree(2), std::vector<int>{2, 2}));
  EXPECT_TRUE(is_parking_function(path_tree(1), std::vector<int>{1}));
}

TEST(UsedEdges, PathAndBranchingTree) {
  EXPECT_EQ(as_pairs(used_edges(path_tree(5), std::vector<int>{1, 3, 4, 4, 1})),
            (std::vector<std::pair<int, int>>{{4, 5}, {1, 2}}));
  EXPECT_EQ(as_pairs(used_edges(branching, std::vector<int>{2, 2, 1, 4, 2})),
            (std::vector<std::pair<int, int>>{{2, 3}, {3, 5}}));
  EXPECT_TRUE(used_edges(branching, std::vector<int>{1, 2, 3, 4, 5}).empty());
  try {
    used_edges(path_tree(5), std::vector<int>{3, 3, 3, 4, 5});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_a_parking_function);
  }
}

TEST(Prime, Examples) {
  EXPECT_TRUE(is_prime(prime_tree, std::vector<int>{1, 3, 2, 3, 1}));
  EXPECT_FALSE(is_prime(branching, std::vector<int>{2, 2, 1, 4, 2}));
  EXPECT_TRUE(is_prime(path_tree(1), std::vector<int>{1}));
  const auto leaf_root = RootedTree::from_parents({2, 0});
  EXPECT_TRUE(is_parking_distribution(leaf_root, std::vector<int>{1, 1}));
  EXPECT_TRUE(is_prime(leaf_root, std::vector<int>{1, 1}));
}

TEST(Distribution, Examples) {
  EXPECT_TRUE(is_parking_distribution(path_tree(5), std::vector<int>{1, 1, 2, 3, 3}));
  EXPECT_TRUE(is_parking_distribution(path_tree(5), std::vector<int>{1, 1, 3, 4, 4}));
  EXPECT_FALSE(is_parking_distribution(branching, std::vector<int>{2, 2, 1, 4, 2}));
}

TEST(Park, InputErrors) {
  try {
    park(branching, std::vector<int>{1, 2});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::length_mismatch);
  }
  try {
    is_prime(branching, std::vector<int>{1, 2, 3, 4, 6});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::label_out_of_range);
  }
}

// The library's simulation, criterion and used edges against a naive
// simulation on every tree and sequence with n <= 4.
TEST(Park, AgreesWithNaiveSimulation) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& parents : oracle::all_trees(n)) {
      const auto tree = RootedTree::from_parents(parents);
      for (const auto& s : oracle::all_sequences(n)) {
        const auto expected = oracle::park(parents, s);
        const auto got = park(tree, s);
        ASSERT_EQ(got.spot_of_driver, expected.spots) << tree.to_text() << " | " << sequence_to_text(s);
        ASSERT_EQ(is_parking_function(tree, s), oracle::parks(parents, s));
        ASSERT_EQ(is_prime(tree, s), oracle::prime(parents, s));
        if (oracle::parks(parents, s)) {
          ASSERT_EQ(as_pairs(used_edges(tree, s)), expected.used);
        }
      }
    }
  }
}
