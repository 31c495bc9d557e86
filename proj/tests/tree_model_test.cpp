/*
 * Copyright 2026 The treexfer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "treexfer/tree_model.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "test_support.hpp"
#include "treexfer/errors.hpp"

namespace treexfer {
namespace {

using testing::alternating_tree;
using testing::binary_tree;
using testing::path3_tree;

TEST(TreeModelTest, ChildCount) {
  const TreeSpec binary = binary_tree();
  EXPECT_EQ(binary.child_count({}), 2u);
  EXPECT_EQ(binary.child_count({{1, 0, 1, 1, 0}}), 2u);

  const TreeSpec path = path3_tree();
  EXPECT_EQ(path.child_count({{0, 0, 0}}), 0u);
  EXPECT_EQ(path.child_count({{0}}), 1u);

  // a -> 3 children in state b; b -> 1 child in state a.
  const TreeSpec alt = alternating_tree();
  EXPECT_EQ(alt.child_count({}), 3u);
  EXPECT_EQ(alt.child_count({{0}}), 1u);
  EXPECT_EQ(alt.child_count({{2, 0}}), 3u);
  EXPECT_EQ(alt.child_count({{2, 0, 1}}), 1u);
}

TEST(TreeModelTest, ChildCountRejectsInvalidAddress) {
  EXPECT_THROW(binary_tree().child_count({{0, 2}}), InvalidAddress);
  EXPECT_THROW(path3_tree().child_count({{0, 0, 0, 0}}), InvalidAddress);
  EXPECT_THROW(alternating_tree().child_count({{0, 1}}), InvalidAddress);
  EXPECT_FALSE(alternating_tree().contains({{0, 1}}));
  EXPECT_TRUE(alternating_tree().contains({{0, 0, 2}}));
}

TEST(TreeModelTest, ValidateReportsExplicitShape) {
  const auto report = path3_tree().validate();
  EXPECT_TRUE(report.valid());
  EXPECT_EQ(report.vertex_count, 4u);
  EXPECT_EQ(report.max_depth, 3u);
  EXPECT_FALSE(report.infinite);

  const auto binary = binary_tree().validate();
  EXPECT_TRUE(binary.valid());
  EXPECT_TRUE(binary.infinite);
  EXPECT_FALSE(binary.vertex_count.has_value());
}

TEST(TreeModelTest, ValidateFlagsOrphanAddress) {
  ExplicitTree t;
  t.children = {{{}, 2}, {{0, 1}, 1}};
  const TreeSpec spec(std::move(t));
  const auto report = spec.validate();
  ASSERT_FALSE(report.valid());
  EXPECT_NE(report.violations.front().find("not prefix-closed"), std::string::npos);
  EXPECT_THROW(spec.child_count({}), InvalidSpec);
}

TEST(TreeModelTest, ValidateFlagsMissingTransition) {
  AutomatonTree a;
  a.states = {"q0"};
  a.counts = {2};
  a.transitions = {{0}};
  const auto report = TreeSpec(std::move(a)).validate();
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_NE(report.violations.front().find("missing transition for (q0, 1)"), std::string::npos);
}

TEST(TreeModelTest, ValidateFlagsBadTargetsAndTables) {
  AutomatonTree a;
  a.states = {"p", "q"};
  a.counts = {1, 1};
  a.transitions = {{5}, {0, 0}};
  const auto report = TreeSpec(std::move(a)).validate();
  EXPECT_EQ(report.violations.size(), 2u);

  AutomatonTree empty;
  EXPECT_FALSE(TreeSpec(std::move(empty)).validate().valid());
}

TEST(TreeModelTest, VerticesToDepthIsBreadthFirstAndPrefixClosed) {
  const auto vs = binary_tree().vertices_to_depth(3);
  EXPECT_EQ(vs.size(), 15u);
  const std::set<VertexAddress> all(vs.begin(), vs.end());
  for (std::size_t i = 1; i < vs.size(); ++i) {
    EXPECT_LE(vs[i - 1].depth(), vs[i].depth());
    EXPECT_TRUE(all.contains(vs[i].prefix(vs[i].depth() - 1)));
  }
}

// Independent oracle for infiniteness: a cycle among reachable states that
// have at least one child.
bool oracle_infinite(const AutomatonTree& a) {
  std::vector<int> color(a.states.size(), 0);
  std::function<bool(std::size_t)> dfs = [&](std::size_t s) {
    if (a.counts[s] == 0) return false;
    color[s] = 1;
    for (const auto t : a.transitions[s]) {
      if (a.counts[t] == 0) continue;
      if (color[t] == 1 || (color[t] == 0 && dfs(t))) return true;
    }
    color[s] = 2;
    return false;
  };
  return dfs(a.initial);
}

TEST(TreeModelTest, InfiniteIffReachableCycleProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    AutomatonTree a;
    const std::size_t q = 1 + rng() % 5;
    for (std::size_t s = 0; s < q; ++s) {
      a.states.push_back("s" + std::to_string(s));
      const auto c = static_cast<ChildIndex>(rng() % 3);
      a.counts.push_back(c);
      std::vector<std::size_t> row;
      for (ChildIndex i = 0; i < c; ++i) row.push_back(rng() % q);
      a.transitions.push_back(row);
    }
    a.initial = rng() % q;
    const bool expected = oracle_infinite(a);
    const TreeSpec spec(a);
    EXPECT_EQ(spec.is_infinite(), expected) << "trial " << trial;
    EXPECT_EQ(spec.validate().infinite, expected);
  }
}

TEST(TreeModelTest, ExplicitTreesAreFiniteAndPrefixClosedProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const TreeSpec spec = testing::random_explicit_tree(rng, 40);
    ASSERT_TRUE(spec.valid());
    EXPECT_FALSE(spec.is_infinite());
    for (const auto& v : spec.vertices_to_depth(64)) {
      for (std::size_t k = 0; k <= v.depth(); ++k) EXPECT_TRUE(spec.contains(v.prefix(k)));
    }
  }
}

}  // namespace
}  // namespace treexfer
