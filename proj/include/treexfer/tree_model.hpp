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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace treexfer {

using ChildIndex = std::uint32_t;
using Word = std::vector<ChildIndex>;

/// Path of child indices from the root x0; the empty word is x0 itself.
struct VertexAddress {
  Word word;

  std::size_t depth() const { return word.size(); }
  bool is_root() const { return word.empty(); }
  VertexAddress prefix(std::size_t n) const {
    return VertexAddress{Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(n))};
  }
  VertexAddress child(ChildIndex i) const {
    VertexAddress c = *this;
    c.word.push_back(i);
    return c;
  }

  friend auto operator<=>(const VertexAddress&, const VertexAddress&) = default;
};

/// Length of the longest common prefix of two words.
std::size_t common_prefix(std::span<const ChildIndex> a, std::span<const ChildIndex> b);

/// A finite tree given by its children table. Addresses absent from the
/// table are leaves.
struct ExplicitTree {
  std::map<Word, ChildIndex> children;
};

/// An infinite (or finite) tree unfolded from a finite automaton: the root is
/// in state `initial`, a vertex in state q has counts[q] children and child i
/// is in state transitions[q][i].
struct AutomatonTree {
  std::vector<std::string> states;
  std::size_t initial = 0;
  std::vector<ChildIndex> counts;
  std::vector<std::vector<std::size_t>> transitions;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::optional<std::size_t> vertex_count;  // explicit trees only
  std::optional<std::size_t> max_depth;     // explicit trees only
  bool infinite = false;

  bool valid() const { return violations.empty(); }
};

/// Identifies a vertex up to isomorphism of the subtree below it: the
/// automaton state for programmatic trees, a vertex slot for explicit ones.
/// Walking the tree only needs node ids, so both kinds share one code path.
using NodeId = std::size_t;

class TreeSpec {
 public:
  explicit TreeSpec(ExplicitTree tree);
  explicit TreeSpec(AutomatonTree automaton);

  /// One state, `arity` children everywhere. arity 1 is the single ray.
  static TreeSpec regular(ChildIndex arity);

  ValidationReport validate() const;
  bool valid() const { return valid_; }

  bool is_explicit() const { return std::holds_alternative<ExplicitTree>(kind_); }
  const std::variant<ExplicitTree, AutomatonTree>& kind() const { return kind_; }

  /// Throws InvalidSpec for an invalid spec, InvalidAddress if some index
  /// along the word is out of range.
  ChildIndex child_count(const VertexAddress& v) const;
  bool contains(const VertexAddress& v) const;

  // Node-level walking.
  NodeId root_node() const;
  ChildIndex node_child_count(NodeId n) const;
  NodeId node_child(NodeId n, ChildIndex i) const;
  std::size_t node_table_size() const { return node_counts_.size(); }
  /// Node reached from the root along `word`; InvalidAddress if it leaves the tree.
  NodeId node_at(std::span<const ChildIndex> word) const;

  /// True iff the subtree below the node contains an infinite path.
  bool node_is_live(NodeId n) const;
  bool is_infinite() const { return node_is_live(root_node()); }

  /// Every vertex of depth <= max_depth in breadth-first, index order.
  std::vector<VertexAddress> vertices_to_depth(std::size_t max_depth) const;

 private:
  void build();
  void require_valid() const;

  std::variant<ExplicitTree, AutomatonTree> kind_;
  std::vector<std::string> violations_;
  bool valid_ = false;
  std::size_t explicit_max_depth_ = 0;

  // Unified node table: counts and child ids per node.
  NodeId root_ = 0;
  std::vector<ChildIndex> node_counts_;
  std::vector<std::vector<NodeId>> node_children_;
  std::vector<bool> live_;
};

}  // namespace treexfer
