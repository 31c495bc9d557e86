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

#include <algorithm>
#include <deque>

#include "treexfer/errors.hpp"

namespace treexfer {

namespace {

std::string word_string(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

}  // namespace

std::size_t common_prefix(std::span<const ChildIndex> a, std::span<const ChildIndex> b) {
  const auto n = std::min(a.size(), b.size());
  return static_cast<std::size_t>(
      std::mismatch(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n), b.begin()).first -
      a.begin());
}

TreeSpec::TreeSpec(ExplicitTree tree) : kind_(std::move(tree)) { build(); }
TreeSpec::TreeSpec(AutomatonTree automaton) : kind_(std::move(automaton)) { build(); }

TreeSpec TreeSpec::regular(ChildIndex arity) {
  AutomatonTree a;
  a.states = {"q"};
  a.counts = {arity};
  a.transitions = {std::vector<std::size_t>(arity, 0)};
  return TreeSpec(std::move(a));
}

void TreeSpec::build() {
  violations_.clear();
  node_counts_.clear();
  node_children_.clear();

  if (const auto* t = std::get_if<ExplicitTree>(&kind_)) {
    // A key is reachable iff its parent key is present with a larger count.
    auto count_of = [&](const Word& w) -> std::optional<ChildIndex> {
      const auto it = t->children.find(w);
      return it == t->children.end() ? std::nullopt : std::optional(it->second);
    };
    for (const auto& [w, c] : t->children) {
      if (w.empty()) continue;
      const Word parent(w.begin(), w.end() - 1);
      const auto pc = count_of(parent);
      if (!pc || *pc <= w.back()) {
        violations_.push_back("not prefix-closed: " + word_string(w) +
                              " has no parent entry admitting child " +
                              std::to_string(w.back()));
      }
    }
    if (!violations_.empty()) return;

    // Breadth-first numbering; leaves not listed in the table get count 0.
    std::deque<std::pair<Word, NodeId>> queue;
    root_ = 0;
    node_counts_.push_back(count_of({}).value_or(0));
    node_children_.emplace_back();
    queue.emplace_back(Word{}, 0);
    while (!queue.empty()) {
      auto [w, id] = std::move(queue.front());
      queue.pop_front();
      explicit_max_depth_ = std::max(explicit_max_depth_, w.size());
      for (ChildIndex i = 0; i < node_counts_[id]; ++i) {
        Word cw = w;
        cw.push_back(i);
        const NodeId cid = node_counts_.size();
        node_counts_.push_back(count_of(cw).value_or(0));
        node_children_.emplace_back();
        node_children_[id].push_back(cid);
        queue.emplace_back(std::move(cw), cid);
      }
    }
  } else {
    const auto& a = std::get<AutomatonTree>(kind_);
    const std::size_t q = a.states.size();
    if (q == 0) violations_.push_back("automaton has no states");
    if (a.counts.size() != q) violations_.push_back("counts table size differs from state count");
    if (a.transitions.size() != q) {
      violations_.push_back("transition table size differs from state count");
    }
    if (q > 0 && a.initial >= q) violations_.push_back("initial state out of range");
    for (std::size_t s = 0; s < std::min({q, a.counts.size(), a.transitions.size()}); ++s) {
      const auto& row = a.transitions[s];
      for (std::size_t i = row.size(); i < a.counts[s]; ++i) {
        violations_.push_back("missing transition for (" + a.states[s] + ", " +
                              std::to_string(i) + ")");
      }
      if (row.size() > a.counts[s]) {
        violations_.push_back("transitions for " + a.states[s] + " beyond its child count " +
                              std::to_string(a.counts[s]));
      }
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] >= q) {
          violations_.push_back("transition (" + a.states[s] + ", " + std::to_string(i) +
                                ") targets an unknown state");
        }
      }
    }
    if (!violations_.empty()) return;
    root_ = a.initial;
    node_counts_ = a.counts;
    node_children_.assign(a.transitions.begin(), a.transitions.end());
  }

  // Live nodes: those from which an infinite path exists. A node is dead iff
  // all of its children are dead; iterate to the greatest fixed point.
  const std::size_t n = node_counts_.size();
  live_.assign(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!live_[v]) continue;
      const bool any_live = std::any_of(node_children_[v].begin(), node_children_[v].end(),
                                        [&](NodeId c) { return live_[c]; });
      if (!any_live) {
        live_[v] = false;
        changed = true;
      }
    }
  }
  valid_ = true;
}

ValidationReport TreeSpec::validate() const {
  ValidationReport r;
  r.violations = violations_;
  if (valid_) {
    r.infinite = is_infinite();
    if (is_explicit()) {
      r.vertex_count = node_counts_.size();
      r.max_depth = explicit_max_depth_;
    }
  }
  return r;
}

void TreeSpec::require_valid() const {
  if (!valid_) {
    throw InvalidSpec("tree spec is invalid: " +
                      (violations_.empty() ? std::string("unknown") : violations_.front()));
  }
}

NodeId TreeSpec::root_node() const {
  require_valid();
  return root_;
}

ChildIndex TreeSpec::node_child_count(NodeId n) const { return node_counts_.at(n); }

NodeId TreeSpec::node_child(NodeId n, ChildIndex i) const { return node_children_.at(n).at(i); }

bool TreeSpec::node_is_live(NodeId n) const {
  require_valid();
  return live_.at(n);
}

NodeId TreeSpec::node_at(std::span<const ChildIndex> word) const {
  NodeId n = root_node();
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p] >= node_counts_[n]) {
      throw InvalidAddress("index " + std::to_string(word[p]) + " at position " +
                           std::to_string(p) + " exceeds child count " +
                           std::to_string(node_counts_[n]));
    }
    n = node_children_[n][word[p]];
  }
  return n;
}

ChildIndex TreeSpec::child_count(const VertexAddress& v) const {
  return node_counts_[node_at(v.word)];
}

bool TreeSpec::contains(const VertexAddress& v) const {
  require_valid();
  NodeId n = root_;
  for (const ChildIndex i : v.word) {
    if (i >= node_counts_[n]) return false;
    n = node_children_[n][i];
  }
  return true;
}

std::vector<VertexAddress> TreeSpec::vertices_to_depth(std::size_t max_depth) const {
  std::vector<VertexAddress> out;
  std::vector<std::pair<VertexAddress, NodeId>> level{{VertexAddress{}, root_node()}};
  for (std::size_t d = 0; !level.empty(); ++d) {
    std::vector<std::pair<VertexAddress, NodeId>> next;
    for (auto& [addr, node] : level) {
      if (d < max_depth) {
        for (ChildIndex i = 0; i < node_counts_[node]; ++i) {
          next.emplace_back(addr.child(i), node_children_[node][i]);
        }
      }
      out.push_back(std::move(addr));
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace treexfer
