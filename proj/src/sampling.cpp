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

#include "treexfer/sampling.hpp"

#include <map>

#include "treexfer/errors.hpp"

namespace treexfer {

Sampler::Sampler(const TreeSpec& spec, SampleConfig cfg)
    : spec_(spec), cfg_(std::move(cfg)), rng_(cfg_.seed) {
  spec_.root_node();  // rejects invalid specs up front
}

bool Sampler::coin(const Dyadic& p) {
  return Dyadic::normalize(mpz_class(static_cast<unsigned long>(next())), 64) < p;
}

Dyadic Sampler::unit_dyadic(unsigned max_bits) {
  const unsigned b = static_cast<unsigned>(below(max_bits + 1));
  const std::uint64_t j = below((std::uint64_t{1} << b) + 1);
  return Dyadic::normalize(mpz_class(static_cast<unsigned long>(j)), b);
}

Point Sampler::interior() {
  VertexAddress v;
  NodeId node = spec_.root_node();
  while (v.depth() < cfg_.max_depth && spec_.node_child_count(node) > 0 && below(4) != 0) {
    const auto i = static_cast<ChildIndex>(below(spec_.node_child_count(node)));
    v.word.push_back(i);
    node = spec_.node_child(node, i);
  }
  if (v.is_root() || below(2) == 0) return Point::at_vertex(std::move(v));
  const unsigned b = 1 + static_cast<unsigned>(below(4));
  const std::uint64_t j = 2 * below(std::uint64_t{1} << (b - 1)) + 1;  // odd, < 2^b
  return Point::on_edge(std::move(v),
                        Dyadic::normalize(mpz_class(static_cast<unsigned long>(j)), b));
}

ChildIndex Sampler::live_child(NodeId node) {
  std::vector<ChildIndex> live;
  for (ChildIndex i = 0; i < spec_.node_child_count(node); ++i) {
    if (spec_.node_is_live(spec_.node_child(node, i))) live.push_back(i);
  }
  return live[below(live.size())];
}

std::optional<Ray> Sampler::ray() {
  if (!spec_.is_infinite()) return std::nullopt;
  Ray r;
  NodeId node = spec_.root_node();
  const std::size_t prefix_len = below(cfg_.max_depth + 1);
  for (std::size_t i = 0; i < prefix_len; ++i) {
    const ChildIndex c = live_child(node);
    r.prefix.push_back(c);
    node = spec_.node_child(node, c);
  }

  const std::size_t cycle_len = 1 + below(4);
  for (int attempt = 0; attempt < 8; ++attempt) {
    r.cycle.clear();
    NodeId walk = node;
    for (std::size_t i = 0; i < cycle_len; ++i) {
      const ChildIndex c = live_child(walk);
      r.cycle.push_back(c);
      walk = spec_.node_child(walk, c);
    }
    try {
      return ray_normalize(spec_, r);
    } catch (const InvalidRay&) {
    }
  }

  // Random live walk until a node repeats; the loop closes a valid cycle.
  std::map<NodeId, std::size_t> first_seen;
  Word walk_letters;
  while (!first_seen.contains(node)) {
    first_seen[node] = walk_letters.size();
    const ChildIndex c = live_child(node);
    walk_letters.push_back(c);
    node = spec_.node_child(node, c);
  }
  const std::size_t start = first_seen[node];
  r.prefix.insert(r.prefix.end(), walk_letters.begin(),
                  walk_letters.begin() + static_cast<std::ptrdiff_t>(start));
  r.cycle.assign(walk_letters.begin() + static_cast<std::ptrdiff_t>(start), walk_letters.end());
  return ray_normalize(spec_, r);
}

ExtPoint Sampler::ext_point() {
  if (spec_.is_infinite() && coin(cfg_.boundary_fraction)) return *ray();
  return interior();
}

std::vector<ExtPoint> sample_points(const TreeSpec& spec, const SampleConfig& cfg) {
  Sampler s(spec, cfg);
  std::vector<ExtPoint> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) out.push_back(s.ext_point());
  return out;
}

}  // namespace treexfer
