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

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "treexfer/boundary.hpp"

namespace treexfer {

struct SampleConfig {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t max_depth = 12;
  /// Probability that a drawn ExtPoint is a boundary ray (infinite trees only).
  Dyadic boundary_fraction = Dyadic::pow2(-2);
};

/// Deterministic generator of points, rays and dyadic parameters.
///
/// Uses mt19937_64 (whose output sequence is fixed by the standard) and its
/// own reductions instead of <random> distributions, so a given config yields
/// the same samples on every platform.
class Sampler {
 public:
  Sampler(const TreeSpec& spec, SampleConfig cfg);

  std::uint64_t next() { return rng_(); }
  /// Uniform-ish in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  bool coin(const Dyadic& p);

  /// j / 2^b with b <= max_bits, uniform over the grid, in [0, 1].
  Dyadic unit_dyadic(unsigned max_bits = 6);

  /// Depth continues with probability 3/4 per level up to max_depth; the point
  /// is a vertex half the time, otherwise strictly inside its edge.
  Point interior();

  /// nullopt on a finite tree. Prefix length <= max_depth, cycle length <= 4
  /// where the automaton allows it. Returned in canonical form.
  std::optional<Ray> ray();

  ExtPoint ext_point();

  const SampleConfig& config() const { return cfg_; }

 private:
  ChildIndex live_child(NodeId node);

  const TreeSpec& spec_;
  SampleConfig cfg_;
  std::mt19937_64 rng_;
};

/// cfg.count ExtPoints.
std::vector<ExtPoint> sample_points(const TreeSpec& spec, const SampleConfig& cfg);

}  // namespace treexfer
