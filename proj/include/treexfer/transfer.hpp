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

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "treexfer/boundary.hpp"
#include "treexfer/sampling.hpp"

namespace treexfer {

/// A finite simplicial complex of dimension <= 1 on tree vertices.
struct Complex1D {
  std::vector<VertexAddress> vertices;
  std::vector<std::pair<VertexAddress, VertexAddress>> edges;

  std::size_t dimension() const { return edges.empty() ? 0 : 1; }
  /// Union-find over the edge list; independent of how the complex was built.
  bool is_connected() const;
  bool is_acyclic() const;
  bool contains(const VertexAddress& v) const;
};

/// Least N >= 1 with 2^-N <= delta. OutOfRange unless 0 < delta <= 1.
std::size_t compute_N(const mpq_class& delta);

/// sigma_N = sum_{i=1}^{N+1} 2^-i = 1 - 2^-(N+1).
Dyadic sigma_of(std::size_t n);

/// The closed ball of radius sigma_N about x0: every vertex of depth <= N+1.
Complex1D truncation(const TreeSpec& spec, std::size_t n);

/// Nearest-point retraction of T ∪ ∂T onto the closed ball of radius sigma.
Point project(const TreeSpec& spec, const ExtPoint& a, const Dyadic& sigma);

/// H(a, t): the point at distance (1-t)|a| + t min(|a|, sigma) along [x0, a].
ExtPoint homotopy_eval(const TreeSpec& spec, const ExtPoint& a, const Dyadic& t,
                       const Dyadic& sigma);

/// diam{H(a, t) : t in [0, 1]} = max(0, |a| - sigma).
Dyadic track_diameter(const TreeSpec& spec, const ExtPoint& a, const Dyadic& sigma);

struct TrackSample {
  ExtPoint point;
  Point projected;
  Dyadic diameter;
};

struct TransferCertificate {
  mpq_class delta;
  std::size_t n = 0;
  Dyadic sigma;
  Complex1D complex;
  std::vector<TrackSample> samples;
  Dyadic max_track_diameter;
  bool pass = false;
};

/// Builds N, sigma_N, the complex K and the sampled track diameters. The
/// sample set always contains x0, points inside and outside the ball, and (on
/// infinite trees) boundary rays, on top of cfg.count sampler draws.
TransferCertificate certify(const TreeSpec& spec, const mpq_class& delta,
                            const SampleConfig& cfg);

/// Parses "p/q", "m/2^k" or an integer into an exact rational.
mpq_class parse_threshold(std::string_view text);
/// "m/2^k" when the value is dyadic, "p/q" otherwise.
std::string threshold_string(const mpq_class& q);

}  // namespace treexfer
