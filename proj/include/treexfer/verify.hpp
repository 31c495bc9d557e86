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

#include <functional>
#include <string>
#include <vector>

#include "treexfer/boundary.hpp"
#include "treexfer/sampling.hpp"

namespace treexfer {

struct Failure {
  std::size_t sample_index = 0;
  std::string check;
  std::vector<ExtPoint> witnesses;
  /// Exact values involved, rendered as m/2^k.
  std::vector<std::pair<std::string, std::string>> values;
};

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<Failure> failures;

  bool pass() const { return failures.empty(); }
};

/// The formulas the suites exercise. Tests swap in perturbed versions to
/// confirm each suite notices the change.
struct Hooks {
  std::function<Dyadic(const TreeSpec&, const ExtPoint&, const ExtPoint&)> dist = dist_bar;
  std::function<Dyadic(const TreeSpec&, const ExtPoint&, const ExtPoint&)> gromov = gromov_ext;
  std::function<ExtPoint(const TreeSpec&, const ExtPoint&, const Dyadic&)> geodesic =
      ext_geodesic_point;
};

/// cfg.count triples: non-negativity, identity of indiscernibles, symmetry and
/// the triangle inequality for dist_bar.
SuiteReport check_metric_axioms(const TreeSpec& spec, const SampleConfig& cfg,
                                const Hooks& hooks = {});

/// (x|y) >= min{(x|z), (z|y)} on cfg.count triples, all three rotations.
SuiteReport check_hyperbolicity(const TreeSpec& spec, const SampleConfig& cfg,
                                const Hooks& hooks = {});

/// On cfg.count ray pairs: d(ray, x0) = 1, and d = 2 exactly when the first
/// letters differ. Throws NoBoundary on a finite tree.
SuiteReport check_boundary_proposition(const TreeSpec& spec, const SampleConfig& cfg,
                                       const Hooks& hooks = {});

/// The finite eps-net: vertices of depth <= D plus a grid of spacing <= eps on
/// every edge of depth <= D, where 2^-D <= eps.
struct Net {
  Dyadic eps;
  std::size_t depth = 0;

  /// Grid spacing, as a fraction of the edge, on an edge into depth k.
  Dyadic offset_step(std::size_t k) const;
  bool contains(const Point& p) const;
  /// Net point nearest to a; it lies on [x0, a] or on the edge carrying a.
  Point witness(const TreeSpec& spec, const ExtPoint& a) const;
  /// Every net point; for small nets and cross-checks.
  std::vector<Point> enumerate(const TreeSpec& spec) const;
};

Net make_net(const Dyadic& eps);

/// Every one of cfg.count samples lies within eps of a net point.
SuiteReport check_net(const TreeSpec& spec, const Dyadic& eps, const SampleConfig& cfg,
                      const Hooks& hooks = {});

/// The contraction C(a, s) = point at distance s|a| on [x0, a]: endpoints,
/// d(C(a,s), C(a,s')) = |s - s'| |a|, and balls about x0 map into themselves.
SuiteReport check_contraction(const TreeSpec& spec, const SampleConfig& cfg,
                              const Hooks& hooks = {});

/// Suite names accepted by run_suite: metric, hyperbolicity, boundary, net,
/// contraction. `eps` only matters for the net suite.
SuiteReport run_suite(const std::string& name, const TreeSpec& spec, const SampleConfig& cfg,
                      const Dyadic& eps = Dyadic::pow2(-4));

}  // namespace treexfer
