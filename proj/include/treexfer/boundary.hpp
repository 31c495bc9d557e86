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

#include <optional>
#include <variant>

#include "treexfer/geometry.hpp"

namespace treexfer {

/// Eventually periodic geodesic ray from x0: prefix, cycle, cycle, ...
struct Ray {
  Word prefix;
  Word cycle;

  /// Letter at position i of the infinite word.
  ChildIndex letter(std::size_t i) const {
    return i < prefix.size() ? prefix[i] : cycle[(i - prefix.size()) % cycle.size()];
  }
  /// First n letters.
  Word head(std::size_t n) const;

  friend bool operator==(const Ray&, const Ray&) = default;
};

/// A point of the compactification: interior point or boundary ray.
using ExtPoint = std::variant<Point, Ray>;

inline bool is_boundary(const ExtPoint& a) { return std::holds_alternative<Ray>(a); }

/// Throws InvalidRay if the ray leaves the tree or dies in a leaf.
void require_ray(const TreeSpec& spec, const Ray& r);

/// Canonical form: primitive cycle, shortest prefix. Equal boundary points
/// have equal canonical forms.
Ray ray_normalize(const TreeSpec& spec, const Ray& r);

/// Same as ray_normalize without consulting a tree.
Ray canonical_ray(Ray r);

/// Depth of the deepest common vertex of two rays; nullopt when they are the
/// same boundary point.
std::optional<std::size_t> lcp_depth(const TreeSpec& spec, const Ray& r, const Ray& s);

/// The vertex of depth n on the ray.
VertexAddress ray_vertex(const Ray& r, std::size_t n);

/// Validates an ExtPoint and returns it in canonical form.
ExtPoint canonical(const TreeSpec& spec, const ExtPoint& a);

/// d(a, x0): 1 on the boundary.
Dyadic ext_norm(const TreeSpec& spec, const ExtPoint& a);

/// Extended Gromov product (a|b) on T ∪ ∂T.
Dyadic gromov_ext(const TreeSpec& spec, const ExtPoint& a, const ExtPoint& b);

/// The metric on T ∪ ∂T: |a| + |b| - 2 (a|b).
Dyadic dist_bar(const TreeSpec& spec, const ExtPoint& a, const ExtPoint& b);

/// The point of [x0, a] at distance s from x0, for 0 <= s <= |a|. For a ray
/// and s = 1 this is the ray itself.
ExtPoint ext_geodesic_point(const TreeSpec& spec, const ExtPoint& a, const Dyadic& s);

/// Equality as elements of T ∪ ∂T (canonical comparison).
bool same_point(const TreeSpec& spec, const ExtPoint& a, const ExtPoint& b);

}  // namespace treexfer
