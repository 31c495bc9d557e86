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

#include "treexfer/dyadic.hpp"
#include "treexfer/tree_model.hpp"

namespace treexfer {

/// A point of the geometric realization of T.
///
/// The point sits on the edge from parent(vertex) to vertex, a fraction
/// `offset` in (0, 1] of the way down. A point located at a vertex always has
/// offset 1, and the root x0 is the empty address with offset 1, so equal
/// points have equal representations.
class Point {
 public:
  Point() : offset_(1) {}  // x0

  static Point root() { return Point(); }
  static Point at_vertex(VertexAddress v) { return Point(std::move(v), Dyadic(1)); }
  /// Throws OutOfRange unless 0 < offset <= 1. An offset of 1 names the vertex.
  static Point on_edge(VertexAddress v, Dyadic offset);

  const VertexAddress& vertex() const { return vertex_; }
  const Dyadic& offset() const { return offset_; }
  bool is_root() const { return vertex_.is_root(); }
  bool is_vertex() const { return offset_ == Dyadic(1); }
  std::size_t depth() const { return vertex_.depth(); }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  Point(VertexAddress v, Dyadic offset) : vertex_(std::move(v)), offset_(std::move(offset)) {}

  VertexAddress vertex_;
  Dyadic offset_;
};

/// Length of the edge into a depth-k vertex: 2^-k.
Dyadic edge_length(std::size_t depth);

/// d(x0, v) for a depth-n vertex: 1 - 2^-n.
Dyadic vertex_norm(std::size_t depth);

/// Throws InvalidAddress if the point's vertex is not in the tree.
void require_point(const TreeSpec& spec, const Point& p);

/// d(p, x0).
Dyadic norm(const TreeSpec& spec, const Point& p);

/// Deepest point shared by the geodesics [x0, p] and [x0, q].
Point meet(const TreeSpec& spec, const Point& p, const Point& q);

Dyadic dist(const TreeSpec& spec, const Point& p, const Point& q);

/// Gromov product based at x0, from the defining formula
/// (p|q) = (|p| + |q| - d(p,q)) / 2.
Dyadic gromov(const TreeSpec& spec, const Point& p, const Point& q);

/// The same product read off as the norm of the branch point; used to
/// cross-check gromov().
Dyadic gromov_via_meet(const TreeSpec& spec, const Point& p, const Point& q);

/// The point on [x0, p] at distance s from x0. OutOfRange unless 0 <= s <= |p|.
Point geodesic_point(const TreeSpec& spec, const Point& p, const Dyadic& s);

/// Depth of the edge carrying the point at distance s in (0, 1) from x0, i.e.
/// the least k with 2^-k <= 1 - s, and the offset of s along that edge.
struct EdgePosition {
  std::size_t depth;
  Dyadic offset;
};
EdgePosition locate_radius(const Dyadic& s);

}  // namespace treexfer
