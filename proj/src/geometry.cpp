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

#include "treexfer/geometry.hpp"

#include "treexfer/errors.hpp"

namespace treexfer {

Point Point::on_edge(VertexAddress v, Dyadic offset) {
  if (offset.sign() <= 0 || offset > Dyadic(1)) {
    throw OutOfRange("edge offset " + offset.to_string() + " outside (0, 1]");
  }
  if (v.is_root() && offset != Dyadic(1)) throw OutOfRange("the root has no carrying edge");
  return Point(std::move(v), std::move(offset));
}

Dyadic edge_length(std::size_t depth) { return Dyadic::pow2(-static_cast<std::int64_t>(depth)); }

Dyadic vertex_norm(std::size_t depth) { return Dyadic(1) - edge_length(depth); }

void require_point(const TreeSpec& spec, const Point& p) {
  if (!spec.contains(p.vertex())) throw InvalidAddress("point is not in the tree");
}

Dyadic norm(const TreeSpec& spec, const Point& p) {
  require_point(spec, p);
  if (p.is_root()) return Dyadic(0);
  const std::size_t n = p.depth();
  return vertex_norm(n - 1) + p.offset() * edge_length(n);
}

Point meet(const TreeSpec& spec, const Point& p, const Point& q) {
  require_point(spec, p);
  require_point(spec, q);
  const Word& a = p.vertex().word;
  const Word& b = q.vertex().word;
  const std::size_t l = common_prefix(a, b);
  if (l == a.size() && l == b.size()) return p.offset() <= q.offset() ? p : q;
  // p's carrying edge lies on [x0, q] (or vice versa).
  if (l == a.size()) return p;
  if (l == b.size()) return q;
  return Point::at_vertex(p.vertex().prefix(l));
}

Dyadic dist(const TreeSpec& spec, const Point& p, const Point& q) {
  return norm(spec, p) + norm(spec, q) - norm(spec, meet(spec, p, q)).scaled(1);
}

Dyadic gromov(const TreeSpec& spec, const Point& p, const Point& q) {
  return (norm(spec, p) + norm(spec, q) - dist(spec, p, q)).scaled(-1);
}

Dyadic gromov_via_meet(const TreeSpec& spec, const Point& p, const Point& q) {
  return norm(spec, meet(spec, p, q));
}

EdgePosition locate_radius(const Dyadic& s) {
  if (s.sign() <= 0 || s >= Dyadic(1)) throw OutOfRange("radius outside (0, 1)");
  const Dyadic rest = Dyadic(1) - s;
  const auto k = static_cast<std::size_t>(-rest.floor_log2());
  // s lies in (1 - 2^-(k-1), 1 - 2^-k].
  Dyadic offset = (s - vertex_norm(k - 1)).scaled(static_cast<std::int64_t>(k));
  return {k, std::move(offset)};
}

Point geodesic_point(const TreeSpec& spec, const Point& p, const Dyadic& s) {
  const Dyadic total = norm(spec, p);
  if (s.sign() < 0 || s > total) {
    throw OutOfRange("geodesic parameter " + s.to_string() + " outside [0, " +
                     total.to_string() + "]");
  }
  if (s.is_zero()) return Point::root();
  if (s == total) return p;
  auto [k, offset] = locate_radius(s);
  return Point::on_edge(p.vertex().prefix(k), std::move(offset));
}

}  // namespace treexfer
