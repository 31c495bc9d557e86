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

#include "treexfer/boundary.hpp"

#include <algorithm>
#include <numeric>

#include "treexfer/errors.hpp"

namespace treexfer {

Word Ray::head(std::size_t n) const {
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.push_back(letter(i));
  return w;
}

void require_ray(const TreeSpec& spec, const Ray& r) {
  if (r.cycle.empty()) throw InvalidRay("ray cycle is empty");
  NodeId node = 0;
  try {
    node = spec.node_at(r.prefix);
  } catch (const InvalidAddress& e) {
    throw InvalidRay(std::string("ray prefix leaves the tree: ") + e.what());
  }
  // The node reached after each full pass over the cycle is a function of the
  // node before it, so the sequence repeats within node_table_size() passes.
  // Once it repeats every later pass retraces a checked one.
  std::vector<bool> seen(spec.node_table_size(), false);
  while (!seen[node]) {
    seen[node] = true;
    for (const ChildIndex i : r.cycle) {
      if (i >= spec.node_child_count(node)) {
        throw InvalidRay(spec.node_child_count(node) == 0
                             ? "ray dies in a leaf"
                             : "ray index " + std::to_string(i) + " exceeds child count");
      }
      node = spec.node_child(node, i);
    }
  }
}

Ray canonical_ray(Ray r) {
  if (r.cycle.empty()) throw InvalidRay("ray cycle is empty");
  const std::size_t len = r.cycle.size();
  for (std::size_t d = 1; d <= len; ++d) {
    if (len % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < len && periodic; ++i) periodic = r.cycle[i] == r.cycle[i - d];
    if (periodic) {
      r.cycle.resize(d);
      break;
    }
  }
  while (!r.prefix.empty() && r.prefix.back() == r.cycle.back()) {
    r.prefix.pop_back();
    std::rotate(r.cycle.rbegin(), r.cycle.rbegin() + 1, r.cycle.rend());
  }
  return r;
}

Ray ray_normalize(const TreeSpec& spec, const Ray& r) {
  require_ray(spec, r);
  return canonical_ray(r);
}

std::optional<std::size_t> lcp_depth(const TreeSpec& spec, const Ray& r, const Ray& s) {
  require_ray(spec, r);
  require_ray(spec, s);
  const std::size_t bound =
      r.prefix.size() + s.prefix.size() + std::lcm(r.cycle.size(), s.cycle.size());
  for (std::size_t i = 0; i < bound; ++i) {
    if (r.letter(i) != s.letter(i)) return i;
  }
  return std::nullopt;
}

VertexAddress ray_vertex(const Ray& r, std::size_t n) { return VertexAddress{r.head(n)}; }

ExtPoint canonical(const TreeSpec& spec, const ExtPoint& a) {
  if (const auto* p = std::get_if<Point>(&a)) {
    require_point(spec, *p);
    return *p;
  }
  return ray_normalize(spec, std::get<Ray>(a));
}

Dyadic ext_norm(const TreeSpec& spec, const ExtPoint& a) {
  if (const auto* p = std::get_if<Point>(&a)) return norm(spec, *p);
  require_ray(spec, std::get<Ray>(a));
  return Dyadic(1);
}

namespace {

// Deepest point of [x0, p] on the ray.
Dyadic ray_point_product(const TreeSpec& spec, const Ray& r, const Point& p) {
  require_ray(spec, r);
  const Word& a = p.vertex().word;
  std::size_t l = 0;
  while (l < a.size() && a[l] == r.letter(l)) ++l;
  if (l == a.size()) return norm(spec, p);
  require_point(spec, p);
  return vertex_norm(l);
}

}  // namespace

Dyadic gromov_ext(const TreeSpec& spec, const ExtPoint& a, const ExtPoint& b) {
  const auto* ra = std::get_if<Ray>(&a);
  const auto* rb = std::get_if<Ray>(&b);
  if (ra && rb) {
    const auto m = lcp_depth(spec, *ra, *rb);
    return m ? vertex_norm(*m) : Dyadic(1);
  }
  if (ra) return ray_point_product(spec, *ra, std::get<Point>(b));
  if (rb) return ray_point_product(spec, *rb, std::get<Point>(a));
  return gromov(spec, std::get<Point>(a), std::get<Point>(b));
}

Dyadic dist_bar(const TreeSpec& spec, const ExtPoint& a, const ExtPoint& b) {
  return ext_norm(spec, a) + ext_norm(spec, b) - gromov_ext(spec, a, b).scaled(1);
}

ExtPoint ext_geodesic_point(const TreeSpec& spec, const ExtPoint& a, const Dyadic& s) {
  if (const auto* p = std::get_if<Point>(&a)) return geodesic_point(spec, *p, s);
  const Ray& r = std::get<Ray>(a);
  require_ray(spec, r);
  if (s.sign() < 0 || s > Dyadic(1)) {
    throw OutOfRange("geodesic parameter " + s.to_string() + " outside [0, 1]");
  }
  if (s.is_zero()) return Point::root();
  if (s == Dyadic(1)) return r;
  auto [k, offset] = locate_radius(s);
  return Point::on_edge(ray_vertex(r, k), std::move(offset));
}

bool same_point(const TreeSpec& spec, const ExtPoint& a, const ExtPoint& b) {
  return canonical(spec, a) == canonical(spec, b);
}

}  // namespace treexfer
