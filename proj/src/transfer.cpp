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

#include "treexfer/transfer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "treexfer/errors.hpp"

namespace treexfer {

namespace {

void require_sigma(const Dyadic& sigma) {
  if (sigma.sign() < 0 || sigma >= Dyadic(1)) {
    throw OutOfRange("retraction radius " + sigma.to_string() + " outside [0, 1)");
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Returns false if an edge joins two already-connected vertices or names an
// unknown vertex; `components` receives the number of components.
bool scan_edges(const Complex1D& k, std::size_t& components) {
  std::map<VertexAddress, std::size_t> index;
  for (std::size_t i = 0; i < k.vertices.size(); ++i) index.emplace(k.vertices[i], i);
  DisjointSets sets(k.vertices.size());
  components = k.vertices.size();
  bool forest = true;
  for (const auto& [a, b] : k.edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) return false;
    if (sets.unite(ia->second, ib->second)) {
      --components;
    } else {
      forest = false;
    }
  }
  return forest;
}

}  // namespace

bool Complex1D::is_connected() const {
  std::size_t components = 0;
  scan_edges(*this, components);
  return components == 1;
}

bool Complex1D::is_acyclic() const {
  std::size_t components = 0;
  return scan_edges(*this, components);
}

bool Complex1D::contains(const VertexAddress& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::size_t compute_N(const mpq_class& raw) {
  mpq_class delta = raw;
  delta.canonicalize();
  if (sgn(delta) <= 0 || delta > 1) {
    throw OutOfRange("delta must lie in (0, 1], got " + threshold_string(delta));
  }
  // 2^-N <= p/q  <=>  q <= p * 2^N.
  std::size_t n = 0;
  mpz_class scaled = delta.get_num();
  while (scaled < delta.get_den()) {
    scaled *= 2;
    ++n;
  }
  return std::max<std::size_t>(n, 1);
}

Dyadic sigma_of(std::size_t n) { return vertex_norm(n + 1); }

Complex1D truncation(const TreeSpec& spec, std::size_t n) {
  Complex1D k;
  k.vertices = spec.vertices_to_depth(n + 1);
  k.edges.reserve(k.vertices.size());
  for (const auto& v : k.vertices) {
    if (!v.is_root()) k.edges.emplace_back(v.prefix(v.depth() - 1), v);
  }
  return k;
}

Point project(const TreeSpec& spec, const ExtPoint& a, const Dyadic& sigma) {
  require_sigma(sigma);
  if (const auto* p = std::get_if<Point>(&a)) {
    if (norm(spec, *p) <= sigma) return *p;
  }
  return std::get<Point>(ext_geodesic_point(spec, a, sigma));
}

ExtPoint homotopy_eval(const TreeSpec& spec, const ExtPoint& a, const Dyadic& t,
                       const Dyadic& sigma) {
  require_sigma(sigma);
  if (t.sign() < 0 || t > Dyadic(1)) throw OutOfRange("homotopy time outside [0, 1]");
  const Dyadic len = ext_norm(spec, a);
  const Dyadic target = (Dyadic(1) - t) * len + t * min(len, sigma);
  return ext_geodesic_point(spec, a, target);
}

Dyadic track_diameter(const TreeSpec& spec, const ExtPoint& a, const Dyadic& sigma) {
  require_sigma(sigma);
  return max(Dyadic(0), ext_norm(spec, a) - sigma);
}

TransferCertificate certify(const TreeSpec& spec, const mpq_class& delta,
                            const SampleConfig& cfg) {
  TransferCertificate cert;
  cert.delta = delta;
  cert.delta.canonicalize();
  cert.n = compute_N(delta);
  cert.sigma = sigma_of(cert.n);
  cert.complex = truncation(spec, cert.n);

  std::vector<ExtPoint> points;
  points.emplace_back(Point::root());
  {
    // Leftmost path, preferring live children, down to depth N+2: its depth
    // N+1 vertex is on the sphere of radius sigma_N and the midpoint of the
    // next edge lies outside the ball.
    VertexAddress v;
    NodeId node = spec.root_node();
    while (v.depth() < cert.n + 2 && spec.node_child_count(node) > 0) {
      ChildIndex pick = 0;
      for (ChildIndex i = 0; i < spec.node_child_count(node); ++i) {
        if (spec.node_is_live(spec.node_child(node, i))) {
          pick = i;
          break;
        }
      }
      v.word.push_back(pick);
      node = spec.node_child(node, pick);
    }
    if (v.depth() == cert.n + 2) {
      points.emplace_back(Point::at_vertex(v.prefix(cert.n + 1)));
      points.emplace_back(Point::on_edge(v, Dyadic::pow2(-1)));
    } else if (!v.is_root()) {
      points.emplace_back(Point::at_vertex(v));
    }
  }
  Sampler sampler(spec, cfg);
  if (const auto r = sampler.ray()) points.emplace_back(*r);
  for (std::size_t i = 0; i < cfg.count; ++i) points.push_back(sampler.ext_point());

  cert.samples.reserve(points.size());
  for (auto& a : points) {
    Point projected = project(spec, a, cert.sigma);
    Dyadic diameter = track_diameter(spec, a, cert.sigma);
    if (diameter > cert.max_track_diameter) cert.max_track_diameter = diameter;
    cert.samples.push_back({std::move(a), std::move(projected), std::move(diameter)});
  }
  cert.pass = compare(cert.max_track_diameter, cert.delta) <= 0 && cert.complex.dimension() <= 1;
  return cert;
}

mpq_class parse_threshold(std::string_view text) {
  if (text.find("/2^") != std::string_view::npos || text.find('/') == std::string_view::npos) {
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      // Exact decimal: digits / 10^fraction_length.
      std::string digits(text.substr(0, dot));
      const std::string_view fraction = text.substr(dot + 1);
      digits += fraction;
      mpz_class num;
      if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0) {
        throw ParseError("malformed number '" + std::string(text) + "'");
      }
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, fraction.size());
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return Dyadic::parse(text).to_rational();
  }
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

std::string threshold_string(const mpq_class& q) {
  const mpz_class& den = q.get_den();
  if (mpz_popcount(den.get_mpz_t()) == 1) {
    return Dyadic::normalize(q.get_num(), mpz_sizeinbase(den.get_mpz_t(), 2) - 1).to_string();
  }
  return q.get_str(10);
}

}  // namespace treexfer
