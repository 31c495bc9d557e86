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

#include "treexfer/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

#include "treexfer/errors.hpp"
#include "treexfer/json_io.hpp"

namespace treexfer {

namespace {

// Depth to which a ray is followed before jumping to its boundary point.
constexpr std::size_t kRayDetail = 24;

struct Xy {
  double x, y;
};

class Layout {
 public:
  Layout(const TreeSpec& spec, int size)
      : spec_(spec), center_(size / 2.0), radius_(size / 2.0 - 20.0) {}

  double radius() const { return radius_; }
  double center() const { return center_; }

  // Angular wedge [lo, hi) of the vertex at `word`.
  std::pair<double, double> wedge(std::span<const ChildIndex> word) const {
    double lo = 0.0;
    double hi = 2.0 * std::numbers::pi;
    NodeId node = spec_.root_node();
    for (const ChildIndex i : word) {
      const double step = (hi - lo) / spec_.node_child_count(node);
      lo += step * i;
      hi = lo + step;
      node = spec_.node_child(node, i);
    }
    return {lo, hi};
  }

  Xy polar(double r, double angle) const {
    return {center_ + r * radius_ * std::cos(angle), center_ - r * radius_ * std::sin(angle)};
  }

  Xy vertex(std::span<const ChildIndex> word) const {
    if (word.empty()) return {center_, center_};
    const auto [lo, hi] = wedge(word);
    return polar(vertex_norm(word.size()).to_double(), (lo + hi) / 2.0);
  }

  Xy point(const Point& p) const {
    if (p.is_root()) return {center_, center_};
    const auto& w = p.vertex().word;
    const Xy child = vertex(w);
    const Xy parent = vertex(std::span(w).first(w.size() - 1));
    const double t = p.offset().to_double();
    return {parent.x + t * (child.x - parent.x), parent.y + t * (child.y - parent.y)};
  }

  // Geodesic [x0, a] from distance `from` onward, as a polyline.
  std::vector<Xy> geodesic(const ExtPoint& a, const Dyadic& from) const {
    std::vector<Xy> pts;
    const ExtPoint start = ext_geodesic_point(spec_, a, from);
    if (const auto* sp = std::get_if<Point>(&start)) pts.push_back(point(*sp));
    if (const auto* p = std::get_if<Point>(&a)) {
      for (std::size_t k = 1; k < p->depth(); ++k) {
        if (vertex_norm(k) > from) pts.push_back(vertex(std::span(p->vertex().word).first(k)));
      }
      pts.push_back(point(*p));
      return pts;
    }
    const Ray& r = std::get<Ray>(a);
    const Word w = r.head(kRayDetail);
    for (std::size_t k = 1; k <= kRayDetail; ++k) {
      if (vertex_norm(k) > from) pts.push_back(vertex(std::span(w).first(k)));
    }
    const auto [lo, hi] = wedge(w);
    pts.push_back(polar(1.0, (lo + hi) / 2.0));
    return pts;
  }

 private:
  const TreeSpec& spec_;
  double center_;
  double radius_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string polyline(const std::vector<Xy>& pts, const char* cls) {
  std::string s = std::string("<polyline class=\"") + cls + "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += num(pts[i].x) + "," + num(pts[i].y);
  }
  return s + "\"/>\n";
}

}  // namespace

std::string render_svg(const TreeSpec& spec, const RenderConfig& cfg) {
  if (cfg.max_depth < 1) throw OutOfRange("render depth must be at least 1");
  if (cfg.size < 64) throw OutOfRange("image size must be at least 64 pixels");
  const Layout layout(spec, cfg.size);
  const auto vertices = spec.vertices_to_depth(cfg.max_depth);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.size << "\" height=\""
      << cfg.size << "\" viewBox=\"0 0 " << cfg.size << ' ' << cfg.size << "\">\n"
      << "<style>.boundary{fill:none;stroke:#888;stroke-dasharray:4 3}"
         ".edge{stroke:#333;stroke-width:1}.tail{stroke:#bbb;stroke-dasharray:2 2}"
         ".vertex{fill:#222}.geodesic{fill:none;stroke:#4a7fd4;stroke-width:2}"
         ".truncated{fill:none;stroke:#d9534f;stroke-width:3}.branch{fill:#d9534f}"
         "</style>\n";
  out << "<circle class=\"boundary\" cx=\"" << num(layout.center()) << "\" cy=\""
      << num(layout.center()) << "\" r=\"" << num(layout.radius()) << "\"/>\n";

  for (const auto& v : vertices) {
    if (v.is_root()) continue;
    const Xy a = layout.vertex(std::span(v.word).first(v.depth() - 1));
    const Xy b = layout.vertex(v.word);
    out << "<line class=\"edge\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
        << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
  }
  // Dotted continuation to ∂T below the deepest drawn level.
  for (const auto& v : vertices) {
    if (v.depth() != cfg.max_depth || !spec.node_is_live(spec.node_at(v.word))) continue;
    const Xy a = layout.vertex(v.word);
    const auto [lo, hi] = layout.wedge(v.word);
    const Xy b = layout.polar(1.0, (lo + hi) / 2.0);
    out << "<line class=\"tail\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
        << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
  }
  for (const auto& v : vertices) {
    const Xy p = layout.vertex(v.word);
    out << "<circle class=\"vertex\" data-address=\"" << address_key(v.word)
        << "\" data-depth=\"" << v.depth() << "\" data-norm=\""
        << vertex_norm(v.depth()).to_string() << "\" cx=\"" << num(p.x) << "\" cy=\""
        << num(p.y) << "\" r=\"" << (v.is_root() ? 4 : 2) << "\"/>\n";
  }

  if (cfg.highlight) {
    const auto& [a, b] = *cfg.highlight;
    const ExtPoint ca = canonical(spec, a);
    const ExtPoint cb = canonical(spec, b);
    out << polyline(layout.geodesic(ca, Dyadic(0)), "geodesic");
    out << polyline(layout.geodesic(cb, Dyadic(0)), "geodesic");
    if (ca != cb) {
      const Dyadic branch = gromov_ext(spec, ca, cb);
      out << polyline(layout.geodesic(ca, branch), "truncated");
      out << polyline(layout.geodesic(cb, branch), "truncated");
      const ExtPoint z = ext_geodesic_point(spec, ca, branch);
      const Xy zp = layout.point(std::get<Point>(z));
      out << "<circle class=\"branch\" data-norm=\"" << branch.to_string() << "\" cx=\""
          << num(zp.x) << "\" cy=\"" << num(zp.y) << "\" r=\"5\"/>\n"
          << "<text x=\"" << num(zp.x + 7) << "\" y=\"" << num(zp.y - 7)
          << "\" font-size=\"14\">z</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace treexfer
