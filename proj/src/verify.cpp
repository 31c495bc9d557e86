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

#include "treexfer/verify.hpp"

#include "treexfer/errors.hpp"

namespace treexfer {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  // Counts one check; records a failure when `ok` is false.
  void expect(bool ok, std::size_t index, const char* check, std::vector<ExtPoint> witnesses,
              std::vector<std::pair<std::string, std::string>> values = {}) {
    ++report_.checks;
    if (!ok) {
      report_.failures.push_back({index, check, std::move(witnesses), std::move(values)});
    }
  }

  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::pair<std::string, std::string> value(const char* name, const Dyadic& d) {
  return {name, d.to_string()};
}

// A triple where, one time in eight each, the second or third point repeats
// the first so that identity and degenerate cases are exercised.
struct Triple {
  ExtPoint a, b, c;
};

Triple draw_triple(Sampler& s) {
  Triple t{s.ext_point(), s.ext_point(), s.ext_point()};
  if (s.below(8) == 0) t.b = t.a;
  if (s.below(8) == 0) t.c = t.a;
  return t;
}

}  // namespace

SuiteReport check_metric_axioms(const TreeSpec& spec, const SampleConfig& cfg,
                                const Hooks& hooks) {
  Recorder rec("metric");
  Sampler sampler(spec, cfg);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const auto [a, b, c] = draw_triple(sampler);
    const Dyadic ab = hooks.dist(spec, a, b);
    const Dyadic ba = hooks.dist(spec, b, a);
    const Dyadic ac = hooks.dist(spec, a, c);
    const Dyadic cb = hooks.dist(spec, c, b);
    const Dyadic aa = hooks.dist(spec, a, a);
    const bool same = same_point(spec, a, b);

    rec.expect(ab.sign() >= 0, i, "non-negativity", {a, b}, {value("d(a,b)", ab)});
    rec.expect(aa.is_zero(), i, "d(a,a) = 0", {a}, {value("d(a,a)", aa)});
    rec.expect(ab.is_zero() == same, i, "d(a,b) = 0 iff a = b", {a, b}, {value("d(a,b)", ab)});
    rec.expect(ab == ba, i, "symmetry", {a, b}, {value("d(a,b)", ab), value("d(b,a)", ba)});
    rec.expect(ab <= ac + cb, i, "triangle inequality", {a, b, c},
               {value("d(a,b)", ab), value("d(a,c)", ac), value("d(c,b)", cb)});
  }
  return rec.take();
}

SuiteReport check_hyperbolicity(const TreeSpec& spec, const SampleConfig& cfg,
                                const Hooks& hooks) {
  Recorder rec("hyperbolicity");
  Sampler sampler(spec, cfg);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const auto [a, b, c] = draw_triple(sampler);
    const Dyadic ab = hooks.gromov(spec, a, b);
    const Dyadic bc = hooks.gromov(spec, b, c);
    const Dyadic ca = hooks.gromov(spec, c, a);
    const Dyadic ba = hooks.gromov(spec, b, a);
    rec.expect(ab == ba, i, "(a|b) = (b|a)", {a, b}, {value("(a|b)", ab), value("(b|a)", ba)});
    const std::vector<std::pair<std::string, std::string>> vals = {
        value("(a|b)", ab), value("(b|c)", bc), value("(c|a)", ca)};
    rec.expect(ab >= min(ca, bc), i, "(a|b) >= min{(a|c),(c|b)}", {a, b, c}, vals);
    rec.expect(bc >= min(ab, ca), i, "(b|c) >= min{(b|a),(a|c)}", {a, b, c}, vals);
    rec.expect(ca >= min(bc, ab), i, "(c|a) >= min{(c|b),(b|a)}", {a, b, c}, vals);
  }
  return rec.take();
}

SuiteReport check_boundary_proposition(const TreeSpec& spec, const SampleConfig& cfg,
                                       const Hooks& hooks) {
  if (!spec.is_infinite()) throw NoBoundary("the tree is finite, so its boundary is empty");
  Recorder rec("boundary");
  Sampler sampler(spec, cfg);
  const ExtPoint root = Point::root();
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const Ray r = *sampler.ray();
    const Ray s = sampler.below(8) == 0 ? r : *sampler.ray();
    const Dyadic to_root = hooks.dist(spec, r, root);
    const Dyadic rs = hooks.dist(spec, r, s);
    const Dyadic product = hooks.gromov(spec, r, s);
    const bool equal = ray_normalize(spec, r) == ray_normalize(spec, s);
    const bool split_at_root = r.letter(0) != s.letter(0);

    rec.expect(to_root == Dyadic(1), i, "d(ray, x0) = 1", {r}, {value("d(ray,x0)", to_root)});
    rec.expect((rs == Dyadic(2)) == split_at_root, i,
               "d = 2 iff the rays lie in different components of T - x0", {r, s},
               {value("d(r,s)", rs)});
    rec.expect((product == Dyadic(1)) == equal, i, "(r|s) = 1 iff r = s", {r, s},
               {value("(r|s)", product)});
    rec.expect(rs.is_zero() == equal, i, "d(r,s) = 0 iff r = s", {r, s}, {value("d(r,s)", rs)});
  }
  return rec.take();
}

Net make_net(const Dyadic& eps) {
  if (eps.sign() <= 0 || eps > Dyadic(1)) throw OutOfRange("eps must lie in (0, 1]");
  Net net;
  net.eps = eps;
  // 2^e <= eps with e = floor(log2 eps) <= 0, so D = -e is the least depth.
  net.depth = static_cast<std::size_t>(-eps.floor_log2());
  return net;
}

Dyadic Net::offset_step(std::size_t k) const {
  return Dyadic::pow2(-static_cast<std::int64_t>(depth - k));
}

bool Net::contains(const Point& p) const {
  if (p.is_root()) return true;
  const std::size_t k = p.depth();
  return k <= depth && p.offset().exponent() <= depth - k;
}

Point Net::witness(const TreeSpec& spec, const ExtPoint& a) const {
  canonical(spec, a);
  if (const auto* p = std::get_if<Point>(&a); p && p->depth() <= depth) {
    if (p->is_root()) return *p;
    // Snap the offset to the nearer grid point of the carrying edge (ties go
    // toward x0). Every other net point is reached through one of these two.
    const std::size_t k = p->depth();
    const std::uint64_t grid_bits = depth - k;
    const Dyadic& t = p->offset();
    Dyadic snapped = t;
    if (t.exponent() > grid_bits) {
      mpz_class m;
      mpz_fdiv_q_2exp(m.get_mpz_t(), t.mantissa().get_mpz_t(), t.exponent() - grid_bits);
      snapped = Dyadic::normalize(std::move(m), grid_bits);
      const Dyadic up = snapped + offset_step(k);
      if (up - t < t - snapped) snapped = up;
    }
    if (snapped.is_zero()) return Point::at_vertex(p->vertex().prefix(k - 1));
    return Point::on_edge(p->vertex(), std::move(snapped));
  }
  if (depth == 0) return Point::root();
  const auto* p = std::get_if<Point>(&a);
  VertexAddress v = p ? p->vertex().prefix(depth) : ray_vertex(std::get<Ray>(a), depth);
  return Point::at_vertex(std::move(v));
}

std::vector<Point> Net::enumerate(const TreeSpec& spec) const {
  std::vector<Point> out;
  for (const auto& v : spec.vertices_to_depth(depth)) {
    if (v.is_root()) {
      out.push_back(Point::root());
      continue;
    }
    const std::uint64_t pieces = std::uint64_t{1} << (depth - v.depth());
    for (std::uint64_t j = 1; j <= pieces; ++j) {
      out.push_back(Point::on_edge(
          v, Dyadic::normalize(mpz_class(static_cast<unsigned long>(j)), depth - v.depth())));
    }
  }
  return out;
}

SuiteReport check_net(const TreeSpec& spec, const Dyadic& eps, const SampleConfig& cfg,
                      const Hooks& hooks) {
  const Net net = make_net(eps);
  Recorder rec("net");
  Sampler sampler(spec, cfg);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const ExtPoint a = sampler.ext_point();
    const Point w = net.witness(spec, a);
    const Dyadic d = hooks.dist(spec, a, w);
    rec.expect(net.contains(w), i, "witness belongs to the net", {a, w});
    rec.expect(d <= eps, i, "sample within eps of the net", {a, w},
               {value("d(a,net)", d), value("eps", eps)});
  }
  return rec.take();
}

SuiteReport check_contraction(const TreeSpec& spec, const SampleConfig& cfg,
                              const Hooks& hooks) {
  Recorder rec("contraction");
  Sampler sampler(spec, cfg);
  const ExtPoint root = Point::root();
  for (std::size_t i = 0; i < cfg.count; ++i) {
    const ExtPoint a = sampler.ext_point();
    const Dyadic len = ext_norm(spec, a);
    const Dyadic s = sampler.unit_dyadic();
    const Dyadic s2 = sampler.below(8) == 0 ? s : sampler.unit_dyadic();
    const Dyadic r = sampler.unit_dyadic();
    auto contract = [&](const Dyadic& at) { return hooks.geodesic(spec, a, at * len); };

    const ExtPoint at_one = contract(Dyadic(1));
    const ExtPoint at_zero = contract(Dyadic(0));
    const ExtPoint cs = contract(s);
    const ExtPoint cs2 = contract(s2);
    const Dyadic gap = hooks.dist(spec, cs, cs2);
    const Dyadic expected = abs(s - s2) * len;
    const Dyadic image_norm = ext_norm(spec, cs);

    rec.expect(same_point(spec, at_one, a), i, "C(a,1) = a", {a, at_one});
    rec.expect(same_point(spec, at_zero, root), i, "C(a,0) = x0", {a, at_zero});
    rec.expect(gap == expected, i, "d(C(a,s),C(a,s')) = |s-s'||a|", {a, cs, cs2},
               {value("s", s), value("s'", s2), value("distance", gap),
                value("expected", expected)});
    rec.expect(len > r || image_norm <= r, i, "C(., s) preserves balls about x0", {a, cs},
               {value("r", r), value("|a|", len), value("|C(a,s)|", image_norm)});
  }
  return rec.take();
}

SuiteReport run_suite(const std::string& name, const TreeSpec& spec, const SampleConfig& cfg,
                      const Dyadic& eps) {
  if (name == "metric") return check_metric_axioms(spec, cfg);
  if (name == "hyperbolicity") return check_hyperbolicity(spec, cfg);
  if (name == "boundary") return check_boundary_proposition(spec, cfg);
  if (name == "net") return check_net(spec, eps, cfg);
  if (name == "contraction") return check_contraction(spec, cfg);
  throw ParseError("unknown suite '" + name + "'");
}

}  // namespace treexfer
