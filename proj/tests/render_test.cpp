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

#include <gtest/gtest.h>

#include <cmath>
#include <regex>

#include "test_support.hpp"
#include "treexfer/errors.hpp"

namespace treexfer {
namespace {

std::size_t count(const std::string& svg, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
  return n;
}

double attr(const std::string& elem, const std::string& name) {
  std::smatch m;
  const std::regex re(" " + name + "=\"([-0-9.]+)\"");
  if (!std::regex_search(elem, m, re)) ADD_FAILURE() << name << " missing in " << elem;
  return std::stod(m[1]);
}

TEST(RenderTest, VerticesSitAtTheirNorms) {
  const std::string svg = render_svg(testing::binary_tree(), {.max_depth = 6, .size = 800});
  EXPECT_EQ(count(svg, "class=\"vertex\""), 127u);
  EXPECT_EQ(count(svg, "class=\"edge\""), 126u);
  EXPECT_EQ(count(svg, "class=\"tail\""), 64u);

  const std::regex boundary_re("<circle class=\"boundary\"[^>]*>");
  std::smatch bm;
  ASSERT_TRUE(std::regex_search(svg, bm, boundary_re));
  const std::string b = bm.str();
  const double cx = attr(b, "cx"), cy = attr(b, "cy"), radius = attr(b, "r");

  const std::regex vertex_re("<circle class=\"vertex\"[^>]*>");
  std::size_t seen = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), vertex_re);
       it != std::sregex_iterator(); ++it, ++seen) {
    const std::string v = it->str();
    const auto depth = static_cast<std::size_t>(attr(v, "data-depth"));
    std::smatch nm;
    ASSERT_TRUE(std::regex_search(v, nm, std::regex("data-norm=\"([^\"]+)\"")));
    EXPECT_EQ(Dyadic::parse(nm[1].str()), vertex_norm(depth));
    const double r = std::hypot(attr(v, "cx") - cx, attr(v, "cy") - cy) / radius;
    EXPECT_NEAR(r, vertex_norm(depth).to_double(), 1e-4) << v;
  }
  EXPECT_EQ(seen, 127u);
}

TEST(RenderTest, UnaryTreeIsOneRadialSegment) {
  const std::string svg = render_svg(testing::unary_tree(), {.max_depth = 6, .size = 400});
  EXPECT_EQ(count(svg, "class=\"tail\""), 1u);
  const std::regex line_re("<line class=\"(edge|tail)\"[^>]*>");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line_re);
       it != std::sregex_iterator(); ++it) {
    const std::string l = it->str();
    // Every segment lies on the ray from the centre through the first vertex.
    const double x1 = attr(l, "x1") - 200, y1 = attr(l, "y1") - 200;
    const double x2 = attr(l, "x2") - 200, y2 = attr(l, "y2") - 200;
    EXPECT_NEAR(x1 * y2 - x2 * y1, 0.0, 0.5) << l;
    EXPECT_GE(x1 * x2 + y1 * y2, 0.0) << l;
  }
}

TEST(RenderTest, FiniteTreeHasNoTails) {
  const std::string svg = render_svg(testing::path3_tree(), {.max_depth = 6});
  EXPECT_EQ(count(svg, "class=\"tail\""), 0u);
  EXPECT_EQ(count(svg, "class=\"vertex\""), 4u);
}

TEST(RenderTest, HighlightMarksBranchVertex) {
  RenderConfig cfg;
  cfg.max_depth = 5;
  cfg.highlight.emplace(Point::at_vertex({{0, 1, 0, 0}}),
                        Point::on_edge({{0, 1, 1, 0, 1}}, Dyadic::pow2(-1)));
  const std::string svg = render_svg(testing::binary_tree(), cfg);
  EXPECT_EQ(count(svg, "class=\"geodesic\""), 2u);
  EXPECT_EQ(count(svg, "class=\"truncated\""), 2u);
  EXPECT_EQ(count(svg, "class=\"branch\" data-norm=\"3/2^2\""), 1u);
  EXPECT_NE(svg.find(">z</text>"), std::string::npos);
}

TEST(RenderTest, HighlightWithRays) {
  RenderConfig cfg;
  cfg.highlight.emplace(Ray{{}, {0}}, Ray{{0, 0}, {1}});
  const std::string svg = render_svg(testing::binary_tree(), cfg);
  EXPECT_EQ(count(svg, "class=\"branch\" data-norm=\"3/2^2\""), 1u);
}

TEST(RenderTest, RejectsBadConfig) {
  EXPECT_THROW(render_svg(testing::binary_tree(), {.max_depth = 0}), OutOfRange);
  EXPECT_THROW(render_svg(testing::binary_tree(), {.max_depth = 3, .size = 10}), OutOfRange);
}

TEST(RenderTest, Deterministic) {
  const auto t = testing::alternating_tree();
  EXPECT_EQ(render_svg(t, {}), render_svg(t, {}));
}

}  // namespace
}  // namespace treexfer
