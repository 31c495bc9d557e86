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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "test_support.hpp"
#include "treexfer/json_io.hpp"
#include "treexfer/transfer.hpp"
#include "treexfer/verify.hpp"

namespace treexfer {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Outcome transfer_certificate() {
  Outcome o;
  const TreeSpec t = testing::binary_tree();
  const auto t0 = Clock::now();
  const auto cert = certify(t, mpq_class(1, 100), {.seed = 1, .count = 10000});
  const double elapsed = seconds_since(t0);

  o.require(cert.pass, "verdict is fail");
  o.require(cert.n == 7, "N = " + std::to_string(cert.n));
  o.require(cert.sigma == Dyadic::normalize(255, 8), "sigma = " + cert.sigma.to_string());
  o.require(cert.complex.vertices.size() == 511 && cert.complex.edges.size() == 510,
            "complex size");
  o.require(cert.max_track_diameter == Dyadic::pow2(-8),
            "max track = " + cert.max_track_diameter.to_string());
  std::size_t rays = 0;
  for (const auto& s : cert.samples) {
    if (!is_boundary(s.point)) continue;
    ++rays;
    o.require(s.diameter == Dyadic::pow2(-8), "a ray's track is " + s.diameter.to_string());
  }
  o.require(rays > 0, "no boundary rays sampled");
  o.require(cert.samples.size() >= 10000, "fewer than 10^4 samples");
  o.require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
  if (o.ok) {
    o.detail = "N=7 sigma=255/2^8 K=511/510 max=1/2^8 over " + std::to_string(rays) +
               " rays, " + std::to_string(elapsed).substr(0, 5) + " s";
  }
  return o;
}

Outcome worked_distance() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"treexfer", "dist", json(to_json(testing::binary_tree())).dump(),
                             R"({"vertex":[0,1,0,0]})", R"({"vertex":[0,1,1,0,1]})"},
                            out, err);
  o.require(code == cli::kOk, "exit " + std::to_string(code) + ": " + err.str());
  o.require(out.str().rfind("13/2^5 ", 0) == 0, "printed " + out.str());
  const Dyadic parts = Dyadic::pow2(-2) + Dyadic::pow2(-3) + Dyadic::pow2(-5);
  o.require(parts == Dyadic::normalize(13, 5), "1/4 + 1/8 + 1/32 != 13/32");
  if (o.ok) o.detail = "13/2^5";
  return o;
}

Outcome boundary_proposition() {
  Outcome o;
  std::size_t checks = 0;
  for (const TreeSpec& t : {testing::binary_tree(), testing::ternary_tree()}) {
    const auto r = check_boundary_proposition(t, {.seed = 11, .count = 1000});
    o.require(r.pass(), std::to_string(r.failures.size()) + " failures");
    checks += r.checks;
  }
  if (o.ok) o.detail = "1000 ray pairs per tree, " + std::to_string(checks) + " checks";
  return o;
}

Outcome metric_and_hyperbolicity() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checks = 0;
  for (const TreeSpec& t :
       {testing::unary_tree(), testing::binary_tree(), testing::alternating_tree()}) {
    const SampleConfig cfg{.seed = 5, .count = 10000};
    for (const auto& r : {check_metric_axioms(t, cfg), check_hyperbolicity(t, cfg)}) {
      o.require(r.pass(), r.suite + ": " + std::to_string(r.failures.size()) + " failures");
      checks += r.checks;
    }
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
  if (o.ok) {
    o.detail = std::to_string(checks) + " checks, " + std::to_string(elapsed).substr(0, 5) + " s";
  }
  return o;
}

Point oracle_point(const testing::PathOracle::Node& n) {
  if (n.vertex.empty()) return Point::root();
  if (n.midpoint) return Point::on_edge({n.vertex}, Dyadic::pow2(-1));
  return Point::at_vertex({n.vertex});
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::vector<TreeSpec> trees = {testing::path3_tree()};
  {
    ExplicitTree full;  // complete binary tree with 63 vertices
    for (const auto& v : testing::binary_tree().vertices_to_depth(4)) full.children[v.word] = 2;
    trees.emplace_back(std::move(full));
  }
  while (trees.size() < 40) trees.push_back(testing::random_explicit_tree(rng, 64));

  std::size_t pairs = 0;
  for (const TreeSpec& t : trees) {
    const testing::PathOracle oracle(t);
    const auto& nodes = oracle.nodes();
    o.require(nodes.size() <= 2 * 64, "tree too large");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto from = oracle.distances_from(i);
      const Point p = oracle_point(nodes[i]);
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        const Point q = oracle_point(nodes[j]);
        ++pairs;
        o.require(dist(t, p, q).to_rational() == from[j],
                  "dist mismatch at pair " + std::to_string(pairs));
        o.require(gromov(t, p, q) == gromov_via_meet(t, p, q),
                  "gromov mismatch at pair " + std::to_string(pairs));
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(trees.size()) + " trees, " + std::to_string(pairs) +
               " vertex/midpoint pairs";
  }
  return o;
}

Outcome homotopy_contract() {
  Outcome o;
  const Dyadic sigma = sigma_of(compute_N(mpq_class(1, 100)));
  std::size_t inside = 0;
  for (const TreeSpec& t : {testing::binary_tree(), testing::alternating_tree()}) {
    Sampler s(t, {.seed = 9, .count = 1000, .max_depth = 12});
    for (int i = 0; i < 1000; ++i) {
      const ExtPoint a = s.ext_point();
      const Dyadic u = s.unit_dyadic();
      o.require(same_point(t, homotopy_eval(t, a, Dyadic(0), sigma), a), "H(a,0) != a");
      o.require(same_point(t, homotopy_eval(t, a, Dyadic(1), sigma), project(t, a, sigma)),
                "H(a,1) != P(a)");
      const Dyadic len = ext_norm(t, a);
      const Dyadic expected = max(Dyadic(0), len - sigma);
      o.require(track_diameter(t, a, sigma) == expected, "track diameter formula");
      // Sampled track spread matches the closed form.
      const ExtPoint h = homotopy_eval(t, a, u, sigma);
      o.require(dist_bar(t, a, h) == u * expected, "H is not constant speed");
      if (len <= sigma) {
        ++inside;
        o.require(same_point(t, h, a), "track inside the ball is not a singleton");
        o.require(track_diameter(t, a, sigma).is_zero(), "track inside the ball has diameter");
      }
    }
  }
  o.require(inside > 0, "no samples inside the ball");
  if (o.ok) o.detail = "2000 samples, " + std::to_string(inside) + " inside the ball";
  return o;
}

Outcome net_witness() {
  Outcome o;
  std::size_t checks = 0;
  for (const int k : {2, 4, 6}) {
    const auto r = check_net(testing::binary_tree(), Dyadic::pow2(-k),
                             {.seed = 3, .count = 1000, .boundary_fraction = Dyadic::pow2(-1)});
    o.require(r.pass(), "eps=1/2^" + std::to_string(k) + ": " +
                            std::to_string(r.failures.size()) + " misses");
    checks += r.checks;
  }
  if (o.ok) o.detail = "eps in {1/4, 1/16, 1/64}, " + std::to_string(checks) + " checks";
  return o;
}

Outcome determinism() {
  Outcome o;
  const TreeSpec t = testing::alternating_tree();
  const SampleConfig cfg{.seed = 123, .count = 300};
  for (const char* suite : {"metric", "hyperbolicity", "boundary", "net", "contraction"}) {
    const std::string a = to_json(run_suite(suite, t, cfg)).dump();
    const std::string b = to_json(run_suite(suite, t, cfg)).dump();
    o.require(a == b, std::string(suite) + " reports differ");
  }
  const std::string c1 = to_json(certify(t, mpq_class(1, 100), cfg)).dump();
  const std::string c2 = to_json(certify(t, mpq_class(1, 100), cfg)).dump();
  o.require(c1 == c2, "certificates differ");
  if (o.ok) o.detail = "5 suites and certify, byte-identical";
  return o;
}

}  // namespace
}  // namespace treexfer

int main() {
  using treexfer::Outcome;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"transfer certificate, binary tree, delta=1/100", treexfer::transfer_certificate},
      {"worked two-ray distance 13/32 via dist command", treexfer::worked_distance},
      {"boundary proposition on binary and ternary trees", treexfer::boundary_proposition},
      {"metric axioms and 0-hyperbolicity, 10^4 triples x 3 specs",
       treexfer::metric_and_hyperbolicity},
      {"exhaustive path-sum oracle on explicit trees <= 64 vertices",
       treexfer::oracle_equivalence},
      {"homotopy contract, 10^3 samples", treexfer::homotopy_contract},
      {"finite eps-net covers samples and rays", treexfer::net_witness},
      {"byte-identical reports for identical configs", treexfer::determinism},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %d. %s: %s\n", o.ok ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
