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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "treexfer/errors.hpp"
#include "treexfer/json_io.hpp"
#include "treexfer/render.hpp"
#include "treexfer/transfer.hpp"
#include "treexfer/verify.hpp"

namespace treexfer::cli {

namespace {

constexpr const char* kSeedEnv = "TREEXFER_SEED";

struct SampleFlags {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t max_depth = 12;
  std::string boundary_fraction = "1/2^2";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--seed", seed, std::string("RNG seed (default: $") + kSeedEnv + " or 1)");
    cmd->add_option("--count", count, "Number of samples")->check(CLI::PositiveNumber);
    cmd->add_option("--max-depth", max_depth, "Address length cap for samples")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--boundary-fraction", boundary_fraction,
                    "Probability (m/2^k) that a sample is a boundary ray");
  }

  SampleConfig config() const {
    SampleConfig cfg;
    cfg.seed = seed;
    cfg.count = count;
    cfg.max_depth = max_depth;
    cfg.boundary_fraction = Dyadic::parse(boundary_fraction);
    if (cfg.boundary_fraction.sign() < 0 || cfg.boundary_fraction > Dyadic(1)) {
      throw OutOfRange("--boundary-fraction must lie in [0, 1]");
    }
    return cfg;
  }
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

TreeSpec load_spec(const std::string& arg) {
  TreeSpec spec = tree_spec_from_json(load_json_arg(arg));
  if (!spec.valid()) {
    const auto report = spec.validate();
    throw InvalidSpec("invalid tree spec: " + report.violations.front());
  }
  return spec;
}

std::string exact_and_decimal(const Dyadic& d) {
  return d.to_string() + " = " + d.to_decimal() + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact metric geometry of compactified trees and transfer certificates"};
  app.require_subcommand(1);

  SampleFlags flags;
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      flags.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: " << kSeedEnv << " is not an unsigned integer\n";
      return kUsageError;
    }
  }

  std::string spec_arg, a_arg, b_arg, out_path, sigma_arg, delta_arg, suite, eps_arg = "1/2^4";
  std::vector<std::string> highlight;
  std::size_t render_depth = 6;
  int render_size = 800;
  bool no_samples = false;

  auto* validate = app.add_subcommand("validate", "Check a tree spec and report its invariants");
  validate->add_option("spec", spec_arg, "Tree spec JSON file or inline JSON")->required();

  auto* dist = app.add_subcommand("dist", "Distance between two points of T ∪ ∂T");
  auto* gromov = app.add_subcommand("gromov", "Gromov product of two points of T ∪ ∂T");
  for (auto* cmd : {dist, gromov}) {
    cmd->add_option("spec", spec_arg, "Tree spec JSON file or inline JSON")->required();
    cmd->add_option("a", a_arg, "Point or ray (JSON)")->required();
    cmd->add_option("b", b_arg, "Point or ray (JSON)")->required();
  }

  auto* project_cmd = app.add_subcommand("project", "Retract a point onto the ball about x0");
  project_cmd->add_option("spec", spec_arg, "Tree spec JSON file or inline JSON")->required();
  project_cmd->add_option("point", a_arg, "Point or ray (JSON)")->required();
  auto* sigma_opt = project_cmd->add_option("--sigma", sigma_arg, "Ball radius in [0, 1)");
  project_cmd->add_option("--delta", delta_arg, "Use sigma_N for this delta")
      ->excludes(sigma_opt);

  auto* certify_cmd = app.add_subcommand("certify", "Build a 1-transfer certificate");
  certify_cmd->add_option("spec", spec_arg, "Tree spec JSON file or inline JSON")->required();
  certify_cmd->add_option("--delta", delta_arg, "Control bound in (0, 1], e.g. 1/100 or 1/2^7")
      ->required();
  certify_cmd->add_option("-o,--out", out_path, "Certificate output file (default stdout)");
  certify_cmd->add_flag("--no-samples", no_samples, "Omit per-sample records from the JSON");
  flags.add_to(certify_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", suite, "metric | hyperbolicity | boundary | net | contraction")
      ->required()
      ->check(CLI::IsMember({"metric", "hyperbolicity", "boundary", "net", "contraction"}));
  verify_cmd->add_option("spec", spec_arg, "Tree spec JSON file or inline JSON")->required();
  verify_cmd->add_option("--eps", eps_arg, "Net radius for the net suite (m/2^k)");
  verify_cmd->add_option("-o,--out", out_path, "Report output file (default stdout)");
  flags.add_to(verify_cmd);

  auto* render_cmd = app.add_subcommand("render", "SVG disk embedding of T ∪ ∂T");
  render_cmd->add_option("spec", spec_arg, "Tree spec JSON file or inline JSON")->required();
  render_cmd->add_option("--depth", render_depth, "Deepest vertex level drawn");
  render_cmd->add_option("--size", render_size, "Image size in pixels");
  render_cmd->add_option("--highlight", highlight, "Two points or rays (JSON) to mark")
      ->expected(2);
  render_cmd->add_option("-o,--out", out_path, "SVG output file (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (validate->parsed()) {
      const TreeSpec spec = tree_spec_from_json(load_json_arg(spec_arg));
      const auto report = spec.validate();
      out << to_json(report).dump(2) << "\n";
      return report.valid() ? kOk : kVerificationFailed;
    }
    if (dist->parsed() || gromov->parsed()) {
      const TreeSpec spec = load_spec(spec_arg);
      const ExtPoint a = ext_point_from_json(load_json_arg(a_arg));
      const ExtPoint b = ext_point_from_json(load_json_arg(b_arg));
      out << exact_and_decimal(dist->parsed() ? dist_bar(spec, a, b) : gromov_ext(spec, a, b));
      return kOk;
    }
    if (project_cmd->parsed()) {
      const TreeSpec spec = load_spec(spec_arg);
      Dyadic sigma;
      if (!sigma_arg.empty()) {
        sigma = Dyadic::parse(sigma_arg);
      } else if (!delta_arg.empty()) {
        sigma = sigma_of(compute_N(parse_threshold(delta_arg)));
      } else {
        throw ParseError("project needs --sigma or --delta");
      }
      out << to_json(project(spec, ext_point_from_json(load_json_arg(a_arg)), sigma)).dump()
          << "\n";
      return kOk;
    }
    if (certify_cmd->parsed()) {
      const TreeSpec spec = load_spec(spec_arg);
      const auto cert = certify(spec, parse_threshold(delta_arg), flags.config());
      write_output(out_path, to_json(cert, !no_samples).dump(2) + "\n", out);
      if (!out_path.empty() && out_path != "-") {
        out << "N = " << cert.n << ", sigma = " << cert.sigma.to_string()
            << ", max track = " << cert.max_track_diameter.to_string() << ": "
            << (cert.pass ? "pass" : "fail") << "\n";
      }
      return cert.pass ? kOk : kVerificationFailed;
    }
    if (verify_cmd->parsed()) {
      const TreeSpec spec = load_spec(spec_arg);
      const auto report = run_suite(suite, spec, flags.config(), Dyadic::parse(eps_arg));
      write_output(out_path, to_json(report).dump(2) + "\n", out);
      return report.pass() ? kOk : kVerificationFailed;
    }
    if (render_cmd->parsed()) {
      const TreeSpec spec = load_spec(spec_arg);
      RenderConfig cfg;
      cfg.max_depth = render_depth;
      cfg.size = render_size;
      if (highlight.size() == 2) {
        cfg.highlight.emplace(ext_point_from_json(load_json_arg(highlight[0])),
                              ext_point_from_json(load_json_arg(highlight[1])));
      }
      write_output(out_path, render_svg(spec, cfg), out);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace treexfer::cli
