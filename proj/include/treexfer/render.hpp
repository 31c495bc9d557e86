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
#include <string>
#include <utility>

#include "treexfer/boundary.hpp"

namespace treexfer {

struct RenderConfig {
  std::size_t max_depth = 6;
  int size = 800;  // pixels, square
  /// Two points whose geodesics, truncated rays and branch vertex are marked.
  std::optional<std::pair<ExtPoint, ExtPoint>> highlight;
};

/// Radial disk embedding of T ∪ ∂T: a depth-n vertex sits on the circle of
/// radius 1 - 2^-n (its exact distance to x0), each vertex's angular wedge is
/// split evenly among its children, and ∂T is the unit circle.
///
/// Vertices are emitted as <circle class="vertex"> carrying data-address,
/// data-depth and data-norm (the exact m/2^k value). OutOfRange on an invalid
/// config.
std::string render_svg(const TreeSpec& spec, const RenderConfig& cfg);

}  // namespace treexfer
