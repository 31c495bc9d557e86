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

#include <json.hpp>

#include "treexfer/transfer.hpp"
#include "treexfer/verify.hpp"

namespace treexfer {

using nlohmann::json;

// Every reader throws ParseError on malformed input.

json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const json& j);

/// {"kind":"explicit","children":{"":2,"0":1,...}} or
/// {"kind":"programmatic","states":[...],"initial":...,"counts":{...},"delta":{...}}
/// with delta mapping each state to the list of its children's states.
/// Explicit keys are one base-36 digit per index ("" is the root); keys with
/// dots ("10.3") are read as dot-separated decimal indices.
TreeSpec tree_spec_from_json(const json& j);
json to_json(const TreeSpec& spec);

std::string address_key(const Word& w);
Word parse_address_key(std::string_view key);

/// {"vertex":[0,1,0],"t":"1/2^1"}; {"root":true} is x0; "t" defaults to 1.
json to_json(const Point& p);
Point point_from_json(const json& j);

/// {"prefix":[0,1],"cycle":[0]}
json to_json(const Ray& r);
Ray ray_from_json(const json& j);

/// Objects carrying "cycle" are rays, everything else is a point.
json to_json(const ExtPoint& a);
ExtPoint ext_point_from_json(const json& j);

json to_json(const ValidationReport& r);
json to_json(const TransferCertificate& c, bool include_samples = true);
json to_json(const SuiteReport& r);

/// Parses `text` as inline JSON when it starts with '{' or '[', otherwise
/// reads it as a file path.
json load_json_arg(const std::string& text);

}  // namespace treexfer
