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

#include "treexfer/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "treexfer/errors.hpp"

namespace treexfer {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

Word word_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of child indices");
  Word w;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) {
      throw ParseError(std::string(what) + " entries must be non-negative integers");
    }
    w.push_back(e.get<ChildIndex>());
  }
  return w;
}

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

json to_json(const Dyadic& d) { return d.to_string(); }

Dyadic dyadic_from_json(const json& j) {
  if (j.is_string()) return Dyadic::parse(j.get<std::string>());
  if (j.is_number_integer()) return Dyadic(j.get<long>());
  throw ParseError("dyadic must be a \"m/2^k\" string or an integer");
}

std::string address_key(const Word& w) {
  const bool compact = std::all_of(w.begin(), w.end(), [](ChildIndex i) { return i < 36; });
  std::string key;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (compact) {
      key += kDigits[w[p]];
    } else {
      if (p) key += '.';
      key += std::to_string(w[p]);
    }
  }
  return key;
}

Word parse_address_key(std::string_view key) {
  Word w;
  if (key.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= key.size()) {
      const auto end = std::min(key.find('.', start), key.size());
      const auto part = key.substr(start, end - start);
      if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ParseError("malformed address key '" + std::string(key) + "'");
      }
      w.push_back(static_cast<ChildIndex>(std::stoul(std::string(part))));
      start = end + 1;
    }
    return w;
  }
  for (const char c : key) {
    const auto pos = kDigits.find(c);
    if (pos == std::string_view::npos) {
      throw ParseError("malformed address key '" + std::string(key) + "'");
    }
    w.push_back(static_cast<ChildIndex>(pos));
  }
  return w;
}

TreeSpec tree_spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("tree spec must be a JSON object");
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "explicit") {
    ExplicitTree t;
    const json& children = field(j, "children");
    if (!children.is_object()) throw ParseError("'children' must be an object");
    for (const auto& [key, count] : children.items()) {
      if (!count.is_number_unsigned()) throw ParseError("child counts must be non-negative");
      t.children[parse_address_key(key)] = count.get<ChildIndex>();
    }
    return TreeSpec(std::move(t));
  }
  if (kind != "programmatic") throw ParseError("unknown tree kind '" + kind + "'");

  AutomatonTree a;
  std::map<std::string, std::size_t> index;
  for (const auto& s : field(j, "states")) {
    const std::string name = s.is_string() ? s.get<std::string>() : s.dump();
    if (!index.emplace(name, a.states.size()).second) {
      throw ParseError("duplicate state '" + name + "'");
    }
    a.states.push_back(name);
  }
  auto state_of = [&](const json& s) {
    const std::string name = s.is_string() ? s.get<std::string>() : s.dump();
    const auto it = index.find(name);
    return it == index.end() ? a.states.size() : it->second;  // out of range => violation
  };
  a.initial = state_of(field(j, "initial"));
  const json& counts = field(j, "counts");
  const json& delta = field(j, "delta");
  for (const auto& name : a.states) {
    const auto c = counts.find(name);
    if (c == counts.end() || !c->is_number_unsigned()) {
      throw ParseError("missing or negative child count for state '" + name + "'");
    }
    a.counts.push_back(c->get<ChildIndex>());
    std::vector<std::size_t> row;
    if (const auto d = delta.find(name); d != delta.end()) {
      if (!d->is_array()) throw ParseError("delta entries must be arrays of states");
      for (const auto& target : *d) row.push_back(state_of(target));
    }
    a.transitions.push_back(std::move(row));
  }
  return TreeSpec(std::move(a));
}

json to_json(const TreeSpec& spec) {
  if (const auto* t = std::get_if<ExplicitTree>(&spec.kind())) {
    json children = json::object();
    for (const auto& [w, c] : t->children) children[address_key(w)] = c;
    return {{"kind", "explicit"}, {"children", children}};
  }
  const auto& a = std::get<AutomatonTree>(spec.kind());
  json counts = json::object();
  json delta = json::object();
  for (std::size_t s = 0; s < a.states.size(); ++s) {
    counts[a.states[s]] = a.counts.at(s);
    json row = json::array();
    for (const auto target : a.transitions.at(s)) row.push_back(a.states.at(target));
    delta[a.states[s]] = row;
  }
  return {{"kind", "programmatic"},
          {"states", a.states},
          {"initial", a.states.at(a.initial)},
          {"counts", counts},
          {"delta", delta}};
}

json to_json(const Point& p) {
  if (p.is_root()) return {{"root", true}};
  return {{"vertex", p.vertex().word}, {"t", to_json(p.offset())}};
}

Point point_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("point must be a JSON object");
  if (const auto r = j.find("root"); r != j.end() && r->is_boolean() && r->get<bool>()) {
    return Point::root();
  }
  VertexAddress v{word_from_json(field(j, "vertex"), "vertex")};
  const auto t = j.find("t");
  Dyadic offset = t == j.end() ? Dyadic(1) : dyadic_from_json(*t);
  if (v.is_root() && offset == Dyadic(1)) return Point::root();
  try {
    return Point::on_edge(std::move(v), std::move(offset));
  } catch (const OutOfRange& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Ray& r) { return {{"prefix", r.prefix}, {"cycle", r.cycle}}; }

Ray ray_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("ray must be a JSON object");
  Ray r;
  if (const auto p = j.find("prefix"); p != j.end()) r.prefix = word_from_json(*p, "prefix");
  r.cycle = word_from_json(field(j, "cycle"), "cycle");
  if (r.cycle.empty()) throw ParseError("ray cycle must be non-empty");
  return r;
}

json to_json(const ExtPoint& a) {
  return std::visit([](const auto& v) { return to_json(v); }, a);
}

ExtPoint ext_point_from_json(const json& j) {
  if (j.is_object() && j.contains("cycle")) return ray_from_json(j);
  return point_from_json(j);
}

json to_json(const ValidationReport& r) {
  json j = {{"valid", r.valid()}, {"violations", r.violations}, {"infinite", r.infinite}};
  if (r.vertex_count) j["vertex_count"] = *r.vertex_count;
  if (r.max_depth) j["max_depth"] = *r.max_depth;
  return j;
}

json to_json(const TransferCertificate& c, bool include_samples) {
  json j = {{"delta", threshold_string(c.delta)},
            {"N", c.n},
            {"sigma", to_json(c.sigma)},
            {"complex",
             {{"vertices", c.complex.vertices.size()},
              {"edges", c.complex.edges.size()},
              {"dimension", c.complex.dimension()}}},
            {"max_track", to_json(c.max_track_diameter)},
            {"verdict", c.pass ? "pass" : "fail"}};
  json samples = json::array();
  if (include_samples) {
    for (const auto& s : c.samples) {
      samples.push_back({{"point", to_json(s.point)},
                         {"projected", to_json(s.projected)},
                         {"track", to_json(s.diameter)}});
    }
  }
  j["sample_count"] = c.samples.size();
  j["samples"] = std::move(samples);
  return j;
}

json to_json(const SuiteReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    json witnesses = json::array();
    for (const auto& w : f.witnesses) witnesses.push_back(to_json(w));
    json values = json::object();
    for (const auto& [k, v] : f.values) values[k] = v;
    failures.push_back({{"sample", f.sample_index},
                        {"check", f.check},
                        {"witnesses", witnesses},
                        {"values", values}});
  }
  return {{"suite", r.suite},
          {"checks", r.checks},
          {"failures", failures},
          {"verdict", r.pass() ? "pass" : "fail"}};
}

json load_json_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
      return json::parse(text);
    }
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open '" + text + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace treexfer
