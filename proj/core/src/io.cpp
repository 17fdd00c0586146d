// Copyright 2026 The naive-a Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "naive_a/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "naive_a/errors.hpp"
#include "naive_a/generators.hpp"

namespace naive_a {
namespace {

using nlohmann::json;

Rational to_rational(const json& v, const std::string& what) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw MalformedInput(what + " must be a rational string or an integer");
}

Count to_count(const json& v, const std::string& what) {
  if (v.is_number_unsigned()) return v.get<Count>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<Count>(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    Rational r = Rational::parse(v.get<std::string>());
    if (r.is_integer() && !r.is_negative()) return static_cast<Count>(r.num());
  }
  throw MalformedInput(what + " must be a nonnegative integer");
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw MalformedInput(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw MalformedInput("missing field '" + std::string(key) + "' in " + where);
  }
  return *it;
}

Space parse_space(const json& j) {
  const json& pts = field(j, "points", "space");
  if (!pts.is_array()) throw MalformedInput("space.points must be an array");
  std::vector<PointId> ids;
  for (const auto& p : pts) {
    if (!p.is_string()) throw MalformedInput("point ids must be strings");
    ids.push_back(p.get<std::string>());
  }
  const json& metric = field(j, "metric", "space");
  const std::string type = field(metric, "type", "space.metric").get<std::string>();
  if (type == "matrix") {
    const json& rows = field(metric, "matrix", "space.metric");
    std::vector<std::vector<Dist>> table;
    for (const auto& row : rows) {
      std::vector<Dist> r;
      for (const auto& v : row) r.push_back(to_rational(v, "distance"));
      table.push_back(std::move(r));
    }
    return Space::from_matrix(std::move(ids), table);
  }
  if (type == "graph") {
    std::vector<WeightedEdge> edges;
    for (const auto& e : field(metric, "edges", "space.metric")) {
      if (!e.is_array() || e.size() != 3) {
        throw MalformedInput("graph edges are [a, b, weight] triples");
      }
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                       to_rational(e[2], "edge weight")});
    }
    return Space::from_graph(std::move(ids), edges);
  }
  if (type == "generator") {
    GeneratorSpec spec;
    for (const auto& [key, value] : metric.items()) {
      if (key == "type") continue;
      std::string text = value.is_string() ? value.get<std::string>() : value.dump();
      if (key == "kind") {
        spec.kind = text;
      } else {
        spec.params[key] = text;
      }
    }
    Space space = generated_space(spec);
    std::vector<PointId> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), space.ids().begin(),
                    space.ids().end())) {
      throw MalformedInput("space.points does not match the generated metric");
    }
    return space;
  }
  throw MalformedInput("unknown metric type '" + type + "'");
}

std::string chain_key(const Space& space, AugPoint p) {
  if (p.is_base()) return space.id(p.point());
  return std::to_string(p.component()) + "#" + std::to_string(p.index());
}

json certificate_json(const Space& space, const Certificate& c) {
  json j;
  j["L"] = c.L;
  j["N"] = c.N;
  j["bounds"] = {{"case1", c.case1_bound.to_string()},
                 {"case2", c.case2_bound.to_string()},
                 {"case3", c.case3_bound.to_string()}};
  j["bound_radius"] = c.bound_radius.to_string();
  j["worst_ratio"] = c.worst_ratio.to_string();
  j["input_worst_ratio"] = c.input_worst_ratio.to_string();
  j["worst_radius"] = c.worst_radius.to_string();
  j["branch_3b_pairs"] = c.branch_3b_pairs;
  json cases = json::object();
  json radii = json::object();
  for (PointIndex x = 0; x < c.cases.size(); ++x) {
    cases[space.id(x)] = std::string(to_string(c.cases[x]));
    radii[space.id(x)] = c.radii[x].to_string();
  }
  j["cases"] = std::move(cases);
  j["radii"] = std::move(radii);
  json pairs = json::array();
  for (const auto& p : c.pairs) {
    pairs.push_back({{"x", space.id(p.x)},
                     {"y", space.id(p.y)},
                     {"input_ratio", p.input.to_string()},
                     {"output_ratio", p.output.to_string()}});
  }
  j["pairs"] = std::move(pairs);
  j["violations"] = c.violations;
  return j;
}

std::string string_field(const json& obj, const char* key,
                         const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) {
    throw MalformedInput("field '" + std::string(key) + "' in " + where +
                         " must be a string");
  }
  return v.get<std::string>();
}

Certificate parse_certificate(const json& j, const Space& space) {
  const std::string where = "certificate";
  Certificate c;
  c.L = field(j, "L", where).get<std::int64_t>();
  c.N = field(j, "N", where).get<std::int64_t>();
  const json& bounds = field(j, "bounds", where);
  c.case1_bound = Rational::parse(string_field(bounds, "case1", "bounds"));
  c.case2_bound = Rational::parse(string_field(bounds, "case2", "bounds"));
  c.case3_bound = Rational::parse(string_field(bounds, "case3", "bounds"));
  c.bound_radius = Rational::parse(string_field(j, "bound_radius", where));
  c.worst_ratio = Ratio::parse(string_field(j, "worst_ratio", where));
  c.input_worst_ratio = Ratio::parse(string_field(j, "input_worst_ratio", where));
  c.worst_radius = Rational::parse(string_field(j, "worst_radius", where));
  c.branch_3b_pairs = field(j, "branch_3b_pairs", where).get<std::uint64_t>();
  const json& cases = field(j, "cases", where);
  const json& radii = field(j, "radii", where);
  c.cases.resize(space.size());
  c.radii.resize(space.size());
  for (PointIndex x = 0; x < space.size(); ++x) {
    c.cases[x] = parse_step_case(string_field(cases, space.id(x).c_str(), "cases"));
    c.radii[x] = Rational::parse(string_field(radii, space.id(x).c_str(), "radii"));
  }
  for (const auto& p : field(j, "pairs", where)) {
    c.pairs.push_back(
        {space.index_of(string_field(p, "x", "pair")),
         space.index_of(string_field(p, "y", "pair")),
         Ratio::parse(string_field(p, "input_ratio", "pair")),
         Ratio::parse(string_field(p, "output_ratio", "pair"))});
  }
  for (const auto& v : field(j, "violations", where)) {
    c.violations.push_back(v.get<std::string>());
  }
  return c;
}

template <typename Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  return guarded([&] {
    json j = json::parse(text);
    Space space = parse_space(field(j, "space", "instance"));

    if (auto it = j.find("unbounded_hints"); it != j.end()) {
      std::vector<UnboundedHint> hints;
      for (const auto& h : *it) {
        UnboundedHint hint;
        hint.component_of = string_field(h, "component_of", "unbounded hint");
        for (const auto& r : field(h, "ray", "unbounded hint")) {
          hint.ray.push_back(r.get<std::string>());
        }
        hints.push_back(std::move(hint));
      }
      space.set_hints(std::move(hints));
    }

    const json& params = field(j, "params", "instance");
    Rational R = to_rational(field(params, "R", "params"), "R");
    Rational epsilon = to_rational(field(params, "epsilon", "params"), "epsilon");
    Dist S = to_rational(field(params, "S", "params"), "S");

    std::optional<SetFamily> sets;
    ChainFamily chains;
    bool has_chains = j.contains("chains");
    if (j.contains("sets")) {
      SetFamily sf;
      sf.sets.resize(space.size());
      std::uint32_t max_level = 0;
      for (const auto& [x, set] : j["sets"].items()) {
        auto& dst = sf.sets[space.index_of(x)];
        for (const auto& e : set) {
          if (!e.is_array() || e.size() != 2) {
            throw MalformedInput("set elements are [pointId, level] pairs");
          }
          auto level = static_cast<std::uint32_t>(to_count(e[1], "level"));
          max_level = std::max(max_level, level);
          dst.emplace_back(space.index_of(e[0].get<std::string>()), level);
        }
      }
      sf.multiplicity_bound =
          j.contains("multiplicity_bound")
              ? static_cast<std::uint32_t>(
                    to_count(j["multiplicity_bound"], "multiplicity_bound"))
              : max_level + 1;
      if (!has_chains) chains = from_sets(sf);
      sets = std::move(sf);
    }
    if (has_chains) {
      chains.assign(space.size(), Chain());
      for (const auto& [x, entries] : j["chains"].items()) {
        Chain& c = chains[space.index_of(x)];
        for (const auto& [z, v] : entries.items()) {
          c.add(AugPoint::base(space.index_of(z)), to_count(v, "chain entry"));
        }
      }
    }
    if (!has_chains && !sets) {
      throw MalformedInput("instance has neither chains nor sets");
    }
    return Instance{std::move(space), std::move(chains), std::move(sets), R,
                    epsilon, S};
  });
}

std::string serialize_instance(const Instance& inst) {
  const Space& space = inst.space;
  json j;
  json sp;
  sp["points"] = std::vector<std::string>(space.ids().begin(), space.ids().end());
  json metric;
  if (const auto& gen = space.generator()) {
    metric["type"] = "generator";
    metric["kind"] = gen->kind;
    for (const auto& [k, v] : gen->params) metric[k] = v;
  } else {
    metric["type"] = "matrix";
    json rows = json::array();
    for (PointIndex a = 0; a < space.size(); ++a) {
      json row = json::array();
      for (PointIndex b = 0; b < space.size(); ++b) {
        row.push_back(space.distance(a, b).to_string());
      }
      rows.push_back(std::move(row));
    }
    metric["matrix"] = std::move(rows);
  }
  sp["metric"] = std::move(metric);
  j["space"] = std::move(sp);
  j["params"] = {{"R", inst.R.to_string()},
                 {"epsilon", inst.epsilon.to_string()},
                 {"S", inst.S.to_string()}};
  if (inst.sets) {
    json sets = json::object();
    for (PointIndex x = 0; x < inst.sets->sets.size(); ++x) {
      auto elems = inst.sets->sets[x];
      std::sort(elems.begin(), elems.end());
      json arr = json::array();
      for (const auto& [z, level] : elems) arr.push_back({space.id(z), level});
      sets[space.id(x)] = std::move(arr);
    }
    j["sets"] = std::move(sets);
    j["multiplicity_bound"] = inst.sets->multiplicity_bound;
  } else {
    json chains = json::object();
    for (PointIndex x = 0; x < inst.chains.size(); ++x) {
      json c = json::object();
      for (const auto& [p, v] : inst.chains[x]) c[chain_key(space, p)] = v;
      chains[space.id(x)] = std::move(c);
    }
    j["chains"] = std::move(chains);
  }
  if (!space.hints().empty()) {
    json hints = json::array();
    for (const auto& h : space.hints()) {
      hints.push_back({{"component_of", h.component_of}, {"ray", h.ray}});
    }
    j["unbounded_hints"] = std::move(hints);
  }
  return j.dump(1) + "\n";
}

std::string serialize_output(const Space& space, const SubsetFamily& subsets,
                             const Certificate& certificate) {
  json j;
  json subs = json::object();
  for (PointIndex x = 0; x < subsets.size(); ++x) {
    json arr = json::array();
    for (PointIndex y : subsets[x]) arr.push_back(space.id(y));
    subs[space.id(x)] = std::move(arr);
  }
  j["subsets"] = std::move(subs);
  j["certificate"] = certificate_json(space, certificate);
  return j.dump(1) + "\n";
}

RunOutput parse_output(std::string_view text, const Space& space) {
  return guarded([&] {
    json j = json::parse(text);
    RunOutput out;
    const json& subs = field(j, "subsets", "output");
    out.subsets.resize(space.size());
    for (PointIndex x = 0; x < space.size(); ++x) {
      const json& arr = field(subs, space.id(x).c_str(), "subsets");
      auto& dst = out.subsets[x];
      for (const auto& y : arr) dst.push_back(space.index_of(y.get<std::string>()));
      std::sort(dst.begin(), dst.end());
      if (std::adjacent_find(dst.begin(), dst.end()) != dst.end()) {
        throw MalformedInput("A_" + space.id(x) + " lists a point twice");
      }
    }
    out.certificate = parse_certificate(field(j, "certificate", "output"), space);
    return out;
  });
}

std::string describe_plan(const Space& space, const InstanceParams& params,
                          const TailorPlan& plan) {
  std::ostringstream os;
  os << "points " << space.size() << ", R " << params.R << ", epsilon "
     << params.epsilon << ", S " << params.S << ", L " << params.L << ", N "
     << params.N << "\n";
  os << "annulus (" << plan.inner << ", " << plan.outer << "]\n";
  os << "components " << plan.decomposition.components.size() << "\n";
  for (const auto& c : plan.decomposition.components) {
    os << "  #" << c.id << " size " << c.points.size() << " basepoint "
       << space.id(c.basepoint) << " " << to_string(c.cls);
    if (!c.ray.empty()) os << " ray-length " << c.ray.size();
    const auto& z = plan.annulus[c.id];
    if (!z.empty()) {
      os << " z=[";
      for (std::size_t i = 0; i < z.size(); ++i) {
        os << (i ? "," : "") << space.id(z[i]);
      }
      os << "]";
    }
    os << "\n";
  }
  for (const auto& w : plan.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string format_chain(const Space& space, const Chain& chain) {
  std::string out = "{";
  bool first = true;
  for (const auto& [p, v] : chain) {
    if (!first) out += ", ";
    first = false;
    out += chain_key(space, p) + ":" + std::to_string(v);
  }
  return out + "}";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace naive_a
