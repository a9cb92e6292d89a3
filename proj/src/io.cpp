// Copyright 2026 The continuum-alloc Authors
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

#include "continuum/io.hpp"

#include <yaml-cpp/yaml.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "continuum/error.hpp"
#include "continuum/geo.hpp"
#include "continuum/log.hpp"

namespace continuum {

// ---------------------------------------------------------------------------
// Primitives
// ---------------------------------------------------------------------------

std::string canonical_bytes(const Json& j) { return j.dump(2) + "\n"; }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json json_double(double v) { return Json(Json(v).dump()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed for '" + path + "'");
}

bool file_exists(const std::string& path) {
  std::error_code ec;
  return std::filesystem::exists(path, ec);
}

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Json yaml_to_json(const YAML::Node& node) {
  switch (node.Type()) {
    case YAML::NodeType::Null:
    case YAML::NodeType::Undefined:
      return nullptr;
    case YAML::NodeType::Scalar: {
      const std::string& raw = node.Scalar();
      if (node.Tag() == "!") return raw;  // quoted scalar stays a string
      if (raw == "true") return true;
      if (raw == "false") return false;
      if (raw == "null" || raw == "~") return nullptr;
      if (is_integer_literal(raw)) {
        try {
          if (raw[0] == '-') return static_cast<std::int64_t>(std::stoll(raw));
          return static_cast<std::uint64_t>(std::stoull(raw));
        } catch (const std::exception&) {
          return raw;
        }
      }
      // Decimal and free-text scalars pass through as strings; readers
      // accept number-or-string for every decimal field.
      return raw;
    }
    case YAML::NodeType::Sequence: {
      Json arr = Json::array();
      for (const auto& item : node) arr.push_back(yaml_to_json(item));
      return arr;
    }
    case YAML::NodeType::Map: {
      Json obj = Json::object();
      for (const auto& kv : node) obj[kv.first.Scalar()] = yaml_to_json(kv.second);
      return obj;
    }
  }
  return nullptr;
}

void emit_yaml(YAML::Emitter& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      out << YAML::Null;
      return;
    case Json::value_t::boolean:
      out << j.get<bool>();
      return;
    case Json::value_t::number_integer:
      out << j.get<std::int64_t>();
      return;
    case Json::value_t::number_unsigned:
      out << j.get<std::uint64_t>();
      return;
    case Json::value_t::number_float:
      out << YAML::DoubleQuoted << Json(j.get<double>()).dump();
      return;
    case Json::value_t::string:
      out << YAML::DoubleQuoted << j.get<std::string>();
      return;
    case Json::value_t::array:
      out << YAML::BeginSeq;
      for (const auto& item : j) emit_yaml(out, item);
      out << YAML::EndSeq;
      return;
    default:
      out << YAML::BeginMap;
      for (const auto& [key, value] : j.items()) {
        out << YAML::Key << YAML::DoubleQuoted << key << YAML::Value;
        emit_yaml(out, value);
      }
      out << YAML::EndMap;
      return;
  }
}

bool has_yaml_extension(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return false;
  const std::string ext = path.substr(dot + 1);
  return ext == "yaml" || ext == "yml";
}

}  // namespace

Json load_structured_file(const std::string& path) {
  const std::string bytes = read_file(path);
  if (has_yaml_extension(path)) {
    try {
      return yaml_to_json(YAML::Load(bytes));
    } catch (const YAML::Exception& e) {
      throw ParseError("YAML parse error in '" + path + "': " + e.what());
    }
  }
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw ParseError("JSON parse error in '" + path + "': " + e.what());
  }
}

void save_structured_file(const std::string& path, const Json& j) {
  if (has_yaml_extension(path)) {
    YAML::Emitter out;
    emit_yaml(out, j);
    write_file(path, std::string(out.c_str()) + "\n");
  } else {
    write_file(path, canonical_bytes(j));
  }
}

// ---------------------------------------------------------------------------
// Typed access
// ---------------------------------------------------------------------------

const Json& require_key(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(path + "/" + key + ": missing required key");
  }
  return j.at(key);
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path + ": expected a string");
  return j.get<std::string>();
}

std::int64_t get_int(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_unsigned()) return static_cast<std::int64_t>(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return std::stoll(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw SchemaError(path + ": expected an integer");
}

std::uint64_t get_uint64(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v >= 0) return static_cast<std::uint64_t>(v);
  }
  if (j.is_string()) {
    try {
      return std::stoull(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw SchemaError(path + ": expected a non-negative integer");
}

double get_double(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      std::size_t used = 0;
      const std::string s = j.get<std::string>();
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw SchemaError(path + ": expected a number");
}

Fixed4 get_fixed4(const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Fixed4::from_int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) {
      return Fixed4::from_int(static_cast<std::int64_t>(j.get<std::uint64_t>()));
    }
    if (j.is_number_float()) return Fixed4::from_double(j.get<double>());
    if (j.is_string()) return Fixed4::from_string(j.get<std::string>());
  } catch (const ParseError& e) {
    throw SchemaError(path + ": " + e.what());
  }
  throw SchemaError(path + ": expected a decimal value");
}

// ---------------------------------------------------------------------------
// Resource vectors, geo
// ---------------------------------------------------------------------------

Json resource_vector_to_json(const ResourceVector& v) {
  Json j = Json::object();
  for (Dim d : kAllDims) j[std::string(dim_field_name(d))] = v[d].str();
  return j;
}

ResourceVector resource_vector_from_json(const Json& j, const std::string& path,
                                         bool require_all_dims) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  ResourceVector v;
  for (Dim d : kAllDims) {
    const std::string key(dim_field_name(d));
    if (!j.contains(key)) {
      if (require_all_dims) throw SchemaError(path + "/" + key + ": missing dimension");
      continue;
    }
    v[d] = get_fixed4(j.at(key), path + "/" + key);
    if (v[d].is_negative()) throw SchemaError(path + "/" + key + ": negative value");
  }
  return v;
}

namespace {

Json geo_to_json(const GeoPoint& p, bool with_elevation = true) {
  Json j;
  j["lat"] = json_double(p.latitude_deg);
  j["lon"] = json_double(p.longitude_deg);
  if (with_elevation) j["elev_m"] = json_double(p.elevation_m);
  return j;
}

GeoPoint geo_from_json(const Json& j, const std::string& path) {
  GeoPoint p;
  p.latitude_deg = get_double(require_key(j, "lat", path), path + "/lat");
  p.longitude_deg = get_double(require_key(j, "lon", path), path + "/lon");
  if (j.contains("elev_m")) p.elevation_m = get_double(j.at("elev_m"), path + "/elev_m");
  if (!geo_point_valid(p)) throw SchemaError(path + ": coordinates out of range");
  return p;
}

}  // namespace

Json zone_to_json(const Zone& z) {
  Json verts = Json::array();
  for (const GeoPoint& v : z.vertices) verts.push_back(geo_to_json(v, false));
  Json j;
  j["vertices"] = std::move(verts);
  return j;
}

Zone zone_from_json(const Json& j, const std::string& path) {
  Zone z;
  const Json& verts = require_key(j, "vertices", path);
  if (!verts.is_array()) throw SchemaError(path + "/vertices: expected an array");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    z.vertices.push_back(geo_from_json(verts.at(i), path + "/vertices/" + std::to_string(i)));
  }
  const std::string err = zone_validation_error(z);
  if (!err.empty()) throw SchemaError(path + ": " + err);
  return z;
}

// ---------------------------------------------------------------------------
// Topology
// ---------------------------------------------------------------------------

Json topology_to_json(const Topology& t) {
  Json nodes = Json::array();
  for (const Node& n : t.nodes) {
    Json jn;
    jn["id"] = n.node_id;
    jn["type"] = std::string(node_type_name(n.node_type));
    jn["tier"] = std::string(tier_name(n.tier));
    jn["provider"] = n.context.provider;
    jn["location"] = geo_to_json(n.context.location);
    jn["base_price"] = n.context.base_price.str();
    Json modes = Json::array();
    for (const OperationalMode& m : n.modes) {
      Json jm;
      jm["id"] = m.mode_id;
      jm["capacity"] = resource_vector_to_json(m.capacity);
      jm["unit_prices"] = resource_vector_to_json(m.unit_prices);
      if (m.base_price) jm["base_price"] = m.base_price->str();
      modes.push_back(std::move(jm));
    }
    jn["modes"] = std::move(modes);
    nodes.push_back(std::move(jn));
  }
  Json rules = Json::array();
  for (const BusinessRule& r : t.rules) {
    Json jr;
    jr["kind"] = r.kind == RuleKind::provider_exclusion ? "provider_exclusion"
                                                        : "node_exclusion";
    jr["a"] = r.a;
    jr["b"] = r.b;
    rules.push_back(std::move(jr));
  }
  Json j;
  j["currency"] = t.currency;
  j["nodes"] = std::move(nodes);
  j["rules"] = std::move(rules);
  return j;
}

std::vector<BusinessRule> rules_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("/rules: expected an array");
  std::vector<BusinessRule> rules;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string path = "/rules/" + std::to_string(i);
    const Json& jr = j.at(i);
    BusinessRule r;
    const std::string kind = get_string(require_key(jr, "kind", path), path + "/kind");
    if (kind == "provider_exclusion") {
      r.kind = RuleKind::provider_exclusion;
    } else if (kind == "node_exclusion") {
      r.kind = RuleKind::node_exclusion;
    } else {
      throw SchemaError(path + "/kind: unknown rule kind '" + kind + "'");
    }
    r.a = get_string(require_key(jr, "a", path), path + "/a");
    r.b = get_string(require_key(jr, "b", path), path + "/b");
    if (r.a == r.b) throw SchemaError(path + ": rule endpoints must differ");
    rules.push_back(std::move(r));
  }
  return rules;
}

Topology topology_from_json(const Json& j) {
  Topology t;
  t.currency = get_string(require_key(j, "currency", ""), "/currency");
  const Json& nodes = require_key(j, "nodes", "");
  if (!nodes.is_array()) throw SchemaError("/nodes: expected an array");
  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string path = "/nodes/" + std::to_string(i);
    const Json& jn = nodes.at(i);
    Node n;
    n.node_id = get_string(require_key(jn, "id", path), path + "/id");
    if (n.node_id.empty()) throw SchemaError(path + "/id: empty node id");
    if (n.node_id.find('#') != std::string::npos) {
      throw SchemaError(path + "/id: '#' is reserved for add-on ids");
    }
    if (!seen_ids.insert(n.node_id).second) {
      throw SchemaError(path + "/id: duplicate node id '" + n.node_id + "'");
    }
    const std::string type = get_string(require_key(jn, "type", path), path + "/type");
    const auto node_type = node_type_from_name(type);
    if (!node_type) throw SchemaError(path + "/type: unknown node type '" + type + "'");
    n.node_type = *node_type;
    const std::string tier = get_string(require_key(jn, "tier", path), path + "/tier");
    const auto tier_value = tier_from_name(tier);
    if (!tier_value) throw SchemaError(path + "/tier: unknown tier '" + tier + "'");
    n.tier = *tier_value;
    n.context.provider =
        get_string(require_key(jn, "provider", path), path + "/provider");
    if (n.context.provider.empty()) throw SchemaError(path + "/provider: empty provider");
    n.context.location = geo_from_json(require_key(jn, "location", path), path + "/location");
    if (jn.contains("base_price")) {
      n.context.base_price = get_fixed4(jn.at("base_price"), path + "/base_price");
      if (n.context.base_price.is_negative()) {
        throw SchemaError(path + "/base_price: negative price");
      }
    }
    const Json& modes = require_key(jn, "modes", path);
    if (!modes.is_array() || modes.empty()) {
      throw SchemaError(path + "/modes: at least one mode required");
    }
    std::set<std::string> mode_ids;
    for (std::size_t mi = 0; mi < modes.size(); ++mi) {
      const std::string mpath = path + "/modes/" + std::to_string(mi);
      const Json& jm = modes.at(mi);
      OperationalMode m;
      m.mode_id = get_string(require_key(jm, "id", mpath), mpath + "/id");
      if (!mode_ids.insert(m.mode_id).second) {
        throw SchemaError(mpath + "/id: duplicate mode id '" + m.mode_id + "'");
      }
      m.capacity = resource_vector_from_json(require_key(jm, "capacity", mpath),
                                             mpath + "/capacity");
      if (jm.contains("unit_prices")) {
        m.unit_prices = resource_vector_from_json(jm.at("unit_prices"), mpath + "/unit_prices");
      }
      if (jm.contains("base_price")) {
        m.base_price = get_fixed4(jm.at("base_price"), mpath + "/base_price");
        if (m.base_price->is_negative()) throw SchemaError(mpath + "/base_price: negative price");
      }
      n.modes.push_back(std::move(m));
    }
    t.nodes.push_back(std::move(n));
  }
  if (j.contains("rules")) t.rules = rules_from_json(j.at("rules"));

  // Provider exclusions naming absent providers are inert: warn, keep.
  std::set<std::string> providers;
  for (const Node& n : t.nodes) providers.insert(n.context.provider);
  for (const BusinessRule& r : t.rules) {
    if (r.kind != RuleKind::provider_exclusion) continue;
    if (!providers.contains(r.a) || !providers.contains(r.b)) {
      log_warn("inert provider exclusion (" + r.a + ", " + r.b +
               "): provider not present in topology");
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Demand, request
// ---------------------------------------------------------------------------

Json demand_to_json(const DemandFile& d) {
  Json j;
  j["vector"] = resource_vector_to_json(d.demand.vector);
  j["zone"] = zone_to_json(d.demand.zone);
  j["user_count"] = d.demand.user_count;
  j["profile_id"] = d.profile_id;
  j["seed"] = d.seed;
  return j;
}

DemandFile demand_from_json(const Json& j) {
  DemandFile d;
  d.demand.vector = resource_vector_from_json(require_key(j, "vector", ""), "/vector");
  d.demand.zone = zone_from_json(require_key(j, "zone", ""), "/zone");
  d.demand.user_count = get_int(require_key(j, "user_count", ""), "/user_count");
  if (d.demand.user_count < 0) throw SchemaError("/user_count: negative user count");
  if (j.contains("profile_id")) d.profile_id = get_string(j.at("profile_id"), "/profile_id");
  if (j.contains("seed")) d.seed = get_uint64(j.at("seed"), "/seed");
  return d;
}

Json request_to_json(const Request& r) {
  Json j;
  j["max_nodes"] = r.max_nodes;
  j["max_distance_m"] = r.max_distance_m.str();
  j["max_price"] = r.max_price ? Json(r.max_price->str()) : Json("unbounded");
  Json providers = Json::array();
  for (const auto& p : r.allowed_providers) providers.push_back(p);
  j["allowed_providers"] = std::move(providers);
  Json types = Json::array();
  for (NodeType t : r.allowed_node_types) types.push_back(std::string(node_type_name(t)));
  j["allowed_node_types"] = std::move(types);
  return j;
}

Request request_from_json(const Json& j) {
  Request r;
  r.max_nodes = get_int(require_key(j, "max_nodes", ""), "/max_nodes");
  if (r.max_nodes <= 0) throw SchemaError("/max_nodes: must be positive");
  r.max_distance_m = get_fixed4(require_key(j, "max_distance_m", ""), "/max_distance_m");
  if (r.max_distance_m.is_negative()) throw SchemaError("/max_distance_m: negative distance");
  const Json& price = require_key(j, "max_price", "");
  if (price.is_string() && price.get<std::string>() == "unbounded") {
    r.max_price = std::nullopt;
  } else {
    r.max_price = get_fixed4(price, "/max_price");
    if (r.max_price->is_negative()) throw SchemaError("/max_price: negative budget");
  }
  const Json& providers = require_key(j, "allowed_providers", "");
  if (!providers.is_array() || providers.empty()) {
    throw SchemaError("/allowed_providers: non-empty array required");
  }
  for (std::size_t i = 0; i < providers.size(); ++i) {
    r.allowed_providers.insert(
        get_string(providers.at(i), "/allowed_providers/" + std::to_string(i)));
  }
  const Json& types = require_key(j, "allowed_node_types", "");
  if (!types.is_array() || types.empty()) {
    throw SchemaError("/allowed_node_types: non-empty array required");
  }
  for (std::size_t i = 0; i < types.size(); ++i) {
    const std::string path = "/allowed_node_types/" + std::to_string(i);
    const std::string name = get_string(types.at(i), path);
    const auto t = node_type_from_name(name);
    if (!t) throw SchemaError(path + ": unknown node type '" + name + "'");
    r.allowed_node_types.insert(*t);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Pricing documents
// ---------------------------------------------------------------------------

Json pricing_to_json(const PricingDocument& doc) {
  Json j;
  j["spec"] = 1;
  j["currency"] = doc.currency;
  j["state"] = doc.state == DocState::symbolic ? "symbolic" : "instantiated";
  Json features = Json::array();
  for (const auto& f : doc.features) features.push_back(f);
  j["features"] = std::move(features);
  Json limits = Json::array();
  for (const UsageLimit& l : doc.usage_limits) {
    Json jl;
    jl["name"] = l.name;
    jl["aggregation"] = l.aggregation == LimitAggregation::summed ? "summed" : "per_addon";
    limits.push_back(std::move(jl));
  }
  j["usage_limits"] = std::move(limits);
  Json addons = Json::array();
  for (const AddOn& a : doc.addons) {
    Json ja;
    ja["id"] = a.addon_id;
    ja["feature"] = a.feature;
    ja["provider"] = a.provider;
    ja["location"] = geo_to_json(a.location);
    ja["extensions"] = resource_vector_to_json(a.extensions);
    ja["distance_m"] = a.distance_m.str();
    ja["price"] = a.symbolic_price() ? print_price_expression(a.price_expression())
                                     : a.resolved_price().str();
    Json excludes = Json::array();
    for (const auto& e : a.excludes) excludes.push_back(e);
    ja["excludes"] = std::move(excludes);
    addons.push_back(std::move(ja));
  }
  j["addons"] = std::move(addons);
  return j;
}

PricingDocument pricing_from_json(const Json& j) {
  PricingDocument doc;
  const std::int64_t version = get_int(require_key(j, "spec", ""), "/spec");
  if (version != 1) {
    throw SchemaError("/spec: unsupported schema version " + std::to_string(version));
  }
  doc.currency = get_string(require_key(j, "currency", ""), "/currency");
  const std::string state = get_string(require_key(j, "state", ""), "/state");
  if (state == "symbolic") {
    doc.state = DocState::symbolic;
  } else if (state == "instantiated") {
    doc.state = DocState::instantiated;
  } else {
    throw SchemaError("/state: expected 'symbolic' or 'instantiated'");
  }
  if (j.contains("features")) {
    for (std::size_t i = 0; i < j.at("features").size(); ++i) {
      doc.features.insert(
          get_string(j.at("features").at(i), "/features/" + std::to_string(i)));
    }
  }
  if (j.contains("usage_limits")) {
    for (std::size_t i = 0; i < j.at("usage_limits").size(); ++i) {
      const std::string path = "/usage_limits/" + std::to_string(i);
      const Json& jl = j.at("usage_limits").at(i);
      UsageLimit l;
      l.name = get_string(require_key(jl, "name", path), path + "/name");
      const std::string agg =
          get_string(require_key(jl, "aggregation", path), path + "/aggregation");
      if (agg == "summed") {
        l.aggregation = LimitAggregation::summed;
      } else if (agg == "per_addon") {
        l.aggregation = LimitAggregation::per_addon;
      } else {
        throw SchemaError(path + "/aggregation: expected 'summed' or 'per_addon'");
      }
      doc.usage_limits.push_back(std::move(l));
    }
  } else {
    doc.usage_limits = standard_usage_limits();
  }
  const Json& addons = require_key(j, "addons", "");
  if (!addons.is_array()) throw SchemaError("/addons: expected an array");
  for (std::size_t i = 0; i < addons.size(); ++i) {
    const std::string path = "/addons/" + std::to_string(i);
    const Json& ja = addons.at(i);
    AddOn a;
    a.addon_id = get_string(require_key(ja, "id", path), path + "/id");
    a.feature = get_string(require_key(ja, "feature", path), path + "/feature");
    a.provider = get_string(require_key(ja, "provider", path), path + "/provider");
    a.location = geo_from_json(require_key(ja, "location", path), path + "/location");
    a.extensions = resource_vector_from_json(require_key(ja, "extensions", path),
                                             path + "/extensions", /*require_all_dims=*/true);
    a.distance_m = get_fixed4(require_key(ja, "distance_m", path), path + "/distance_m");
    if (a.distance_m.is_negative()) throw SchemaError(path + "/distance_m: negative distance");
    const Json& price = require_key(ja, "price", path);
    if (doc.state == DocState::symbolic) {
      try {
        a.price = parse_price_expression(get_string(price, path + "/price"));
      } catch (const ParseError& e) {
        throw SchemaError(path + "/price: " + e.what());
      }
    } else {
      const Money m = get_fixed4(price, path + "/price");
      if (m.is_negative()) throw SchemaError(path + "/price: negative price");
      a.price = m;
    }
    if (ja.contains("excludes")) {
      for (std::size_t ei = 0; ei < ja.at("excludes").size(); ++ei) {
        a.excludes.insert(get_string(ja.at("excludes").at(ei),
                                     path + "/excludes/" + std::to_string(ei)));
      }
    }
    doc.addons.push_back(std::move(a));
  }
  normalize_document(doc);
  return doc;
}

PricingDocument roundtrip_document(const PricingDocument& doc) {
  PricingDocument normalized = doc;
  normalize_document(normalized);
  const std::string first = canonical_bytes(pricing_to_json(normalized));
  const PricingDocument reparsed = pricing_from_json(Json::parse(first));
  const std::string second = canonical_bytes(pricing_to_json(reparsed));
  if (first != second) {
    throw SchemaError("pricing document canonical form is not a serialization fixed point");
  }
  return reparsed;
}

// ---------------------------------------------------------------------------
// Filters, instances, solutions
// ---------------------------------------------------------------------------

Json filter_to_json(const Filter& f) {
  Json j;
  j["min_usage"] = resource_vector_to_json(f.min_usage);
  j["max_price"] = f.max_price ? Json(f.max_price->str()) : Json("unbounded");
  j["max_cardinality"] = f.max_cardinality;
  j["max_distance_m"] = f.max_distance_m.str();
  Json features = Json::array();
  for (const auto& x : f.allowed_features) features.push_back(x);
  j["allowed_features"] = std::move(features);
  Json providers = Json::array();
  for (const auto& x : f.allowed_providers) providers.push_back(x);
  j["allowed_providers"] = std::move(providers);
  return j;
}

Filter filter_from_json(const Json& j) {
  Filter f;
  f.min_usage = resource_vector_from_json(require_key(j, "min_usage", "/filter"),
                                          "/filter/min_usage");
  const Json& price = require_key(j, "max_price", "/filter");
  if (price.is_string() && price.get<std::string>() == "unbounded") {
    f.max_price = std::nullopt;
  } else {
    f.max_price = get_fixed4(price, "/filter/max_price");
  }
  f.max_cardinality = get_int(require_key(j, "max_cardinality", "/filter"),
                              "/filter/max_cardinality");
  f.max_distance_m = get_fixed4(require_key(j, "max_distance_m", "/filter"),
                                "/filter/max_distance_m");
  for (const auto& x : require_key(j, "allowed_features", "/filter")) {
    f.allowed_features.insert(get_string(x, "/filter/allowed_features"));
  }
  for (const auto& x : require_key(j, "allowed_providers", "/filter")) {
    f.allowed_providers.insert(get_string(x, "/filter/allowed_providers"));
  }
  return f;
}

Json instance_to_json(const ProblemInstance& inst) {
  Json j;
  j["pricing"] = pricing_to_json(inst.pricing);
  j["filter"] = filter_to_json(inst.filter);
  Json prov;
  prov["pricing"] = inst.provenance.pricing;
  prov["demand"] = inst.provenance.demand;
  prov["request"] = inst.provenance.request;
  j["provenance"] = std::move(prov);
  return j;
}

ProblemInstance instance_from_json(const Json& j) {
  ProblemInstance inst;
  inst.pricing = pricing_from_json(require_key(j, "pricing", ""));
  inst.filter = filter_from_json(require_key(j, "filter", ""));
  if (j.contains("provenance")) {
    const Json& prov = j.at("provenance");
    if (prov.contains("pricing")) inst.provenance.pricing = get_string(prov.at("pricing"), "/provenance/pricing");
    if (prov.contains("demand")) inst.provenance.demand = get_string(prov.at("demand"), "/provenance/demand");
    if (prov.contains("request")) inst.provenance.request = get_string(prov.at("request"), "/provenance/request");
  }
  validate_instance(inst);
  return inst;
}

Json solution_to_json(const AllocationSolution& sol) {
  Json j;
  j["status"] = std::string(solve_status_name(sol.status));
  Json selection = Json::array();
  for (const auto& id : sol.selection) selection.push_back(id);
  j["selection"] = std::move(selection);
  j["total_cost"] = sol.total_cost.str();
  j["covered"] = resource_vector_to_json(sol.covered);
  j["solve_time_s"] = json_double(sol.solve_time_s);
  j["nodes_explored"] = sol.nodes_explored;
  return j;
}

AllocationSolution solution_from_json(const Json& j) {
  AllocationSolution sol;
  const std::string status = get_string(require_key(j, "status", ""), "/status");
  if (status == "optimal") {
    sol.status = SolveStatus::optimal;
  } else if (status == "infeasible") {
    sol.status = SolveStatus::infeasible;
  } else {
    throw SchemaError("/status: expected 'optimal' or 'infeasible'");
  }
  for (const auto& id : require_key(j, "selection", "")) {
    sol.selection.insert(get_string(id, "/selection"));
  }
  sol.total_cost = get_fixed4(require_key(j, "total_cost", ""), "/total_cost");
  sol.covered = resource_vector_from_json(require_key(j, "covered", ""), "/covered");
  if (j.contains("solve_time_s")) sol.solve_time_s = get_double(j.at("solve_time_s"), "/solve_time_s");
  if (j.contains("nodes_explored")) sol.nodes_explored = get_int(j.at("nodes_explored"), "/nodes_explored");
  return sol;
}

Json report_to_json(const ValidationReport& report) {
  Json j;
  j["feasible"] = report.feasible;
  Json violations = Json::array();
  for (const Violation& v : report.violations) violations.push_back(v.describe());
  j["violations"] = std::move(violations);
  return j;
}

// ---------------------------------------------------------------------------
// Generator configuration
// ---------------------------------------------------------------------------

EnrichmentConfig enrichment_from_json(const Json& j) {
  EnrichmentConfig cfg;
  cfg.seed = get_uint64(require_key(j, "seed", ""), "/seed");

  const Json& tiers = require_key(j, "tier_probabilities", "");
  for (const auto& [name, value] : tiers.items()) {
    const auto tier = tier_from_name(name);
    if (!tier) throw SchemaError("/tier_probabilities/" + name + ": unknown tier");
    cfg.tier_probabilities[*tier] = get_double(value, "/tier_probabilities/" + name);
  }

  const Json& ranges = require_key(j, "capacity_ranges", "");
  for (const auto& [name, value] : ranges.items()) {
    const auto tier = tier_from_name(name);
    if (!tier) throw SchemaError("/capacity_ranges/" + name + ": unknown tier");
    CapacityRange range;
    for (Dim d : kAllDims) {
      const std::string key(dim_field_name(d));
      const std::string path = "/capacity_ranges/" + name + "/" + key;
      const Json& pair = require_key(value, key, "/capacity_ranges/" + name);
      if (!pair.is_array() || pair.size() != 2) {
        throw SchemaError(path + ": expected [min, max]");
      }
      range.min[d] = get_fixed4(pair.at(0), path + "/0");
      range.max[d] = get_fixed4(pair.at(1), path + "/1");
    }
    cfg.capacity_ranges[*tier] = range;
  }

  const Json& prices = require_key(j, "unit_prices", "");
  for (const auto& [name, by_provider] : prices.items()) {
    const auto tier = tier_from_name(name);
    if (!tier) throw SchemaError("/unit_prices/" + name + ": unknown tier");
    for (const auto& [provider, vec] : by_provider.items()) {
      cfg.unit_prices[{*tier, provider}] =
          resource_vector_from_json(vec, "/unit_prices/" + name + "/" + provider);
    }
  }

  const Json& types = require_key(j, "node_type_probabilities", "");
  for (const auto& [name, dist] : types.items()) {
    const auto tier = tier_from_name(name);
    if (!tier) throw SchemaError("/node_type_probabilities/" + name + ": unknown tier");
    for (const auto& [type_name, p] : dist.items()) {
      const auto type = node_type_from_name(type_name);
      if (!type) {
        throw SchemaError("/node_type_probabilities/" + name + "/" + type_name +
                          ": unknown node type");
      }
      cfg.node_type_probabilities[*tier][*type] =
          get_double(p, "/node_type_probabilities/" + name + "/" + type_name);
    }
  }

  validate_enrichment_config(cfg);
  return cfg;
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

namespace {

double profile_field(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  return get_double(j.at(key), std::string("/") + key);
}

}  // namespace

AppProfile profile_from_json(const Json& j) {
  AppProfile p;
  p.profile_id = get_string(require_key(j, "profile_id", ""), "/profile_id");
  p.p_s = profile_field(j, "p_s", p.p_s);
  p.alpha_s = profile_field(j, "alpha_s", p.alpha_s);
  p.rate_mean = profile_field(j, "rate_mean", p.rate_mean);
  p.rate_cv = profile_field(j, "rate_cv", p.rate_cv);
  p.ram_base_gb = profile_field(j, "ram_base_gb", p.ram_base_gb);
  p.ram_session_gb = profile_field(j, "ram_session_gb", p.ram_session_gb);
  p.beta_s = profile_field(j, "beta_s", p.beta_s);
  p.sto_base_gb = profile_field(j, "sto_base_gb", p.sto_base_gb);
  p.sto_session_gb = profile_field(j, "sto_session_gb", p.sto_session_gb);
  p.t_cpu_s = profile_field(j, "t_cpu_s", p.t_cpu_s);
  p.t_gpu_s = profile_field(j, "t_gpu_s", p.t_gpu_s);
  p.t_tpu_s = profile_field(j, "t_tpu_s", p.t_tpu_s);
  p.u_cpu = profile_field(j, "u_cpu", p.u_cpu);
  p.u_gpu = profile_field(j, "u_gpu", p.u_gpu);
  p.u_tpu = profile_field(j, "u_tpu", p.u_tpu);
  p.phi_gpu = profile_field(j, "phi_gpu", p.phi_gpu);
  p.phi_tpu = profile_field(j, "phi_tpu", p.phi_tpu);
  p.log_gb_per_req = profile_field(j, "log_gb_per_req", p.log_gb_per_req);
  p.retention_window_s = profile_field(j, "retention_window_s", p.retention_window_s);
  validate_profile(p);
  return p;
}

Json profile_to_json(const AppProfile& p) {
  Json j;
  j["profile_id"] = p.profile_id;
  j["p_s"] = json_double(p.p_s);
  j["alpha_s"] = json_double(p.alpha_s);
  j["rate_mean"] = json_double(p.rate_mean);
  j["rate_cv"] = json_double(p.rate_cv);
  j["ram_base_gb"] = json_double(p.ram_base_gb);
  j["ram_session_gb"] = json_double(p.ram_session_gb);
  j["beta_s"] = json_double(p.beta_s);
  j["sto_base_gb"] = json_double(p.sto_base_gb);
  j["sto_session_gb"] = json_double(p.sto_session_gb);
  j["t_cpu_s"] = json_double(p.t_cpu_s);
  j["t_gpu_s"] = json_double(p.t_gpu_s);
  j["t_tpu_s"] = json_double(p.t_tpu_s);
  j["u_cpu"] = json_double(p.u_cpu);
  j["u_gpu"] = json_double(p.u_gpu);
  j["u_tpu"] = json_double(p.u_tpu);
  j["phi_gpu"] = json_double(p.phi_gpu);
  j["phi_tpu"] = json_double(p.phi_tpu);
  j["log_gb_per_req"] = json_double(p.log_gb_per_req);
  j["retention_window_s"] = json_double(p.retention_window_s);
  return j;
}

// ---------------------------------------------------------------------------
// Suite specs
// ---------------------------------------------------------------------------

SuiteSpec suite_from_json(const Json& j) {
  SuiteSpec spec;
  spec.master_seed = get_uint64(require_key(j, "master_seed", ""), "/master_seed");
  spec.instances_per_type =
      get_int(require_key(j, "instances_per_type", ""), "/instances_per_type");
  if (spec.instances_per_type < 1) {
    throw SchemaError("/instances_per_type: must be at least 1");
  }
  if (j.contains("fixed_nodes_for_demand_sweep")) {
    spec.fixed_nodes_for_demand_sweep =
        get_int(j.at("fixed_nodes_for_demand_sweep"), "/fixed_nodes_for_demand_sweep");
  }
  if (j.contains("fixed_users_for_node_sweep")) {
    spec.fixed_users_for_node_sweep =
        get_int(j.at("fixed_users_for_node_sweep"), "/fixed_users_for_node_sweep");
  }
  for (const auto& app : require_key(j, "apps", "")) {
    spec.apps.push_back(get_string(app, "/apps"));
  }
  for (const auto& scale : require_key(j, "scales", "")) {
    spec.scales.push_back(get_string(scale, "/scales"));
  }
  for (const auto& p : require_key(j, "allowed_providers", "")) {
    spec.allowed_providers.insert(get_string(p, "/allowed_providers"));
  }
  if (spec.allowed_providers.empty()) {
    throw SchemaError("/allowed_providers: non-empty list required");
  }
  if (j.contains("rules")) spec.rules = rules_from_json(j.at("rules"));

  const auto parse_range = [](const Json& pair, const std::string& path) -> IntRange {
    if (!pair.is_array() || pair.size() != 2) throw SchemaError(path + ": expected [min, max]");
    const IntRange range{get_int(pair.at(0), path + "/0"), get_int(pair.at(1), path + "/1")};
    if (range.first > range.second) throw SchemaError(path + ": min exceeds max");
    return range;
  };

  const Json& node_ranges = require_key(j, "node_ranges", "");
  for (const auto& [scale, pair] : node_ranges.items()) {
    spec.node_ranges[scale] = parse_range(pair, "/node_ranges/" + scale);
  }
  const Json& user_ranges = require_key(j, "user_ranges", "");
  for (const auto& [app, by_scale] : user_ranges.items()) {
    for (const auto& [scale, pair] : by_scale.items()) {
      spec.user_ranges[{app, scale}] = parse_range(pair, "/user_ranges/" + app + "/" + scale);
    }
  }

  const Json& requests = require_key(j, "requests", "");
  for (const auto& [app, by_scale] : requests.items()) {
    for (const auto& [scale, jr] : by_scale.items()) {
      const std::string path = "/requests/" + app + "/" + scale;
      RequestTemplate tmpl;
      tmpl.max_distance_m =
          get_fixed4(require_key(jr, "max_distance_m", path), path + "/max_distance_m");
      tmpl.max_nodes = get_int(require_key(jr, "max_nodes", path), path + "/max_nodes");
      for (const auto& t : require_key(jr, "allowed_node_types", path)) {
        const std::string name = get_string(t, path + "/allowed_node_types");
        const auto type = node_type_from_name(name);
        if (!type) {
          throw SchemaError(path + "/allowed_node_types: unknown node type '" + name + "'");
        }
        tmpl.allowed_node_types.insert(*type);
      }
      if (jr.contains("max_price")) {
        const Json& price = jr.at("max_price");
        if (!(price.is_string() && price.get<std::string>() == "unbounded")) {
          tmpl.max_price = get_fixed4(price, path + "/max_price");
        }
      }
      spec.request_table[{app, scale}] = std::move(tmpl);
    }
  }

  const Json& areas = require_key(j, "areas", "");
  for (const auto& [app, ja] : areas.items()) {
    const std::string path = "/areas/" + app;
    DeploymentArea area;
    area.center = geo_from_json(require_key(ja, "center", path), path + "/center");
    area.radius_m = get_double(require_key(ja, "radius_m", path), path + "/radius_m");
    area.zone = zone_from_json(require_key(ja, "zone", path), path + "/zone");
    spec.areas[app] = std::move(area);
  }

  spec.enrichment = enrichment_from_json(require_key(j, "enrichment", ""));
  return spec;
}

Json results_to_json(const std::vector<BenchResult>& results) {
  Json arr = Json::array();
  for (const BenchResult& r : results) {
    Json j;
    j["app"] = r.scenario.app;
    j["scale"] = r.scenario.scale;
    j["sweep"] = std::string(sweep_name(r.scenario.sweep));
    j["level"] = r.scenario.level;
    j["users"] = r.scenario.users;
    j["max_nodes"] = r.scenario.max_nodes;
    j["n_samples"] = r.samples.size();
    j["skipped"] = r.skipped;
    if (!r.samples.empty()) {
      j["median_s"] = json_double(r.median_s);
      j["ci_low_s"] = json_double(r.ci_low_s);
      j["ci_high_s"] = json_double(r.ci_high_s);
    }
    j["n_optimal"] = r.n_optimal;
    j["n_infeasible"] = r.n_infeasible;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace continuum
