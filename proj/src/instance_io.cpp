#include "uldpack/instance_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "uldpack/rgs.hpp"
#include "uldpack/validator.hpp"

namespace uldpack {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::int64_t kUnlimited = std::numeric_limits<std::int64_t>::max();

// ---- BR text ----

struct LineReader {
  std::istringstream in;
  int line = 0;

  explicit LineReader(const std::string& text) : in(text) {}

  // Next non-blank line split into integer fields.
  std::vector<std::int64_t> next(const char* what) {
    std::string s;
    while (std::getline(in, s)) {
      ++line;
      if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream ls(s);
      std::vector<std::int64_t> out;
      std::string tok;
      while (ls >> tok) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
          v = std::stoll(tok, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok.size()) fail(std::string("malformed ") + what + ": '" + tok + "' is not an integer");
        out.push_back(v);
      }
      return out;
    }
    fail(std::string("unexpected end of input, expected ") + what);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
  }
};

// Item from one BR box type: dims and per-axis "may be vertical" flags.
Item br_item(const std::array<std::int64_t, 3>& d, const std::array<std::int64_t, 3>& f) {
  Item it;
  it.rotatable = true;
  it.weight = 0;
  if (f[0] && f[1] && f[2]) {
    it.tiltable = true;
    it.size = {d[0], d[1], d[2]};
    return it;
  }
  int h = f[2] ? 2 : (f[0] ? 0 : 1);
  Vec3 s{};
  int k = 0;
  for (int a = 0; a < 3; ++a)
    if (a != h) s[k++] = d[a];
  s[2] = d[h];
  it.size = s;
  return it;
}

// ---- JSON helpers ----

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

const Json& need(const Json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path, "missing required field '" + key + "'");
  return *it;
}

void check_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) schema_fail(path + "." + it.key(), "unknown field");
  }
}

std::int64_t get_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::uint64_t get_uint(const Json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    schema_fail(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

double get_double(const Json& v, const std::string& path) {
  if (!v.is_number()) schema_fail(path, "expected a number");
  return v.get<double>();
}

bool get_bool(const Json& v, const std::string& path) {
  if (!v.is_boolean()) schema_fail(path, "expected a boolean");
  return v.get<bool>();
}

std::string get_string(const Json& v, const std::string& path) {
  if (!v.is_string()) schema_fail(path, "expected a string");
  return v.get<std::string>();
}

Vec3 get_vec3(const Json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) schema_fail(path, "expected an array of 3 integers");
  Vec3 out{};
  for (int d = 0; d < 3; ++d) out[d] = get_int(v[d], path + "[" + std::to_string(d) + "]");
  return out;
}

// Integer or "unlimited".
std::int64_t get_limit(const Json& v, const std::string& path) {
  if (v.is_string() && v.get<std::string>() == "unlimited") return kUnlimited;
  if (!v.is_number_integer()) schema_fail(path, "expected an integer or \"unlimited\"");
  return v.get<std::int64_t>();
}

Json limit_json(std::int64_t v) { return v == kUnlimited ? Json("unlimited") : Json(v); }

Json vec_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json packing_json(const PackingParams& p) {
  Json j;
  j["max_padding_height"] = p.max_padding_height;
  j["min_item_overlap"] = p.min_item_overlap;
  j["max_cog_deviation"] = p.max_cog_deviation;
  j["weight_balance_importance"] = p.weight_balance_importance;
  j["corner_support_mode"] = p.corner_support_mode == CornerSupportMode::full ? "full" : "corners_only";
  return j;
}

Json algo_json(const AlgoParams& a) {
  Json j;
  j["max_ep_checks"] = a.max_ep_checks;
  j["min_rgs_iters"] = a.min_rgs_iters;
  j["max_rgs_iters"] = a.max_rgs_iters;
  j["randomization_degree"] = a.randomization_degree;
  j["ep_sort_order"] = sort_order_to_string(a.ep_sort_order);
  j["rng_seed"] = a.rng_seed;
  j["hole_close_max_iters"] = a.hole_close_max_iters;
  j["variants"] = {{"no_grid", a.variants.no_grid},
                   {"no_blocking", a.variants.no_blocking},
                   {"no_moving", a.variants.no_moving},
                   {"crainic_mimic", a.variants.crainic_mimic}};
  return j;
}

void read_packing(const Json& j, const std::string& path, PackingParams& p) {
  check_keys(j, path, {"max_padding_height", "min_item_overlap", "max_cog_deviation", "weight_balance_importance",
                       "corner_support_mode"});
  if (j.contains("max_padding_height")) p.max_padding_height = get_int(j["max_padding_height"], path + ".max_padding_height");
  if (j.contains("min_item_overlap")) p.min_item_overlap = get_double(j["min_item_overlap"], path + ".min_item_overlap");
  if (j.contains("max_cog_deviation")) p.max_cog_deviation = get_double(j["max_cog_deviation"], path + ".max_cog_deviation");
  if (j.contains("weight_balance_importance"))
    p.weight_balance_importance = get_double(j["weight_balance_importance"], path + ".weight_balance_importance");
  if (j.contains("corner_support_mode")) {
    const std::string m = get_string(j["corner_support_mode"], path + ".corner_support_mode");
    if (m == "full")
      p.corner_support_mode = CornerSupportMode::full;
    else if (m == "corners_only")
      p.corner_support_mode = CornerSupportMode::corners_only;
    else
      schema_fail(path + ".corner_support_mode", "expected \"full\" or \"corners_only\"");
  }
  if (p.max_padding_height < 0) schema_fail(path + ".max_padding_height", "must be non-negative");
  if (p.min_item_overlap < 0.0 || p.min_item_overlap > 1.0) schema_fail(path + ".min_item_overlap", "must lie in [0, 1]");
  if (p.max_cog_deviation < 0.0) schema_fail(path + ".max_cog_deviation", "must be non-negative");
  if (p.weight_balance_importance < 0.0) schema_fail(path + ".weight_balance_importance", "must be non-negative");
}

void read_algo(const Json& j, const std::string& path, AlgoParams& a) {
  check_keys(j, path, {"max_ep_checks", "min_rgs_iters", "max_rgs_iters", "randomization_degree", "ep_sort_order",
                       "rng_seed", "hole_close_max_iters", "variants"});
  if (j.contains("max_ep_checks")) a.max_ep_checks = get_uint(j["max_ep_checks"], path + ".max_ep_checks");
  if (j.contains("min_rgs_iters")) a.min_rgs_iters = static_cast<int>(get_int(j["min_rgs_iters"], path + ".min_rgs_iters"));
  if (j.contains("max_rgs_iters")) a.max_rgs_iters = static_cast<int>(get_int(j["max_rgs_iters"], path + ".max_rgs_iters"));
  if (j.contains("randomization_degree"))
    a.randomization_degree = get_double(j["randomization_degree"], path + ".randomization_degree");
  if (j.contains("ep_sort_order")) {
    const std::string s = get_string(j["ep_sort_order"], path + ".ep_sort_order");
    try {
      a.ep_sort_order = sort_order_from_string(s);
    } catch (const std::exception& e) {
      schema_fail(path + ".ep_sort_order", e.what());
    }
  }
  if (j.contains("rng_seed")) a.rng_seed = get_uint(j["rng_seed"], path + ".rng_seed");
  if (j.contains("hole_close_max_iters"))
    a.hole_close_max_iters = static_cast<int>(get_int(j["hole_close_max_iters"], path + ".hole_close_max_iters"));
  if (j.contains("variants")) {
    const Json& v = j["variants"];
    const std::string vp = path + ".variants";
    check_keys(v, vp, {"no_grid", "no_blocking", "no_moving", "crainic_mimic"});
    if (v.contains("no_grid")) a.variants.no_grid = get_bool(v["no_grid"], vp + ".no_grid");
    if (v.contains("no_blocking")) a.variants.no_blocking = get_bool(v["no_blocking"], vp + ".no_blocking");
    if (v.contains("no_moving")) a.variants.no_moving = get_bool(v["no_moving"], vp + ".no_moving");
    if (v.contains("crainic_mimic")) a.variants.crainic_mimic = get_bool(v["crainic_mimic"], vp + ".crainic_mimic");
  }
  if (a.min_rgs_iters < 1) schema_fail(path + ".min_rgs_iters", "must be at least 1");
  if (a.max_rgs_iters < a.min_rgs_iters) schema_fail(path + ".max_rgs_iters", "must be at least min_rgs_iters");
  if (a.randomization_degree < 0.0 || a.randomization_degree > 1.0)
    schema_fail(path + ".randomization_degree", "must lie in [0, 1]");
  if (a.hole_close_max_iters < 0) schema_fail(path + ".hole_close_max_iters", "must be non-negative");
}

Item read_item(const Json& j, const std::string& path) {
  check_keys(j, path, {"id", "size", "weight", "rotatable", "tiltable", "stackable", "count"});
  Item it;
  it.id = get_string(need(j, "id", path), path + ".id");
  it.size = get_vec3(need(j, "size", path), path + ".size");
  if (j.contains("weight")) it.weight = get_int(j["weight"], path + ".weight");
  if (j.contains("rotatable")) it.rotatable = get_bool(j["rotatable"], path + ".rotatable");
  if (j.contains("tiltable")) it.tiltable = get_bool(j["tiltable"], path + ".tiltable");
  if (j.contains("stackable")) it.stackable = get_bool(j["stackable"], path + ".stackable");
  try {
    validate_item(it);
  } catch (const ModelError& e) {
    schema_fail(path, e.what());
  }
  return it;
}

UldGroup read_uld(const Json& j, const std::string& path) {
  check_keys(j, path, {"id", "vertices", "facets", "dims", "weight_capacity", "volume_capacity", "edge_width",
                       "edge_offset", "substructure_allowed", "count"});
  UldGroup g;
  Uld& u = g.uld;
  const std::string id = get_string(need(j, "id", path), path + ".id");
  std::int64_t wcap = kUnlimited, vcap = -1;
  if (j.contains("weight_capacity")) wcap = get_limit(j["weight_capacity"], path + ".weight_capacity");
  if (j.contains("volume_capacity")) vcap = get_limit(j["volume_capacity"], path + ".volume_capacity");
  try {
    if (j.contains("dims")) {
      if (j.contains("vertices") || j.contains("facets")) schema_fail(path + ".dims", "use either dims or vertices/facets");
      u = make_cuboid_uld(id, get_vec3(j["dims"], path + ".dims"), wcap, vcap);
    } else {
      u.id = id;
      const Json& vs = need(j, "vertices", path);
      if (!vs.is_array()) schema_fail(path + ".vertices", "expected an array");
      for (std::size_t k = 0; k < vs.size(); ++k) u.vertices.push_back(get_vec3(vs[k], path + ".vertices[" + std::to_string(k) + "]"));
      const Json& fs = need(j, "facets", path);
      if (!fs.is_array()) schema_fail(path + ".facets", "expected an array");
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const std::string fp = path + ".facets[" + std::to_string(k) + "]";
        if (!fs[k].is_array()) schema_fail(fp, "expected an array of vertex indices");
        std::vector<std::size_t> f;
        for (std::size_t q = 0; q < fs[k].size(); ++q) {
          const std::int64_t v = get_int(fs[k][q], fp + "[" + std::to_string(q) + "]");
          if (v < 0 || static_cast<std::size_t>(v) >= u.vertices.size())
            schema_fail(fp + "[" + std::to_string(q) + "]", "vertex index out of range");
          f.push_back(static_cast<std::size_t>(v));
        }
        u.facets.push_back(std::move(f));
      }
      u.weight_capacity = wcap;
      if (j.contains("edge_width")) u.edge_width = get_int(j["edge_width"], path + ".edge_width");
      if (j.contains("edge_offset")) u.edge_offset = get_int(j["edge_offset"], path + ".edge_offset");
      if (j.contains("substructure_allowed"))
        u.substructure_allowed = get_bool(j["substructure_allowed"], path + ".substructure_allowed");
      finalize_uld(u);
      u.volume_capacity = vcap >= 0 ? vcap : static_cast<std::int64_t>(std::llround(geometric_volume(u)));
    }
    if (j.contains("dims")) {
      if (j.contains("edge_width")) u.edge_width = get_int(j["edge_width"], path + ".edge_width");
      if (j.contains("edge_offset")) u.edge_offset = get_int(j["edge_offset"], path + ".edge_offset");
      if (j.contains("substructure_allowed"))
        u.substructure_allowed = get_bool(j["substructure_allowed"], path + ".substructure_allowed");
      finalize_uld(u);
    }
  } catch (const ModelError& e) {
    schema_fail(path, e.what());
  }
  if (j.contains("count")) {
    const std::int64_t c = get_limit(j["count"], path + ".count");
    if (c < 0) schema_fail(path + ".count", "must be non-negative");
    if (c != kUnlimited) g.count = c;
  }
  return g;
}

std::string orientation_tilt(const Orientation& o) { return to_string(o.tilt); }

}  // namespace

std::vector<Instance> parse_br(const std::string& text, const std::string& prefix) {
  LineReader r(text);
  const auto header = r.next("header");
  if (header.size() != 1 || header[0] < 0) r.fail("header must hold the instance count");
  std::vector<Instance> out;
  for (std::int64_t n = 0; n < header[0]; ++n) {
    const auto head = r.next("instance line");
    if (head.size() != 2) r.fail("instance line must hold the instance number and seed");
    const auto dims = r.next("container line");
    if (dims.size() != 3 || dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0) r.fail("container line must hold 3 positive dimensions");
    const auto types = r.next("type count");
    if (types.size() != 1 || types[0] <= 0) r.fail("type count must be a positive integer");
    Instance inst;
    inst.name = prefix + "_" + std::to_string(head[0]);
    inst.type_count = static_cast<int>(types[0]);
    inst.br_seed = static_cast<std::uint64_t>(head[1]);
    for (std::int64_t t = 0; t < types[0]; ++t) {
      const auto f = r.next("box type line");
      if (f.size() != 8) r.fail("box type line must hold 8 fields");
      if (f[0] != t + 1) r.fail("box type number " + std::to_string(f[0]) + " out of sequence");
      const std::array<std::int64_t, 3> d{f[1], f[3], f[5]}, fl{f[2], f[4], f[6]};
      for (int a = 0; a < 3; ++a) {
        if (d[a] <= 0) r.fail("box dimensions must be positive");
        if (fl[a] != 0 && fl[a] != 1) r.fail("orientation flags must be 0 or 1");
      }
      if (!fl[0] && !fl[1] && !fl[2]) r.fail("box type admits no vertical dimension");
      if (f[7] < 0) r.fail("box count must be non-negative");
      const Item base = br_item(d, fl);
      for (std::int64_t c = 0; c < f[7]; ++c) {
        Item it = base;
        it.id = "t" + std::to_string(t + 1) + "_" + std::to_string(c + 1);
        inst.items.push_back(std::move(it));
      }
    }
    UldGroup g;
    g.uld = make_cuboid_uld("container", {dims[0], dims[1], dims[2]});
    g.count = 1;
    inst.ulds.push_back(std::move(g));
    out.push_back(std::move(inst));
  }
  return out;
}

std::string write_br(const std::vector<Instance>& instances) {
  std::ostringstream os;
  os << instances.size() << "\n";
  for (std::size_t n = 0; n < instances.size(); ++n) {
    const Instance& inst = instances[n];
    if (inst.ulds.size() != 1 || inst.ulds[0].uld.vertices.size() != 8)
      throw ParseError("instance " + inst.name + " is not a single-container instance");
    const Vec3& b = inst.ulds[0].uld.bounding_box;
    os << " " << n + 1 << " " << inst.br_seed << "\n";
    os << " " << b[0] << " " << b[1] << " " << b[2] << "\n";
    // Consecutive items with equal shape and flags form one type.
    std::vector<std::pair<Item, std::int64_t>> types;
    for (const Item& it : inst.items) {
      if (!types.empty() && types.back().first.size == it.size && types.back().first.tiltable == it.tiltable)
        ++types.back().second;
      else
        types.push_back({it, 1});
    }
    os << " " << types.size() << "\n";
    for (std::size_t t = 0; t < types.size(); ++t) {
      const Item& it = types[t].first;
      const int fz = 1, fxy = it.tiltable ? 1 : 0;
      os << " " << t + 1 << " " << it.size[0] << " " << fxy << " " << it.size[1] << " " << fxy << " " << it.size[2]
         << " " << fz << " " << types[t].second << "\n";
    }
  }
  return os.str();
}

Instance parse_instance_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("$: invalid JSON: ") + e.what());
  }
  check_keys(j, "$", {"schema_version", "name", "items", "ulds", "packing", "algo", "br_type_count", "br_seed"});
  const std::int64_t version = get_int(need(j, "schema_version", "$"), "$.schema_version");
  if (version != kSchemaVersion) schema_fail("$.schema_version", "unsupported version " + std::to_string(version));
  Instance inst;
  if (j.contains("name")) inst.name = get_string(j["name"], "$.name");
  if (j.contains("br_seed")) inst.br_seed = get_uint(j["br_seed"], "$.br_seed");
  if (j.contains("br_type_count")) inst.type_count = static_cast<int>(get_int(j["br_type_count"], "$.br_type_count"));
  const Json& items = need(j, "items", "$");
  if (!items.is_array()) schema_fail("$.items", "expected an array");
  std::set<std::string> ids;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const std::string path = "$.items[" + std::to_string(k) + "]";
    Item base = read_item(items[k], path);
    std::int64_t count = 1;
    if (items[k].contains("count")) {
      count = get_int(items[k]["count"], path + ".count");
      if (count < 1) schema_fail(path + ".count", "must be at least 1");
    }
    for (std::int64_t c = 0; c < count; ++c) {
      Item it = base;
      if (count > 1) it.id += "#" + std::to_string(c + 1);
      if (!ids.insert(it.id).second) schema_fail(path + ".id", "duplicate item id '" + it.id + "'");
      inst.items.push_back(std::move(it));
    }
  }
  const Json& ulds = need(j, "ulds", "$");
  if (!ulds.is_array()) schema_fail("$.ulds", "expected an array");
  for (std::size_t k = 0; k < ulds.size(); ++k) inst.ulds.push_back(read_uld(ulds[k], "$.ulds[" + std::to_string(k) + "]"));
  if (j.contains("packing")) read_packing(j["packing"], "$.packing", inst.packing);
  if (j.contains("algo")) read_algo(j["algo"], "$.algo", inst.algo);
  return inst;
}

std::string write_instance_json(const Instance& inst) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = inst.name;
  if (inst.type_count > 0) j["br_type_count"] = inst.type_count;
  if (inst.br_seed > 0) j["br_seed"] = inst.br_seed;
  j["items"] = Json::array();
  for (const Item& it : inst.items) {
    Json e;
    e["id"] = it.id;
    e["size"] = vec_json(it.size);
    e["weight"] = it.weight;
    e["rotatable"] = it.rotatable;
    e["tiltable"] = it.tiltable;
    e["stackable"] = it.stackable;
    j["items"].push_back(std::move(e));
  }
  j["ulds"] = Json::array();
  for (const UldGroup& g : inst.ulds) {
    const Uld& u = g.uld;
    Json e;
    e["id"] = u.id;
    e["vertices"] = Json::array();
    for (const Vec3& v : u.vertices) e["vertices"].push_back(vec_json(v));
    e["facets"] = Json::array();
    for (const auto& f : u.facets) e["facets"].push_back(f);
    e["weight_capacity"] = limit_json(u.weight_capacity);
    e["volume_capacity"] = limit_json(u.volume_capacity);
    e["edge_width"] = u.edge_width;
    e["edge_offset"] = u.edge_offset;
    e["substructure_allowed"] = u.substructure_allowed;
    e["count"] = g.count ? Json(*g.count) : Json("unlimited");
    j["ulds"].push_back(std::move(e));
  }
  j["packing"] = packing_json(inst.packing);
  j["algo"] = algo_json(inst.algo);
  return j.dump(2) + "\n";
}

void set_param(PackingParams& packing, AlgoParams& algo, const std::string& key, const std::string& value) {
  static const std::set<std::string> pkeys{"max_padding_height", "min_item_overlap", "max_cog_deviation",
                                           "weight_balance_importance", "corner_support_mode"};
  static const std::set<std::string> vkeys{"no_grid", "no_blocking", "no_moving", "crainic_mimic"};
  // Values are read as JSON when they parse, otherwise as bare strings.
  Json v;
  try {
    v = Json::parse(value);
  } catch (const Json::parse_error&) {
    v = value;
  }
  std::string k = key;
  if (k.rfind("variants.", 0) == 0) k = k.substr(9);
  if (pkeys.count(k)) {
    Json j = packing_json(packing);
    j[k] = v;
    PackingParams p = packing;
    read_packing(j, "param", p);
    packing = p;
  } else if (vkeys.count(k)) {
    Json j = algo_json(algo);
    j["variants"][k] = v;
    AlgoParams a = algo;
    read_algo(j, "param", a);
    algo = a;
  } else {
    Json j = algo_json(algo);
    if (!j.contains(k) || k == "variants") throw ParseError("param: unknown parameter '" + key + "'");
    j[k] = v;
    AlgoParams a = algo;
    read_algo(j, "param", a);
    algo = a;
  }
}

std::string write_plan(const Solution& sol, const Instance& inst) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["instance"] = inst.name;
  j["loads"] = Json::array();
  std::size_t loaded = 0, subs = 0;
  double util_sum = 0.0;
  for (std::size_t li = 0; li < sol.loads.size(); ++li) {
    const UldLoad& load = sol.loads[li];
    const Uld& uld = inst.ulds.at(load.uld).uld;
    Json e;
    e["uld"] = uld.id;
    e["uld_index"] = load.uld;
    e["substructure"] = load.substructure_used;
    if (li < sol.stats.size()) {
      e["criterion"] = sol.stats[li].criterion;
      e["runs"] = sol.stats[li].runs;
      e["checks"] = sol.stats[li].checks;
    }
    e["placements"] = Json::array();
    for (const Placement& p : load.placements) {
      Json q;
      if (p.dummy)
        q["label"] = p.label;
      else
        q["item"] = inst.items.at(p.item).id;
      q["position"] = vec_json(p.position);
      q["size"] = vec_json(p.size);
      q["orientation"] = {{"tilt", orientation_tilt(p.orientation)}, {"rotated", p.orientation.rotated}};
      q["dummy"] = p.dummy;
      e["placements"].push_back(std::move(q));
    }
    const double util = volume_utilization(load, uld);
    Json m;
    m["utilization"] = util;
    const auto cog = load.center_of_gravity();
    m["cog"] = cog ? Json::array({(*cog)[0], (*cog)[1], (*cog)[2]}) : Json(nullptr);
    m["cog_dev"] = Json::array({cog_deviation(load, uld, kX, inst.packing.max_cog_deviation),
                                cog_deviation(load, uld, kY, inst.packing.max_cog_deviation)});
    if (li < sol.scores.size()) {
      m["S_w"] = sol.scores[li].weight_balance;
      m["S_v"] = sol.scores[li].volume;
      m["penalty"] = sol.scores[li].penalty;
      m["S"] = sol.scores[li].total;
    }
    const ValidationReport rep = validate_load(load, uld, inst.items, inst.packing, li);
    Json verdict;
    verdict["feasible"] = rep.feasible();
    verdict["cog_ok"] = rep.cog_ok();
    verdict["hard_violations"] = rep.hard_count();
    verdict["violations"] = Json::array();
    for (const Violation& v : rep.violations)
      verdict["violations"].push_back({{"kind", v.kind}, {"detail", v.detail}, {"hard", v.hard}});
    m["verdict"] = std::move(verdict);
    e["metrics"] = std::move(m);
    j["loads"].push_back(std::move(e));
    loaded += load.real_item_count();
    subs += load.substructure_used ? 1 : 0;
    util_sum += util;
  }
  j["unloaded"] = Json::array();
  for (std::size_t i : sol.unloaded) j["unloaded"].push_back(inst.items.at(i).id);
  j["summary"] = {{"ulds_used", sol.loads.size()},
                  {"items_loaded", loaded},
                  {"items_unloaded", sol.unloaded.size()},
                  {"mean_utilization", sol.loads.empty() ? 0.0 : util_sum / static_cast<double>(sol.loads.size())},
                  {"substructures", subs}};
  return j.dump(2) + "\n";
}

Solution parse_plan(const std::string& text, const Instance& inst) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("$: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_fail("$", "expected an object");
  const std::int64_t version = get_int(need(j, "schema_version", "$"), "$.schema_version");
  if (version != kSchemaVersion) schema_fail("$.schema_version", "unsupported version " + std::to_string(version));
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < inst.items.size(); ++i) index[inst.items[i].id] = i;
  const auto item_index = [&](const Json& v, const std::string& path) {
    const std::string id = get_string(v, path);
    auto it = index.find(id);
    if (it == index.end()) schema_fail(path, "unknown item id '" + id + "'");
    return it->second;
  };
  Solution sol;
  const Json& loads = need(j, "loads", "$");
  if (!loads.is_array()) schema_fail("$.loads", "expected an array");
  for (std::size_t li = 0; li < loads.size(); ++li) {
    const std::string lp = "$.loads[" + std::to_string(li) + "]";
    const Json& e = loads[li];
    if (!e.is_object()) schema_fail(lp, "expected an object");
    UldLoad load;
    const std::int64_t g = get_int(need(e, "uld_index", lp), lp + ".uld_index");
    if (g < 0 || static_cast<std::size_t>(g) >= inst.ulds.size()) schema_fail(lp + ".uld_index", "out of range");
    load.uld = static_cast<std::size_t>(g);
    if (get_string(need(e, "uld", lp), lp + ".uld") != inst.ulds[load.uld].uld.id)
      schema_fail(lp + ".uld", "does not match the ULD at uld_index");
    load.substructure_used = get_bool(need(e, "substructure", lp), lp + ".substructure");
    const Json& ps = need(e, "placements", lp);
    if (!ps.is_array()) schema_fail(lp + ".placements", "expected an array");
    for (std::size_t k = 0; k < ps.size(); ++k) {
      const std::string pp = lp + ".placements[" + std::to_string(k) + "]";
      const Json& q = ps[k];
      if (!q.is_object()) schema_fail(pp, "expected an object");
      Placement p;
      p.dummy = get_bool(need(q, "dummy", pp), pp + ".dummy");
      p.position = get_vec3(need(q, "position", pp), pp + ".position");
      p.size = get_vec3(need(q, "size", pp), pp + ".size");
      const Json& o = need(q, "orientation", pp);
      try {
        p.orientation.tilt = tilt_from_string(get_string(need(o, "tilt", pp + ".orientation"), pp + ".orientation.tilt"));
      } catch (const ModelError& ex) {
        schema_fail(pp + ".orientation.tilt", ex.what());
      }
      p.orientation.rotated = get_bool(need(o, "rotated", pp + ".orientation"), pp + ".orientation.rotated");
      if (p.dummy) {
        p.label = get_string(need(q, "label", pp), pp + ".label");
        p.stackable = p.label == "substructure";
      } else {
        p.item = item_index(need(q, "item", pp), pp + ".item");
        p.weight = inst.items[p.item].weight;
        p.stackable = inst.items[p.item].stackable;
      }
      load.placements.push_back(std::move(p));
    }
    Score s;
    LoadStats st;
    if (e.contains("metrics") && e["metrics"].is_object()) {
      const Json& m = e["metrics"];
      if (m.contains("S_w")) s.weight_balance = get_double(m["S_w"], lp + ".metrics.S_w");
      if (m.contains("S_v")) s.volume = get_double(m["S_v"], lp + ".metrics.S_v");
      if (m.contains("penalty")) s.penalty = get_double(m["penalty"], lp + ".metrics.penalty");
      if (m.contains("S")) s.total = get_double(m["S"], lp + ".metrics.S");
    }
    if (e.contains("criterion")) st.criterion = get_string(e["criterion"], lp + ".criterion");
    if (e.contains("runs")) st.runs = static_cast<int>(get_int(e["runs"], lp + ".runs"));
    if (e.contains("checks")) st.checks = get_uint(e["checks"], lp + ".checks");
    sol.loads.push_back(std::move(load));
    sol.scores.push_back(s);
    sol.stats.push_back(st);
  }
  if (j.contains("unloaded")) {
    const Json& u = j["unloaded"];
    if (!u.is_array()) schema_fail("$.unloaded", "expected an array");
    for (std::size_t k = 0; k < u.size(); ++k) sol.unloaded.push_back(item_index(u[k], "$.unloaded[" + std::to_string(k) + "]"));
  }
  return sol;
}

std::string export_scene_obj(const Solution& sol, const Instance& inst) {
  std::ostringstream os;
  os << "# uldpack scene: " << inst.name << "\n";
  std::size_t base = 1;  // OBJ indices are 1-based
  Coord shift = 0;
  for (std::size_t li = 0; li < sol.loads.size(); ++li) {
    const UldLoad& load = sol.loads[li];
    const Uld& uld = inst.ulds.at(load.uld).uld;
    os << "o load" << li << "_" << uld.id << "\n";
    for (const Vec3& v : uld.vertices) os << "v " << v[0] + shift << " " << v[1] << " " << v[2] << "\n";
    for (const auto& f : uld.facets) {
      os << "l";
      for (std::size_t k : f) os << " " << base + k;
      os << " " << base + f.front() << "\n";
    }
    base += uld.vertices.size();
    for (const Placement& p : load.placements) {
      if (p.dummy) continue;
      os << "o load" << li << "_" << inst.items.at(p.item).id << "\n";
      for (const Vec3& c : box_corners(p.box())) os << "v " << c[0] + shift << " " << c[1] << " " << c[2] << "\n";
      // Corner k has bit 0 set for max x, bit 1 for max y, bit 2 for max z.
      static const int faces[6][4] = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
      for (const auto& f : faces)
        os << "f " << base + f[0] << " " << base + f[1] << " " << base + f[2] << " " << base + f[3] << "\n";
      base += 8;
    }
    shift += uld.bounding_box[0] + std::max<Coord>(1, uld.bounding_box[0] / 10);
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace uldpack
