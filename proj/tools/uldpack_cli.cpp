// uldpack command-line front end: solve, bench, validate, convert.
//
// Exit codes: 0 success, 1 usage, I/O or parse error, 2 solve left items
// unloaded, 3 validate found hard violations.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uldpack/bench.hpp"
#include "uldpack/fleet.hpp"
#include "uldpack/instance_io.hpp"
#include "uldpack/validator.hpp"

using namespace uldpack;

namespace {

constexpr const char* kDefaultConfig = "uldpack.config.json";

struct Overrides {
  std::vector<std::string> params;
  std::vector<std::string> variants;
  std::optional<std::uint64_t> seed;
  bool no_hole_closing = false;
  bool no_reload = false;
};

void add_override_flags(CLI::App* app, Overrides& o) {
  app->add_option("--param", o.params, "Parameter override key=value (repeatable)");
  app->add_option("--variant", o.variants, "Algorithm variant: no_grid, no_blocking, no_moving, crainic_mimic")
      ->check(CLI::IsMember({"no_grid", "no_blocking", "no_moving", "crainic_mimic"}));
  for (const char* v : {"no_grid", "no_blocking", "no_moving", "crainic_mimic"}) {
    std::string flag = std::string("--") + v;
    std::replace(flag.begin(), flag.end(), '_', '-');
    app->add_flag_callback(flag, [&o, v] { o.variants.push_back(v); }, std::string("Same as --variant ") + v);
  }
  app->add_option("--seed", o.seed, "RNG seed");
  app->add_flag("--no-hole-closing", o.no_hole_closing, "Skip hole closing on the best load");
  app->add_flag("--no-reload", o.no_reload, "Skip the smaller-ULD reload step");
}

// Config file: {"packing": {...}, "algo": {...}}, same keys as --param.
void apply_config(PackingParams& p, AlgoParams& a) {
  const char* env = std::getenv("ULDPACK_CONFIG");
  const std::string path = env && *env ? env : kDefaultConfig;
  if (!std::filesystem::exists(path)) {
    if (env && *env) throw std::runtime_error("config file " + path + " does not exist");
    return;
  }
  const auto j = nlohmann::ordered_json::parse(read_file(path));
  for (const char* section : {"packing", "algo"}) {
    if (!j.contains(section)) continue;
    for (auto it = j[section].begin(); it != j[section].end(); ++it) {
      if (it.key() == "variants") {
        for (auto v = it->begin(); v != it->end(); ++v) set_param(p, a, v.key(), v->dump());
      } else {
        set_param(p, a, it.key(), it->is_string() ? it->get<std::string>() : it->dump());
      }
    }
  }
}

void apply_overrides(const Overrides& o, PackingParams& p, AlgoParams& a) {
  for (const std::string& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("--param expects key=value, got '" + kv + "'");
    set_param(p, a, kv.substr(0, eq), kv.substr(eq + 1));
  }
  for (const std::string& v : o.variants) set_param(p, a, v, "true");
  if (o.seed) a.rng_seed = *o.seed;
}

FleetOptions fleet_options(const Overrides& o) {
  FleetOptions f;
  f.hole_closing = !o.no_hole_closing;
  f.reload = !o.no_reload;
  return f;
}

Instance load_instance(const std::string& path) {
  const std::string text = read_file(path);
  if (std::filesystem::path(path).extension() == ".txt") {
    auto v = parse_br(text, std::filesystem::path(path).stem().string());
    if (v.size() != 1) throw ParseError(path + ": BR file holds " + std::to_string(v.size()) + " instances; convert it first");
    return std::move(v.front());
  }
  return parse_instance_json(text);
}

int cmd_solve(const std::string& in, const std::string& out, const std::string& format, const std::string& scene,
              const Overrides& o) {
  Instance inst = load_instance(in);
  apply_config(inst.packing, inst.algo);
  apply_overrides(o, inst.packing, inst.algo);
  const InstanceResult r = solve_instance(inst, fleet_options(o));
  const std::string text = format == "obj" ? export_scene_obj(parse_plan(r.plan, inst), inst) : r.plan;
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_file(out, text);
  if (!scene.empty()) write_file(scene, export_scene_obj(parse_plan(r.plan, inst), inst));
  double mean = 0.0;
  for (double u : r.utilizations) mean += u;
  if (!r.utilizations.empty()) mean /= static_cast<double>(r.utilizations.size());
  std::ostringstream s;
  s << "instance=" << inst.name << " items=" << r.items << " ulds=" << r.utilizations.size()
    << " unloaded=" << r.unloaded << " mean_util=" << mean << " substructures=" << r.substructures
    << " cog_violations=" << r.cog_violations << " hard_violations=" << r.hard_violations << " ms=" << r.millis;
  // The summary goes to stderr when stdout carries the plan.
  (out.empty() || out == "-" ? std::cerr : std::cout) << s.str() << "\n";
  return r.unloaded > 0 ? 2 : 0;
}

int cmd_bench(const std::string& suite_name, const std::string& dir, const std::string& out, const std::string& format,
              const std::string& plans, int jobs, const Overrides& o) {
  const Suite suite = suite_from_string(suite_name);
  std::vector<Instance> insts = load_suite_dir(suite, dir);
  for (Instance& inst : insts) {
    apply_suite(suite, inst);
    apply_config(inst.packing, inst.algo);
    apply_overrides(o, inst.packing, inst.algo);
  }
  const FleetOptions fo = fleet_options(o);
  std::string table;
  std::vector<InstanceResult> base = run_all(insts, jobs, fo);
  if (suite == Suite::ablation) {
    std::vector<std::vector<InstanceResult>> vars;
    for (int v = 0; v < kAblationVariants; ++v) {
      std::vector<Instance> copy = insts;
      for (Instance& inst : copy) apply_ablation_variant(v, inst.algo);
      vars.push_back(run_all(copy, jobs, fo));
    }
    const auto rows = ablation_rows(base, vars);
    table = format == "csv" ? ablation_csv(rows) : ablation_text(rows);
  } else {
    const auto rows = summarize(base, suite == Suite::br);
    table = format == "csv" ? rows_csv(rows) : rows_text(rows);
  }
  if (!plans.empty()) {
    std::filesystem::create_directories(plans);
    for (const InstanceResult& r : base) write_file((std::filesystem::path(plans) / (r.name + ".plan.json")).string(), r.plan);
  }
  if (out.empty() || out == "-")
    std::cout << table;
  else
    write_file(out, table);
  return 0;
}

int cmd_validate(const std::string& in, const std::string& plan_path) {
  const Instance inst = load_instance(in);
  const Solution sol = parse_plan(read_file(plan_path), inst);
  const ValidationReport rep = validate_solution(sol, inst.ulds, inst.items, inst.packing);
  for (const Violation& v : rep.violations) {
    std::cout << (v.hard ? "HARD " : "SOFT ") << v.kind << " load=" << v.load;
    if (v.load < sol.loads.size() && v.placement < sol.loads[v.load].placements.size() && v.kind != "weight" &&
        v.kind != "volume" && v.kind != "cog" && v.kind != "multiplicity" && v.kind != "availability") {
      const Vec3& p = sol.loads[v.load].placements[v.placement].position;
      std::cout << " at=(" << p[0] << "," << p[1] << "," << p[2] << ")";
    }
    std::cout << " : " << v.detail << "\n";
  }
  std::cout << "verdict feasible=" << (rep.feasible() ? "true" : "false") << " hard=" << rep.hard_count()
            << " soft=" << rep.violations.size() - rep.hard_count() << " loads=" << sol.loads.size() << "\n";
  return rep.feasible() ? 0 : 3;
}

int cmd_convert(const std::string& in, const std::string& out, const std::string& format, const std::string& ulds_path) {
  const std::string text = read_file(in);
  std::vector<Instance> insts;
  if (std::filesystem::path(in).extension() == ".txt")
    insts = parse_br(text, std::filesystem::path(in).stem().string());
  else
    insts.push_back(parse_instance_json(text));
  if (!ulds_path.empty()) {
    // Replaces the ULD list with the one in a ULD file (an instance file whose items may be empty).
    const Instance u = parse_instance_json(read_file(ulds_path));
    for (Instance& inst : insts) inst.ulds = u.ulds;
  }
  if (format == "br") {
    write_file(out, write_br(insts));
    return 0;
  }
  if (insts.size() == 1) {
    write_file(out, write_instance_json(insts.front()));
    return 0;
  }
  std::filesystem::create_directories(out);
  for (const Instance& inst : insts) write_file((std::filesystem::path(out) / (inst.name + ".json")).string(), write_instance_json(inst));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uldpack: air cargo ULD load planning"};
  app.require_subcommand(1);

  Overrides so, bo;
  std::string s_in, s_out, s_format = "json", s_scene;
  auto* solve = app.add_subcommand("solve", "Solve one instance and write a plan");
  solve->add_option("instance", s_in, "Instance file (.json, or single-instance BR .txt)")->required();
  solve->add_option("--out", s_out, "Output path, '-' for stdout");
  solve->add_option("--format", s_format, "Output format")->check(CLI::IsMember({"json", "obj"}));
  solve->add_option("--scene", s_scene, "Also write an OBJ scene here");
  add_override_flags(solve, so);

  std::string b_suite, b_dir, b_out, b_format = "text", b_plans;
  int b_jobs = 1;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite over a directory of instances");
  bench->add_option("suite", b_suite, "br, paquay, adapted_unlimited, adapted_1uld or ablation")
      ->required()
      ->check(CLI::IsMember({"br", "paquay", "adapted_unlimited", "adapted_1uld", "ablation"}));
  bench->add_option("dir", b_dir, "Instance directory")->required();
  bench->add_option("--out", b_out, "Table output path, '-' for stdout");
  bench->add_option("--format", b_format, "Table format")->check(CLI::IsMember({"text", "csv"}));
  bench->add_option("--plans", b_plans, "Directory to write one plan per instance");
  bench->add_option("--jobs", b_jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_override_flags(bench, bo);

  std::string v_in, v_plan;
  auto* validate = app.add_subcommand("validate", "Re-check a plan against its instance");
  validate->add_option("instance", v_in, "Instance file")->required();
  validate->add_option("plan", v_plan, "Plan file")->required();

  std::string c_in, c_out, c_format = "json", c_ulds;
  auto* convert = app.add_subcommand("convert", "Convert between BR text and the JSON instance schema");
  convert->add_option("input", c_in, "Input file (.txt BR or .json)")->required();
  convert->add_option("output", c_out, "Output file, or directory for multi-instance BR input")->required();
  convert->add_option("--format", c_format, "Output format")->check(CLI::IsMember({"json", "br"}));
  convert->add_option("--ulds", c_ulds, "Replace the ULD list with the one from this JSON file");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*solve) return cmd_solve(s_in, s_out, s_format, s_scene, so);
    if (*bench) return cmd_bench(b_suite, b_dir, b_out, b_format, b_plans, b_jobs, bo);
    if (*validate) return cmd_validate(v_in, v_plan);
    if (*convert) return cmd_convert(c_in, c_out, c_format, c_ulds);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
