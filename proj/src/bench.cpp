#include "uldpack/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "uldpack/validator.hpp"

namespace uldpack {

const char* to_string(Suite s) {
  switch (s) {
    case Suite::br: return "br";
    case Suite::paquay: return "paquay";
    case Suite::adapted_unlimited: return "adapted_unlimited";
    case Suite::adapted_1uld: return "adapted_1uld";
    case Suite::ablation: return "ablation";
  }
  return "?";
}

Suite suite_from_string(const std::string& s) {
  for (Suite v : {Suite::br, Suite::paquay, Suite::adapted_unlimited, Suite::adapted_1uld, Suite::ablation})
    if (s == to_string(v)) return v;
  throw std::invalid_argument("unknown suite '" + s + "'");
}

void apply_suite(Suite suite, Instance& inst) {
  PackingParams& p = inst.packing;
  switch (suite) {
    case Suite::br:
      p.min_item_overlap = 1.0;
      p.max_padding_height = 0;
      p.weight_balance_importance = 0.0;
      inst.algo.ep_sort_order = {kX, kY, kZ};
      for (UldGroup& g : inst.ulds) {
        g.uld.edge_width = 0;
        g.uld.substructure_allowed = false;
        g.count = 1;
      }
      break;
    case Suite::paquay:
      p.max_padding_height = 0;
      p.weight_balance_importance = 100.0;
      p.max_cog_deviation = 0.05;
      p.corner_support_mode = CornerSupportMode::corners_only;
      for (UldGroup& g : inst.ulds) {
        g.uld.edge_width = 0;
        g.uld.substructure_allowed = false;
        g.count.reset();
      }
      break;
    case Suite::adapted_unlimited:
    case Suite::adapted_1uld:
    case Suite::ablation:
      for (UldGroup& g : inst.ulds) {
        g.uld.edge_width = 10;
        g.uld.edge_offset = 10;
        g.uld.substructure_allowed = true;
        if (suite == Suite::adapted_unlimited)
          g.count.reset();
        else
          g.count = 1;
      }
      break;
  }
  for (UldGroup& g : inst.ulds) finalize_uld(g.uld);
}

InstanceResult solve_instance(const Instance& inst, const FleetOptions& opt) {
  InstanceResult r;
  r.name = inst.name;
  r.items = inst.items.size();
  r.group = inst.type_count > 0 ? inst.type_count : static_cast<int>(inst.items.size());
  const auto t0 = std::chrono::steady_clock::now();
  const Solution sol = load_fleet(inst.items, inst.ulds, inst.packing, inst.algo, opt);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (const UldLoad& load : sol.loads) {
    r.utilizations.push_back(volume_utilization(load, inst.ulds[load.uld].uld));
    r.substructures += load.substructure_used ? 1 : 0;
  }
  const ValidationReport rep = validate_solution(sol, inst.ulds, inst.items, inst.packing);
  r.hard_violations = rep.hard_count();
  std::vector<bool> cog_bad(sol.loads.size(), false);
  for (const Violation& v : rep.violations)
    if (v.kind == "cog" && v.load < cog_bad.size()) cog_bad[v.load] = true;
  r.cog_violations = static_cast<std::size_t>(std::count(cog_bad.begin(), cog_bad.end(), true));
  r.unloaded = sol.unloaded.size();
  r.plan = write_plan(sol, inst);
  return r;
}

std::vector<InstanceResult> run_all(const std::vector<Instance>& instances, int jobs, const FleetOptions& opt) {
  std::vector<InstanceResult> out(instances.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) out[i] = solve_instance(instances[i], opt);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(instances.size())));
  if (n == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return out;
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

GroupRow make_row(const std::string& name, const std::vector<const InstanceResult*>& rs, bool per_instance) {
  GroupRow row;
  row.group = name;
  row.instances = rs.size();
  std::vector<double> u, inst_u;
  double tsum = 0.0;
  for (const InstanceResult* r : rs) {
    row.ulds += r->utilizations.size();
    row.g_vio += r->cog_violations;
    row.sub += r->substructures;
    row.unloaded += r->unloaded;
    row.hard_violations += r->hard_violations;
    tsum += r->millis;
    row.t_max = std::max(row.t_max, r->millis);
    double s = 0.0;
    for (double x : r->utilizations) {
      u.push_back(100.0 * x);
      s += 100.0 * x;
    }
    inst_u.push_back(r->utilizations.empty() ? 0.0 : s / static_cast<double>(r->utilizations.size()));
  }
  const std::vector<double>& base = per_instance ? inst_u : u;
  if (!base.empty()) {
    double s = 0.0;
    for (double x : base) s += x;
    row.u_mean = s / static_cast<double>(base.size());
    row.u_min = *std::min_element(base.begin(), base.end());
    row.u_max = *std::max_element(base.begin(), base.end());
    row.u_med = median(base);
  }
  if (!rs.empty()) {
    row.ulds_mean = static_cast<double>(row.ulds) / static_cast<double>(rs.size());
    row.t_mean = tsum / static_cast<double>(rs.size());
  }
  row.g_vio_pct = row.ulds ? 100.0 * static_cast<double>(row.g_vio) / static_cast<double>(row.ulds) : 0.0;
  return row;
}

std::string fmt(double v, int prec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

}  // namespace

std::vector<GroupRow> summarize(const std::vector<InstanceResult>& results, bool per_instance_mean) {
  std::map<int, std::vector<const InstanceResult*>> by_group;
  std::vector<const InstanceResult*> all;
  for (const InstanceResult& r : results) {
    by_group[r.group].push_back(&r);
    all.push_back(&r);
  }
  std::vector<GroupRow> rows;
  for (const auto& [g, rs] : by_group) rows.push_back(make_row(std::to_string(g), rs, per_instance_mean));
  rows.push_back(make_row("Total", all, per_instance_mean));
  return rows;
}

std::string rows_csv(const std::vector<GroupRow>& rows) {
  std::ostringstream os;
  os << "group,instances,|G|,mean_|G|,u_mean,u_med,u_min,u_max,G_vio,G_vio_pct,sub,t_mean_ms,t_max_ms,unloaded,"
        "hard_violations\n";
  for (const GroupRow& r : rows)
    os << r.group << "," << r.instances << "," << r.ulds << "," << fmt(r.ulds_mean, 2) << "," << fmt(r.u_mean, 2)
       << "," << fmt(r.u_med, 2) << "," << fmt(r.u_min, 2) << "," << fmt(r.u_max, 2) << "," << r.g_vio << ","
       << fmt(r.g_vio_pct, 1) << "," << r.sub << "," << fmt(r.t_mean, 1) << "," << fmt(r.t_max, 1) << ","
       << r.unloaded << "," << r.hard_violations << "\n";
  return os.str();
}

std::string rows_text(const std::vector<GroupRow>& rows) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-6s %5s %6s %6s %7s %7s %7s %7s %5s %6s %5s %9s %9s\n", "group", "inst", "|G|",
                "avg|G|", "u_mean", "u_med", "u_min", "u_max", "Gvio", "Gvio%", "sub", "t_mean", "t_max");
  os << buf;
  for (const GroupRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%-6s %5zu %6zu %6.2f %7.2f %7.2f %7.2f %7.2f %5zu %6.1f %5zu %9.1f %9.1f\n",
                  r.group.c_str(), r.instances, r.ulds, r.ulds_mean, r.u_mean, r.u_med, r.u_min, r.u_max, r.g_vio,
                  r.g_vio_pct, r.sub, r.t_mean, r.t_max);
    os << buf;
  }
  return os.str();
}

const char* ablation_variant_name(int v) {
  static const char* names[kAblationVariants] = {"no_grid", "no_blocking", "no_moving", "crainic_mimic"};
  return v >= 0 && v < kAblationVariants ? names[v] : "?";
}

void apply_ablation_variant(int v, AlgoParams& algo) {
  switch (v) {
    case 0: algo.variants.no_grid = true; break;
    case 1: algo.variants.no_blocking = true; break;
    case 2: algo.variants.no_moving = true; break;
    case 3: algo.variants.crainic_mimic = true; break;
    default: throw std::invalid_argument("unknown ablation variant");
  }
}

std::vector<AblationRow> ablation_rows(const std::vector<InstanceResult>& base,
                                       const std::vector<std::vector<InstanceResult>>& variants) {
  // Ratios of group totals: summed time and mean ULD utilization.
  struct Acc {
    double t = 0.0, u = 0.0;
    std::size_t n = 0;
  };
  using Table = std::map<int, Acc>;
  const auto acc = [](const std::vector<InstanceResult>& rs, Table& tab, Acc& total) {
    for (const InstanceResult& r : rs) {
      for (Acc* a : {&tab[r.group], &total}) {
        a->t += r.millis;
        for (double x : r.utilizations) a->u += x;
        a->n += r.utilizations.size();
      }
    }
  };
  Table bt;
  Acc btot;
  acc(base, bt, btot);
  std::vector<Table> vt(variants.size());
  std::vector<Acc> vtot(variants.size());
  for (std::size_t v = 0; v < variants.size(); ++v) acc(variants[v], vt[v], vtot[v]);
  const auto ratio = [](const Acc& x, const Acc& b, bool time) {
    if (time) return b.t > 0.0 ? x.t / b.t : 0.0;
    const double ux = x.n ? x.u / static_cast<double>(x.n) : 0.0;
    const double ub = b.n ? b.u / static_cast<double>(b.n) : 0.0;
    return ub > 0.0 ? ux / ub : 0.0;
  };
  std::vector<AblationRow> rows;
  for (const auto& [g, b] : bt) {
    AblationRow row;
    row.group = std::to_string(g);
    for (std::size_t v = 0; v < variants.size() && v < kAblationVariants; ++v) {
      row.time_ratio[v] = ratio(vt[v][g], b, true);
      row.util_ratio[v] = ratio(vt[v][g], b, false);
    }
    rows.push_back(row);
  }
  AblationRow total;
  total.group = "Total";
  for (std::size_t v = 0; v < variants.size() && v < kAblationVariants; ++v) {
    total.time_ratio[v] = ratio(vtot[v], btot, true);
    total.util_ratio[v] = ratio(vtot[v], btot, false);
  }
  rows.push_back(total);
  return rows;
}

std::string ablation_csv(const std::vector<AblationRow>& rows) {
  std::ostringstream os;
  os << "group,t_NG/t_D,u_NG/u_D,t_NB/t_D,u_NB/u_D,t_NM/t_D,u_NM/u_D,t_CR/t_D,u_CR/u_D\n";
  for (const AblationRow& r : rows) {
    os << r.group;
    for (int v = 0; v < kAblationVariants; ++v) os << "," << fmt(r.time_ratio[v], 3) << "," << fmt(r.util_ratio[v], 3);
    os << "\n";
  }
  return os.str();
}

std::string ablation_text(const std::vector<AblationRow>& rows) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-6s %8s %8s %8s %8s %8s %8s %8s %8s\n", "group", "tNG/tD", "uNG/uD", "tNB/tD",
                "uNB/uD", "tNM/tD", "uNM/uD", "tCR/tD", "uCR/uD");
  os << buf;
  for (const AblationRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%-6s", r.group.c_str());
    os << buf;
    for (int v = 0; v < kAblationVariants; ++v) {
      std::snprintf(buf, sizeof buf, " %8.3f %8.3f", r.time_ratio[v], r.util_ratio[v]);
      os << buf;
    }
    os << "\n";
  }
  return os.str();
}

std::vector<Instance> load_suite_dir(Suite suite, const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::runtime_error("missing instances: " + dir + " is not a directory");
  const std::string ext = suite == Suite::br ? ".txt" : ".json";
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ext) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("missing instances: no " + ext + " files in " + dir);
  std::vector<Instance> out;
  for (const fs::path& f : files) {
    const std::string text = read_file(f.string());
    try {
      if (suite == Suite::br) {
        for (Instance& inst : parse_br(text, f.stem().string())) out.push_back(std::move(inst));
      } else {
        out.push_back(parse_instance_json(text));
        if (out.back().name.empty()) out.back().name = f.stem().string();
      }
    } catch (const ParseError& e) {
      throw ParseError(f.string() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace uldpack
