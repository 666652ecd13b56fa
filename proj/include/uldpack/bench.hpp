#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uldpack/fleet.hpp"
#include "uldpack/instance_io.hpp"

namespace uldpack {

enum class Suite { br, paquay, adapted_unlimited, adapted_1uld, ablation };

const char* to_string(Suite s);
Suite suite_from_string(const std::string& s);

// Parameter and ULD overrides that define a benchmark setting.
void apply_suite(Suite suite, Instance& instance);

struct InstanceResult {
  std::string name;
  int group = 0;  // type count for BR, item count otherwise
  std::size_t items = 0;
  std::vector<double> utilizations;  // one per used ULD
  std::size_t cog_violations = 0;
  std::size_t substructures = 0;
  std::size_t unloaded = 0;
  std::size_t hard_violations = 0;
  double millis = 0.0;
  std::string plan;
};

InstanceResult solve_instance(const Instance& instance, const FleetOptions& opt = {});

// Solves instances on `jobs` worker threads; results keep input order.
std::vector<InstanceResult> run_all(const std::vector<Instance>& instances, int jobs, const FleetOptions& opt = {});

struct GroupRow {
  std::string group;
  std::size_t instances = 0;
  std::size_t ulds = 0;
  double ulds_mean = 0.0;
  double u_mean = 0.0;
  double u_med = 0.0;
  double u_min = 0.0;
  double u_max = 0.0;
  std::size_t g_vio = 0;
  double g_vio_pct = 0.0;
  std::size_t sub = 0;
  double t_mean = 0.0;  // ms
  double t_max = 0.0;   // ms
  std::size_t unloaded = 0;
  std::size_t hard_violations = 0;
};

// Rows per group plus a final "Total" row. Utilization is in percent; for
// BR groups the mean is over instances, otherwise over used ULDs.
std::vector<GroupRow> summarize(const std::vector<InstanceResult>& results, bool per_instance_mean);

std::string rows_csv(const std::vector<GroupRow>& rows);
std::string rows_text(const std::vector<GroupRow>& rows);

inline constexpr int kAblationVariants = 4;
const char* ablation_variant_name(int v);  // no_grid, no_blocking, no_moving, crainic_mimic
void apply_ablation_variant(int v, AlgoParams& algo);

struct AblationRow {
  std::string group;
  std::array<double, kAblationVariants> time_ratio{};
  std::array<double, kAblationVariants> util_ratio{};
};

// baseline and variants[v] must list the same instances in the same order.
std::vector<AblationRow> ablation_rows(const std::vector<InstanceResult>& baseline,
                                       const std::vector<std::vector<InstanceResult>>& variants);
std::string ablation_csv(const std::vector<AblationRow>& rows);
std::string ablation_text(const std::vector<AblationRow>& rows);

// All instances of a suite below dir: BR text files (*.txt) for br, JSON
// instance files (*.json) otherwise, in lexicographic file order.
std::vector<Instance> load_suite_dir(Suite suite, const std::string& dir);

}  // namespace uldpack
