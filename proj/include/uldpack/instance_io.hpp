#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "uldpack/model.hpp"

namespace uldpack {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  std::string name;
  std::vector<Item> items;
  std::vector<UldGroup> ulds;
  PackingParams packing;
  AlgoParams algo;
  int type_count = 0;          // number of item types for BR instances
  std::uint64_t br_seed = 0;   // generator seed recorded in BR files
};

inline constexpr int kSchemaVersion = 1;

// Bischoff-Ratcliff text format. Every item is rotatable; per-axis vertical
// flags (1,1,1) make it tiltable, anything else fixes the height.
std::vector<Instance> parse_br(const std::string& text, const std::string& name_prefix = "br");
std::string write_br(const std::vector<Instance>& instances);

Instance parse_instance_json(const std::string& text);
std::string write_instance_json(const Instance& instance);

// Applies one "key=value" style override to the parameter sets.
void set_param(PackingParams& packing, AlgoParams& algo, const std::string& key, const std::string& value);

// Plan file with per-load placements and metrics. Contains no timings.
std::string write_plan(const Solution& solution, const Instance& instance);
Solution parse_plan(const std::string& text, const Instance& instance);

// Wavefront OBJ with the ULD shells and item boxes; loads are laid out along x.
std::string export_scene_obj(const Solution& solution, const Instance& instance);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace uldpack
