#pragma once

#include <string>

#include "uavplan/core.hpp"
#include "uavplan/plan.hpp"
#include "uavplan/validate.hpp"

namespace uavplan {

// Versioned JSON schemas. Field names follow the notation table where one
// exists: "v" distances, "e" travel energy, "n" demand, "q" quality, "s" data
// rate, "t"/"t_omega" connectivity, and "w"/"a"/"b"/"f" per payload.
std::string scenario_to_json(const Scenario& s, int indent = 2);
Scenario scenario_from_json(const std::string& text);

std::string plan_to_json(const MissionPlan& p, int indent = 2);
MissionPlan plan_from_json(const std::string& text);

std::string validation_to_json(const ValidationReport& r, int indent = 2);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// FNV-1a 64-bit content hash (hex), used by manifests to tie outputs to inputs.
std::string content_hash(const std::string& content);

}  // namespace uavplan
