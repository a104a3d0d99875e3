#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpcolor/discharging.hpp"
#include "dpcolor/plane_graph.hpp"

namespace dpc {

struct RunConfig {
    uint64_t seed = 1;
    int k = 4;
    int instances = 10;
    int assignments = 5;   // sampled assignments per instance
    int min_n = 8;
    int max_n = 24;
    bool run_audit = false;
    bool run_extend = false;    // precoloring-extension runs on a chordless <=6-face
    int extend_precolorings = 3;
    bool run_discharge = true;
};

struct InstanceReport {
    int index = 0;
    uint64_t seed = 0;
    int n = 0;
    int m = 0;
    bool class_pass = false;
    int solves_attempted = 0;
    int solves_ok = 0;
    int extends_attempted = 0;
    int extends_ok = 0;
    int audit_violations = -1;           // -1: not run
    bool discharge_conservation = false;
    bool discharge_eq3 = false;
    std::optional<Charge> outer_final;
    std::vector<std::string> errors;     // collected, never aborting the batch
    bool ok = false;
};

struct BatchReport {
    RunConfig config;
    std::vector<InstanceReport> instances;
    bool all_ok = false;
};

// Generates `instances` in-class graphs and runs the requested checks on each:
// class_check, sampled k-assignment solves (each solution re-validated), optional
// precoloring extensions, optional audit, and the discharging round trip. Instances
// are processed concurrently; the report order never depends on scheduling.
BatchReport pipeline_verify(const RunConfig& config);

} // namespace dpc
