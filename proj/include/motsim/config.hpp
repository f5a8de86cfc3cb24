#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motsim/grid.hpp"
#include "motsim/model.hpp"
#include "motsim/stepper.hpp"

namespace motsim {

enum class InitKind { ConstantPerturbed, Eigenmode, File };

struct InitSpec {
    InitKind kind = InitKind::ConstantPerturbed;
    double base_u = 0.0;
    double base_v = 0.0;
    double base_w = 0.0;
    double amplitude = 0.0;    // relative for ConstantPerturbed, absolute for Eigenmode
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool perturb_w = false;    // ConstantPerturbed: add uniform [0, amplitude] to w
    int mode_n = 1;            // Eigenmode index
    std::string path;          // File source
};

struct OutputSpec {
    std::string dir = "out";
    double cadence = 1.0;      // simulated-time units between observations; 0 = every step
    bool snapshots = true;
    int max_snapshots = 400;
};

struct RunConfig {
    ModelParams model;
    Grid grid{20.0, 512};
    SchemeConfig scheme;
    InitSpec init;
    OutputSpec output;
};

struct ConfigIssue {
    int line = 0;          // 0 when the issue is not tied to a specific line
    std::string field;     // dotted key, e.g. "model.theta"; may be empty
    std::string message;
};

struct ParseResult {
    std::optional<RunConfig> config;
    std::vector<ConfigIssue> issues;
    bool ok() const { return config.has_value() && issues.empty(); }
};

/// Parses the line-oriented key=value format with [model] [grid] [scheme]
/// [init] [output] sections. Collects every problem it can find instead of
/// stopping at the first.
ParseResult parse_config(std::string_view text);

/// Canonical config text; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const RunConfig& config);

struct SweepAxis {
    std::string name; // dcoef alpha theta gamma0 gamma1 lambda l n
    std::vector<double> values;
};

struct SweepConfig {
    RunConfig base;
    std::vector<SweepAxis> axes;
    std::size_t max_cells = 1024;
};

struct SweepParseResult {
    std::optional<SweepConfig> sweep;
    std::vector<ConfigIssue> issues;
    bool ok() const { return sweep.has_value() && issues.empty(); }
};

/// Same file format plus a [sweep] section: axis.<name> = v1, v2, ... and
/// max_cells. At least one axis is required.
SweepParseResult parse_sweep_config(std::string_view text);

/// Applies one axis value to a copy of the base config (rebuilding the grid
/// for the l and n axes). Throws InvalidInput for unusable values, e.g. a
/// gamma0 axis with a non-exponential motility.
RunConfig apply_axis_value(const RunConfig& base, const std::string& axis, double value);

} // namespace motsim
