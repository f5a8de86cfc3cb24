#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "motsim/config.hpp"
#include "motsim/diagnostics.hpp"
#include "motsim/io.hpp"
#include "motsim/stability.hpp"
#include "motsim/stepper.hpp"

namespace motsim {

/// Deterministic uniform draws in [-1, 1]. The generator-to-double mapping is
/// written out here instead of relying on std::uniform_real_distribution, whose
/// output is implementation-defined; identical seeds must reproduce identical
/// states byte for byte on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53; // [0, 1)
    }

    double uniform_pm1() { return uniform01() * 2.0 - 1.0; }

private:
    std::mt19937_64 eng_;
};

/// Builds the t = 0 fields from the init section. ConstantPerturbed draws are
/// mean-corrected so each perturbed field keeps exactly its base mass; File
/// loads a snapshot (grid must match the config) and resets time to zero.
FieldState make_initial_state(const RunConfig& config);

/// The two-point comparison configuration: l = 20, n = 512, exponential
/// motility (10, 0.1, 1), Hill response (1, 2), alpha = 1, theta = 0,
/// base (4, 4, 0) with a 1% seeded perturbation of u and v, IMEX dt = 1e-3
/// to t_end = 200, observations every 0.5 time units.
RunConfig preset_fig1(double dcoef);

enum class RunStatus { Ok, ConfigError, HypothesisViolation, SolverFailure };

/// Process exit statuses: 0 ok, 2 config error, 3 hypothesis violation,
/// 4 solver failure.
int exit_code(RunStatus status);

struct RunOutcome {
    RunStatus status = RunStatus::Ok;
    std::string error; // human-readable cause when status != Ok

    HypothesisReport hypotheses;
    StabilityReport stability;
    std::optional<FieldState> final_state;
    std::vector<SeriesRow> series;
    AsymptoteReport asymptote;
    MonotonicityResult w_monotone;

    double initial_u_mass = 0.0;
    double initial_w_mass = 0.0;
    double consumed_mass = 0.0;
    double theta_time_integral = 0.0;
    double max_abs_residual = 0.0; // worst |ledger residual| over observations
    bool consumption_ok = true;

    double envelope = 0.0;
    double running_max_sup_u = 0.0;
    bool exceeded_envelope = false;
    bool plateaued = true;

    std::int64_t steps = 0;
    bool reached_t_end = false;
};

/// Full library-level run: hypothesis gate, initial state, stability report at
/// this run's own u*, time stepping with the diagnostics attached, asymptotic
/// classification. Solver and config failures come back in the status rather
/// than as exceptions. extra_hooks share the observation cadence.
RunOutcome execute_run(const RunConfig& config, const std::vector<RunHook>& extra_hooks = {});

/// manifest.cfg, series.csv, stability.txt, stability_modes.csv, asymptote.txt
/// and run.txt under dir (which is created). Snapshots are written by cmd_run
/// during the run itself, not here.
void write_run_artifacts(const std::filesystem::path& dir, const RunConfig& config,
                         const RunOutcome& outcome);

struct CommandOptions {
    std::optional<std::string> out_dir;   // overrides [output] dir
    std::optional<std::uint64_t> seed;    // overrides [init] seed
    int workers = 0;                      // sweep parallelism; 0 = hardware count
    bool quiet = false;
};

int cmd_run(const RunConfig& config, const CommandOptions& options);
int cmd_stability(const RunConfig& config, const CommandOptions& options);
int cmd_sweep(const SweepConfig& sweep, const CommandOptions& options);

} // namespace motsim
