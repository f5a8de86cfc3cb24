#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "motsim/grid.hpp"
#include "motsim/model.hpp"

namespace motsim {

enum class SchemeMode { Explicit, Imex };
enum class DtPolicy { Fixed, Auto };

struct SchemeConfig {
    SchemeMode mode = SchemeMode::Imex;
    DtPolicy dt_policy = DtPolicy::Fixed;
    double dt = 1e-3;      // Fixed policy
    double safety = 0.9;   // Auto policy factor
    double t_end = 0.0;
    std::int64_t max_steps = 200'000'000;
};

/// Per-step bookkeeping. reaction_mass and theta_mass use the step-start
/// fields, matching the discrete conservation identities exactly.
struct StepReport {
    double dt_used = 0.0;
    double t_new = 0.0;
    double reaction_mass = 0.0; // dt * integral of u F(w)
    double theta_mass = 0.0;    // dt * integral of u
    double min_u = 0.0, min_v = 0.0, min_w = 0.0;
};

/// Largest explicitly stable dt for the diffusion terms:
///   safety * dx^2 / (2 * max(gamma_max_current, dcoef, 1)),
/// where gamma_max_current is max_i gamma(v_i) for the given state.
double stable_dt(const ModelParams& params, const FieldState& state, double safety);

/// Forward Euler for all terms. The shared reaction u F(w) is evaluated once
/// per step, so cell growth and nutrient consumption cancel exactly in the
/// mass ledger.
FieldState step_explicit(const FieldState& state, const ModelParams& params, double dt,
                         StepReport* report = nullptr);

/// Backward Euler diffusion (motility frozen at gamma(v^n)), explicit
/// reactions; one tridiagonal solve per field. Unconditionally diffusion-stable.
FieldState step_imex(const FieldState& state, const ModelParams& params, double dt,
                     StepReport* report = nullptr);

/// Passed to run() hooks at each observation.
struct StepInfo {
    std::int64_t step = 0;
    double dt_last = 0.0;
    double consumed_mass = 0.0;      // running sum of reaction_mass
    double theta_time_integral = 0.0; // running sum of theta_mass
    bool final = false;
};

using RunHook = std::function<void(const FieldState&, const StepInfo&)>;

struct RunResult {
    FieldState state;
    std::int64_t steps = 0;
    bool reached_t_end = false;
    double consumed_mass = 0.0;
    double theta_time_integral = 0.0;
    double max_sup_u = 0.0;
};

/// Advances initial to scheme.t_end (or max_steps). Hooks fire at t = 0, then
/// whenever simulated time crosses a multiple of cadence, and once more at the
/// final state; cadence <= 0 means every step. The last step is shortened to
/// land on t_end exactly.
RunResult run(FieldState initial, const ModelParams& params, const SchemeConfig& scheme,
              const std::vector<RunHook>& hooks = {}, double cadence = 0.0);

} // namespace motsim
