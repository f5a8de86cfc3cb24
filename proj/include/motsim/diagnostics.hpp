#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "motsim/grid.hpp"
#include "motsim/model.hpp"

namespace motsim {

/// Running audit of the conserved combination
///   integral(u) + alpha integral(w) + theta * int_0^t integral(u) dt  =  const.
/// The time integral is accumulated by the trapezoid rule over the observation
/// times handed to ledger_update, so with theta > 0 the residual is first
/// order in the time between observations (and in dt); with theta = 0 it stays
/// at rounding level.
struct MassLedger {
    double alpha = 0.0;
    double theta = 0.0;
    double initial_total = 0.0; // integral(u0) + alpha integral(w0)
    double u_mass = 0.0;
    double w_mass = 0.0;
    double time_integral = 0.0;
    double residual = 0.0;
    double t = 0.0;
    double last_u_mass = 0.0;
};

MassLedger make_ledger(const FieldState& initial, const ModelParams& params);
void ledger_update(MassLedger& ledger, const FieldState& state);
bool ledger_check(const MassLedger& ledger, double tolerance);

/// sup w must never increase (zero-flux diffusion plus pure consumption).
struct MonotonicityResult {
    bool ok = true;
    std::size_t first_violation = 0; // index into the history when !ok
    double worst_excess = 0.0;       // largest increase beyond the slack
};

MonotonicityResult w_monotonicity_check(std::span<const double> sup_w_history,
                                        double slack = 1e-12);

/// Total nutrient consumed can never exceed the nutrient initially present.
bool consumption_bound_check(double consumed_mass, double initial_w_mass,
                             double rel_slack = 1e-10);

/// Shape summary of a single field: cosine-mode amplitudes against the
/// zero-flux eigenbasis cos(n pi x / length), n = 1..64.
struct PatternMetrics {
    double amplitude = 0.0;    // max - min
    int dominant_mode = 0;     // 0 = no structure above the noise floor
    double dominant_coeff = 0.0;
    int peak_count = 0;        // strict interior maxima above min + 5% amplitude
    std::vector<double> mode_coeffs; // |c_n| indexed from n = 1
};

PatternMetrics pattern_metrics(const Grid& grid, const Field& f);

enum class Regime { DecayToWStar, ConvergeToUStar, Pattern, Undecided };

const char* regime_name(Regime r);

struct AsymptoteThresholds {
    double eps_conv = 1e-2;    // sup-distance for the two convergence verdicts
    double eps_pattern = 1e-1; // amplitude above this is a pattern
    double settle_tol = 1e-4;  // tail variation below this counts as settled
};

/// What classify_asymptotics needs to know about a finished run.
struct TrajectorySummary {
    FieldState final_state;
    bool reached_t_end = false;
    double initial_u_mass = 0.0;
    double initial_w_mass = 0.0;
    double consumed_mass = 0.0;   // cumulative integral of u F(w)
    /// Settling measure over the tail window: the largest change of the
    /// monitored scalars (sup u, sup v, sup w, amplitude of u) against their
    /// final values, max_j |s(t_j) - s(t_end)|. Deliberately insensitive to
    /// slow sideways drift of an otherwise frozen profile: late-stage peak
    /// migration is perpetual in this model, while the profile shape stops
    /// changing. < 0 means unknown (no tail observations).
    double window_variation = -1.0;
};

struct AsymptoteReport {
    Regime regime = Regime::Undecided;
    bool settled = false;
    double u_star_pred = 0.0; // (int u0 + alpha int w0) / length
    double w_star_pred = 0.0; // (int w0 - consumed) / length
    double dist_u = 0.0;      // sup distance to the regime target
    double dist_v = 0.0;
    double dist_w = 0.0;
    double window_variation = -1.0;
    double amplitude = 0.0;
    int dominant_mode = 0;
};

/// Verdict order keeps threshold monotonicity: growing eps_conv can turn
/// Undecided into a definite regime but never flips one definite regime into
/// another (a pattern stays a pattern no matter how loose eps_conv gets).
AsymptoteReport classify_asymptotics(const TrajectorySummary& summary, const ModelParams& params,
                                     const AsymptoteThresholds& thresholds = {});

/// Tracks the running max of sup u against the a priori envelope and exposes
/// the plateau check (the run's sup should stop growing, not drift).
class BoundednessWatch {
public:
    explicit BoundednessWatch(double envelope);

    void update(double t, double sup_u);

    /// Relative growth of the running max over the final half of the observed
    /// time span stays below rel_tol.
    bool plateaued(double rel_tol = 1e-3) const;

    double envelope() const { return envelope_; }
    double running_max() const { return running_max_; }
    bool exceeded_envelope() const { return exceeded_; }
    const std::vector<std::pair<double, double>>& history() const { return history_; }

private:
    double envelope_;
    double running_max_ = 0.0;
    bool exceeded_ = false;
    std::vector<std::pair<double, double>> history_; // (t, running max)
};

} // namespace motsim
