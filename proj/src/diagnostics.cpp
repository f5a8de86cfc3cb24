#include "motsim/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace motsim {

MassLedger make_ledger(const FieldState& initial, const ModelParams& params) {
    MassLedger ledger;
    ledger.alpha = params.alpha;
    ledger.theta = params.theta;
    ledger.u_mass = integrate(initial.grid, initial.u);
    ledger.w_mass = integrate(initial.grid, initial.w);
    ledger.initial_total = ledger.u_mass + params.alpha * ledger.w_mass;
    ledger.t = initial.t;
    ledger.last_u_mass = ledger.u_mass;
    return ledger;
}

void ledger_update(MassLedger& ledger, const FieldState& state) {
    if (state.t < ledger.t) throw InvalidInput("ledger_update: time went backwards");
    ledger.u_mass = integrate(state.grid, state.u);
    ledger.w_mass = integrate(state.grid, state.w);
    if (state.t > ledger.t) {
        ledger.time_integral += 0.5 * (state.t - ledger.t) * (ledger.u_mass + ledger.last_u_mass);
    }
    ledger.t = state.t;
    ledger.last_u_mass = ledger.u_mass;
    ledger.residual = ledger.u_mass + ledger.alpha * ledger.w_mass +
                      ledger.theta * ledger.time_integral - ledger.initial_total;
}

bool ledger_check(const MassLedger& ledger, double tolerance) {
    if (!std::isfinite(tolerance) || tolerance < 0.0) {
        throw InvalidInput("ledger tolerance must be >= 0");
    }
    return std::abs(ledger.residual) <= tolerance;
}

MonotonicityResult w_monotonicity_check(std::span<const double> sup_w_history, double slack) {
    MonotonicityResult res;
    for (std::size_t i = 1; i < sup_w_history.size(); ++i) {
        const double excess = sup_w_history[i] - sup_w_history[i - 1] - slack;
        if (excess > 0.0) {
            if (res.ok) {
                res.ok = false;
                res.first_violation = i;
            }
            res.worst_excess = std::max(res.worst_excess, excess);
        }
    }
    return res;
}

bool consumption_bound_check(double consumed_mass, double initial_w_mass, double rel_slack) {
    if (consumed_mass < -1e-14 * std::max(1.0, initial_w_mass)) return false;
    return consumed_mass <= initial_w_mass * (1.0 + rel_slack) +
                                1e-14 * std::max(1.0, initial_w_mass);
}

PatternMetrics pattern_metrics(const Grid& grid, const Field& f) {
    require_match(grid, f, "pattern_metrics");
    const int n = grid.cells;
    PatternMetrics m;

    double lo = f[0], hi = f[0];
    for (double x : f) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    m.amplitude = hi - lo;

    const int n_modes = std::min(64, n - 1);
    m.mode_coeffs.assign(n_modes + 1, 0.0);
    // Midpoint samples of cos(k pi x / length) are the discrete cosine basis,
    // exactly orthogonal on this grid, so c_k recovers the amplitude of an
    // injected mode k without leakage.
    for (int k = 1; k <= n_modes; ++k) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            acc += f[i] * std::cos(k * M_PI * (i + 0.5) / n);
        }
        m.mode_coeffs[k] = std::abs(acc * 2.0 / n);
    }

    const double floor_scale = std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    if (m.amplitude > 1e-12 * floor_scale) {
        int best = 1;
        for (int k = 2; k <= n_modes; ++k) {
            if (m.mode_coeffs[k] > m.mode_coeffs[best]) best = k;
        }
        m.dominant_mode = best;
        m.dominant_coeff = m.mode_coeffs[best];

        const double threshold = lo + 0.05 * m.amplitude;
        for (int i = 1; i + 1 < n; ++i) {
            if (f[i] > f[i - 1] && f[i] > f[i + 1] && f[i] > threshold) ++m.peak_count;
        }
    }
    return m;
}

const char* regime_name(Regime r) {
    switch (r) {
    case Regime::DecayToWStar: return "decay_to_w_star";
    case Regime::ConvergeToUStar: return "converge_to_u_star";
    case Regime::Pattern: return "pattern";
    case Regime::Undecided: return "undecided";
    }
    return "undecided";
}

AsymptoteReport classify_asymptotics(const TrajectorySummary& summary, const ModelParams& params,
                                     const AsymptoteThresholds& thresholds) {
    const FieldState& st = summary.final_state;
    const double length = st.grid.length;

    AsymptoteReport rep;
    rep.u_star_pred = (summary.initial_u_mass + params.alpha * summary.initial_w_mass) / length;
    rep.w_star_pred = (summary.initial_w_mass - summary.consumed_mass) / length;
    rep.window_variation = summary.window_variation;

    const PatternMetrics metrics = pattern_metrics(st.grid, st.u);
    rep.amplitude = metrics.amplitude;
    rep.dominant_mode = metrics.dominant_mode;

    if (params.theta > 0.0) {
        rep.dist_u = sup_norm(st.u);
        rep.dist_v = sup_norm(st.v);
        double dw = 0.0;
        for (double x : st.w) dw = std::max(dw, std::abs(x - rep.w_star_pred));
        rep.dist_w = dw;
    } else {
        double du = 0.0, dv = 0.0;
        for (double x : st.u) du = std::max(du, std::abs(x - rep.u_star_pred));
        for (double x : st.v) dv = std::max(dv, std::abs(x - rep.u_star_pred));
        rep.dist_u = du;
        rep.dist_v = dv;
        rep.dist_w = sup_norm(st.w);
    }

    rep.settled = summary.reached_t_end && summary.window_variation >= 0.0 &&
                  summary.window_variation < thresholds.settle_tol;
    if (!rep.settled) {
        rep.regime = Regime::Undecided;
        return rep;
    }
    if (rep.amplitude > thresholds.eps_pattern) {
        rep.regime = Regime::Pattern;
        return rep;
    }
    const bool close = rep.dist_u < thresholds.eps_conv && rep.dist_v < thresholds.eps_conv &&
                       rep.dist_w < thresholds.eps_conv;
    if (close) {
        rep.regime = (params.theta > 0.0) ? Regime::DecayToWStar : Regime::ConvergeToUStar;
    } else {
        rep.regime = Regime::Undecided;
    }
    return rep;
}

BoundednessWatch::BoundednessWatch(double envelope) : envelope_(envelope) {
    if (std::isnan(envelope_) || envelope_ <= 0.0) {
        throw InvalidInput("boundedness envelope must be positive (may be +inf)");
    }
}

void BoundednessWatch::update(double t, double sup_u) {
    running_max_ = std::max(running_max_, sup_u);
    if (running_max_ > envelope_) exceeded_ = true;
    history_.emplace_back(t, running_max_);
}

bool BoundednessWatch::plateaued(double rel_tol) const {
    if (history_.size() < 2) return false;
    const double t_end = history_.back().first;
    const double t_mid = history_.front().first + 0.5 * (t_end - history_.front().first);
    double at_mid = history_.back().second;
    for (const auto& [t, m] : history_) {
        if (t >= t_mid) {
            at_mid = m;
            break;
        }
    }
    const double growth = history_.back().second - at_mid;
    return growth <= rel_tol * std::max(at_mid, 1e-300);
}

} // namespace motsim
