#include "motsim/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "motsim/tridiag.hpp"

namespace motsim {

namespace {

double kahan_total(const Field& f) {
    double sum = 0.0, comp = 0.0;
    for (double x : f) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

/// gamma and F reject negative arguments, but states may sit anywhere in the
/// tolerated band [-1e-12, 0); clamp for evaluation only.
double nonneg(double x) { return x > 0.0 ? x : 0.0; }

struct FieldScan {
    double min = 0.0;
    bool finite = true;
};

FieldScan scan(const Field& f) {
    FieldScan s;
    s.min = std::numeric_limits<double>::infinity();
    for (double x : f) {
        if (!std::isfinite(x)) s.finite = false;
        s.min = std::min(s.min, x);
    }
    return s;
}

void check_state(const FieldState& st, double dt) {
    const FieldScan su = scan(st.u), sv = scan(st.v), sw = scan(st.w);
    if (!su.finite || !sv.finite || !sw.finite) {
        throw NonFinite("non-finite value after step to t = " + std::to_string(st.t) +
                        " (dt = " + std::to_string(dt) + ")");
    }
    const double m = std::min({su.min, sv.min, sw.min});
    if (m < -kNegativityTolerance) {
        const char* field = (m == su.min) ? "u" : (m == sv.min) ? "v" : "w";
        throw NegativityBreach(std::string("component ") + field + " reached " +
                               std::to_string(m) + " at t = " + std::to_string(st.t) +
                               "; reduce dt or check the configuration");
    }
}

void fill_report(StepReport* report, const FieldState& next, const Field& r, const Field& u_old,
                 double dt, double dx) {
    if (!report) return;
    report->dt_used = dt;
    report->t_new = next.t;
    report->reaction_mass = dt * kahan_total(r) * dx;
    report->theta_mass = dt * kahan_total(u_old) * dx;
    report->min_u = scan(next.u).min;
    report->min_v = scan(next.v).min;
    report->min_w = scan(next.w).min;
}

void validate_dt(double dt) {
    if (!std::isfinite(dt) || dt <= 0.0) throw InvalidInput("step needs dt > 0");
}

} // namespace

double stable_dt(const ModelParams& params, const FieldState& state, double safety) {
    if (!std::isfinite(safety) || safety <= 0.0) throw InvalidInput("safety factor must be > 0");
    require_match(state.grid, state.v, "stable_dt");
    double gamma_max = 0.0;
    for (double v : state.v) {
        gamma_max = std::max(gamma_max, eval_motility(params.motility, nonneg(v)));
    }
    const double dx = state.grid.dx();
    return safety * dx * dx / (2.0 * std::max({gamma_max, params.dcoef, 1.0}));
}

FieldState step_explicit(const FieldState& state, const ModelParams& params, double dt,
                         StepReport* report) {
    validate_dt(dt);
    const Grid& g = state.grid;
    require_match(g, state.u, "step_explicit(u)");
    require_match(g, state.v, "step_explicit(v)");
    require_match(g, state.w, "step_explicit(w)");
    const int n = g.cells;
    const double dx = g.dx();
    const double inv_dx = 1.0 / dx;

    Field p(n), r(n);
    for (int i = 0; i < n; ++i) {
        p[i] = eval_motility(params.motility, nonneg(state.v[i])) * state.u[i];
        r[i] = state.u[i] * eval_response(params.response, nonneg(state.w[i]));
    }

    FieldState next = state;
    next.t = state.t + dt;

    // One sweep per field: flux differences in place, then the reaction terms.
    double flux_p = 0.0, flux_v = 0.0, flux_w = 0.0;
    for (int i = 0; i < n; ++i) {
        const bool interior = i + 1 < n;
        const double fp = interior ? (p[i + 1] - p[i]) * inv_dx : 0.0;
        const double fv = interior ? (state.v[i + 1] - state.v[i]) * inv_dx : 0.0;
        const double fw = interior ? (state.w[i + 1] - state.w[i]) * inv_dx : 0.0;
        next.u[i] = state.u[i] + dt * ((fp - flux_p) * inv_dx +
                                       (params.alpha * r[i] - params.theta * state.u[i]));
        next.v[i] = state.v[i] +
                    dt * (params.dcoef * (fv - flux_v) * inv_dx + (state.u[i] - state.v[i]));
        next.w[i] = state.w[i] + dt * ((fw - flux_w) * inv_dx - r[i]);
        flux_p = fp;
        flux_v = fv;
        flux_w = fw;
    }

    check_state(next, dt);
    fill_report(report, next, r, state.u, dt, dx);
    return next;
}

FieldState step_imex(const FieldState& state, const ModelParams& params, double dt,
                     StepReport* report) {
    validate_dt(dt);
    const Grid& g = state.grid;
    require_match(g, state.u, "step_imex(u)");
    require_match(g, state.v, "step_imex(v)");
    require_match(g, state.w, "step_imex(w)");
    const int n = g.cells;
    const double dx = g.dx();
    const double c = dt / (dx * dx);

    Field gamma(n), r(n);
    for (int i = 0; i < n; ++i) {
        gamma[i] = eval_motility(params.motility, nonneg(state.v[i]));
        r[i] = state.u[i] * eval_response(params.response, nonneg(state.w[i]));
    }

    FieldState next = state;
    next.t = state.t + dt;

    Field sub(n), diag(n), sup(n), scratch(n);

    // u: (I - dt Lap[gamma(v^n) .]) u' = u + dt (alpha u F(w) - theta u)
    for (int i = 0; i < n; ++i) {
        const double left = (i > 0) ? c * gamma[i - 1] : 0.0;
        const double right = (i + 1 < n) ? c * gamma[i + 1] : 0.0;
        const double own = ((i > 0) ? c * gamma[i] : 0.0) + ((i + 1 < n) ? c * gamma[i] : 0.0);
        sub[i] = -left;
        diag[i] = 1.0 + own;
        sup[i] = -right;
        next.u[i] = state.u[i] + dt * (params.alpha * r[i] - params.theta * state.u[i]);
    }
    solve_tridiagonal(sub, diag, sup, std::span<double>(next.u), std::span<double>(scratch));

    // v: (I + dt - dt dcoef Lap) v' = v + dt u
    const double cd = c * params.dcoef;
    for (int i = 0; i < n; ++i) {
        const double own = ((i > 0) ? cd : 0.0) + ((i + 1 < n) ? cd : 0.0);
        sub[i] = (i > 0) ? -cd : 0.0;
        diag[i] = 1.0 + dt + own;
        sup[i] = (i + 1 < n) ? -cd : 0.0;
        next.v[i] = state.v[i] + dt * state.u[i];
    }
    solve_tridiagonal(sub, diag, sup, std::span<double>(next.v), std::span<double>(scratch));

    // w: (I - dt Lap) w' = w - dt u F(w)
    for (int i = 0; i < n; ++i) {
        const double own = ((i > 0) ? c : 0.0) + ((i + 1 < n) ? c : 0.0);
        sub[i] = (i > 0) ? -c : 0.0;
        diag[i] = 1.0 + own;
        sup[i] = (i + 1 < n) ? -c : 0.0;
        next.w[i] = state.w[i] - dt * r[i];
    }
    solve_tridiagonal(sub, diag, sup, std::span<double>(next.w), std::span<double>(scratch));

    check_state(next, dt);
    fill_report(report, next, r, state.u, dt, dx);
    return next;
}

RunResult run(FieldState initial, const ModelParams& params, const SchemeConfig& scheme,
              const std::vector<RunHook>& hooks, double cadence) {
    if (!std::isfinite(scheme.t_end) || scheme.t_end < 0.0) {
        throw InvalidInput("run needs t_end >= 0");
    }
    if (scheme.dt_policy == DtPolicy::Fixed) validate_dt(scheme.dt);
    if (scheme.max_steps < 0) throw InvalidInput("run needs max_steps >= 0");
    require_match(initial.grid, initial.u, "run(u)");
    require_match(initial.grid, initial.v, "run(v)");
    require_match(initial.grid, initial.w, "run(w)");
    check_state(initial, 0.0);

    const double t_end = scheme.t_end;
    const double tiny = 1e-12 * std::max(1.0, t_end);

    RunResult res{std::move(initial)};
    res.max_sup_u = sup_norm(res.state.u);

    auto fire = [&](const StepInfo& info) {
        for (const auto& h : hooks) h(res.state, info);
    };

    StepInfo info;
    info.final = res.state.t + tiny >= t_end;
    fire(info);
    if (info.final) {
        res.reached_t_end = true;
        return res;
    }

    double consumed = 0.0, consumed_c = 0.0;
    double theta_int = 0.0, theta_c = 0.0;
    const double obs_eps = cadence > 0.0 ? 1e-9 * cadence : 0.0;

    StepReport rep;
    while (res.state.t + tiny < t_end && res.steps < scheme.max_steps) {
        double dt;
        if (scheme.dt_policy == DtPolicy::Fixed) {
            dt = scheme.dt;
        } else {
            dt = stable_dt(params, res.state, scheme.safety);
            if (scheme.mode == SchemeMode::Imex) dt = std::min(1e-3, dt);
        }
        bool final = false;
        if (res.state.t + dt + tiny >= t_end) {
            dt = t_end - res.state.t;
            final = true;
        }
        const double t_prev = res.state.t;
        res.state = (scheme.mode == SchemeMode::Explicit)
                        ? step_explicit(res.state, params, dt, &rep)
                        : step_imex(res.state, params, dt, &rep);
        if (final) res.state.t = t_end;
        ++res.steps;

        {
            const double y = rep.reaction_mass - consumed_c;
            const double t = consumed + y;
            consumed_c = (t - consumed) - y;
            consumed = t;
        }
        {
            const double y = rep.theta_mass - theta_c;
            const double t = theta_int + y;
            theta_c = (t - theta_int) - y;
            theta_int = t;
        }
        res.max_sup_u = std::max(res.max_sup_u, sup_norm(res.state.u));

        bool observe = final || cadence <= 0.0;
        if (!observe) {
            observe = std::floor((res.state.t + obs_eps) / cadence) >
                      std::floor((t_prev + obs_eps) / cadence);
        }
        if (observe) {
            info.step = res.steps;
            info.dt_last = dt;
            info.consumed_mass = consumed;
            info.theta_time_integral = theta_int;
            info.final = final;
            fire(info);
        }
        if (final) {
            res.reached_t_end = true;
            break;
        }
    }

    res.consumed_mass = consumed;
    res.theta_time_integral = theta_int;

    if (!res.reached_t_end) {
        // max_steps cut the run short; surface the last state to observers.
        info.step = res.steps;
        info.consumed_mass = consumed;
        info.theta_time_integral = theta_int;
        info.final = true;
        fire(info);
    }
    return res;
}

} // namespace motsim
