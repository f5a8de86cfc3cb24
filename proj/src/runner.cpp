#include "motsim/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "motsim/errors.hpp"

namespace motsim {

namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Two passes push the residual mean to ~1e-18, so a perturbed field keeps
/// exactly its base mass and the predicted u* is exact, not O(amplitude).
void remove_mean(std::vector<double>& xi) {
    for (int pass = 0; pass < 2; ++pass) {
        double sum = 0.0, c = 0.0;
        for (double x : xi) {
            const double y = x - c;
            const double t = sum + y;
            c = (t - sum) - y;
            sum = t;
        }
        const double mean = sum / static_cast<double>(xi.size());
        for (double& x : xi) x -= mean;
    }
}

void require_nonnegative(const Field& f, const char* name) {
    for (double x : f) {
        if (!(x >= 0.0)) {
            throw NegativeInitialData(std::string(name) +
                                      " has a negative cell in the initial data");
        }
    }
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

const char* status_name(RunStatus s) {
    switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::ConfigError: return "config_error";
    case RunStatus::HypothesisViolation: return "hypothesis_violation";
    case RunStatus::SolverFailure: return "solver_failure";
    }
    return "unknown";
}

/// Tail-window record of the monitored scalars (sup u, sup v, sup w,
/// amplitude of u) for the settling check: settled means these stop changing
/// against their final values. A frozen profile that still drifts sideways
/// (late-stage peak migration never fully stops in this model) counts as
/// settled; its shape statistics are constant.
class SettleBuffer {
public:
    explicit SettleBuffer(double start_t) : start_(start_t) {}

    void offer(const FieldState& s, double sup_u, double sup_v, double sup_w,
               double amplitude) {
        if (s.t < start_) return;
        samples_.push_back({sup_u, sup_v, sup_w, amplitude});
    }

    /// max_j |s(t_j) - s(t_end)| over the buffered scalars; -1 when nothing
    /// was buffered.
    double variation_against(double sup_u, double sup_v, double sup_w, double amplitude) const {
        if (samples_.empty()) return -1.0;
        double worst = 0.0;
        for (const auto& s : samples_) {
            worst = std::max({worst, std::abs(s.su - sup_u), std::abs(s.sv - sup_v),
                              std::abs(s.sw - sup_w), std::abs(s.amp - amplitude)});
        }
        return worst;
    }

private:
    struct Sample {
        double su, sv, sw, amp;
    };

    double start_;
    std::vector<Sample> samples_;
};

RunConfig with_overrides(RunConfig config, const CommandOptions& options) {
    if (options.out_dir) config.output.dir = *options.out_dir;
    if (options.seed) {
        config.init.seed = *options.seed;
        config.init.seed_set = true;
    }
    return config;
}

std::string sanitize_csv(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

} // namespace

FieldState make_initial_state(const RunConfig& config) {
    const Grid& grid = config.grid;
    const InitSpec& init = config.init;

    if (init.kind == InitKind::File) {
        FieldState s = read_snapshot(init.path);
        if (s.grid.cells != grid.cells || s.grid.length != grid.length) {
            std::ostringstream msg;
            msg << "snapshot grid (l=" << s.grid.length << ", n=" << s.grid.cells
                << ") does not match the config grid (l=" << grid.length << ", n=" << grid.cells
                << ")";
            throw GridMismatch(msg.str());
        }
        s.t = 0.0;
        require_nonnegative(s.u, "u");
        require_nonnegative(s.v, "v");
        require_nonnegative(s.w, "w");
        return s;
    }

    if (init.base_u < 0.0 || init.base_v < 0.0 || init.base_w < 0.0) {
        throw NegativeInitialData("base values must be nonnegative");
    }
    FieldState s(grid, init.base_u, init.base_v, init.base_w);

    if (init.kind == InitKind::Eigenmode) {
        for (int i = 0; i < grid.cells; ++i) {
            s.u[i] = init.base_u +
                     init.amplitude * std::cos(init.mode_n * kPi * grid.center(i) / grid.length);
        }
        require_nonnegative(s.u, "u");
        return s;
    }

    if (init.amplitude != 0.0) {
        Rng rng(init.seed);
        auto perturb = [&](Field& f, double base) {
            std::vector<double> xi(f.size());
            for (double& x : xi) x = rng.uniform_pm1();
            remove_mean(xi);
            for (std::size_t i = 0; i < f.size(); ++i) {
                f[i] = base * (1.0 + init.amplitude * xi[i]);
            }
        };
        perturb(s.u, init.base_u);
        perturb(s.v, init.base_v);
        if (init.perturb_w) {
            // The nutrient bump is additive and nonnegative so a zero base
            // level (the pattern-formation setup) stays admissible.
            for (double& x : s.w) x = init.base_w + init.amplitude * rng.uniform01();
        }
        require_nonnegative(s.u, "u");
        require_nonnegative(s.v, "v");
        require_nonnegative(s.w, "w");
    }
    return s;
}

RunConfig preset_fig1(double dcoef) {
    if (!std::isfinite(dcoef) || dcoef <= 0.0) {
        throw InvalidRange("fig1 preset needs a positive signal diffusivity");
    }
    RunConfig cfg;
    cfg.model = ModelParams(MotilitySpec::exponential(10.0, 0.1, 1.0),
                            ResponseSpec::hill(1.0, 2.0), 1.0, 0.0, dcoef);
    cfg.grid = Grid(20.0, 512);
    cfg.scheme.mode = SchemeMode::Imex;
    cfg.scheme.dt_policy = DtPolicy::Fixed;
    cfg.scheme.dt = 1e-3;
    cfg.scheme.t_end = 200.0;
    cfg.init.kind = InitKind::ConstantPerturbed;
    cfg.init.base_u = 4.0;
    cfg.init.base_v = 4.0;
    cfg.init.base_w = 0.0;
    cfg.init.amplitude = 0.01;
    cfg.init.seed = 12345;
    cfg.init.seed_set = true;
    cfg.init.perturb_w = false;
    char dir[64];
    std::snprintf(dir, sizeof dir, "fig1_D%g", dcoef);
    cfg.output.dir = dir;
    cfg.output.cadence = 0.5;
    cfg.output.snapshots = true;
    cfg.output.max_snapshots = 400;
    return cfg;
}

int exit_code(RunStatus status) {
    switch (status) {
    case RunStatus::Ok: return 0;
    case RunStatus::ConfigError: return 2;
    case RunStatus::HypothesisViolation: return 3;
    case RunStatus::SolverFailure: return 4;
    }
    return 4;
}

RunOutcome execute_run(const RunConfig& config, const std::vector<RunHook>& extra_hooks) {
    RunOutcome out;

    std::optional<FieldState> initial;
    try {
        initial.emplace(make_initial_state(config));
    } catch (const Error& e) {
        out.status = RunStatus::ConfigError;
        out.error = e.what();
        return out;
    }

    const ModelParams& params = config.model;
    const Grid& grid = config.grid;
    out.initial_u_mass = integrate(grid, initial->u);
    out.initial_w_mass = integrate(grid, initial->w);
    const double u_star = (out.initial_u_mass + params.alpha * out.initial_w_mass) / grid.length;

    // Sample the hypotheses over a range comfortably covering the initial data
    // and the merged-mass level the signal can be driven toward.
    const double v_range = std::max(
        {1.0, 2.0 * sup_norm(initial->v), 2.0 * sup_norm(initial->u), 2.0 * u_star});
    const double w_range = std::max(1.0, 2.0 * sup_norm(initial->w));
    out.hypotheses = validate_hypotheses(params, v_range, w_range);
    if (!out.hypotheses.ok()) {
        out.status = RunStatus::HypothesisViolation;
        out.error = join(out.hypotheses.warnings);
        return out;
    }

    out.stability = stability_report(params, u_star, grid.length);
    out.envelope = boundedness_envelope(params);

    MassLedger ledger = make_ledger(*initial, params);
    BoundednessWatch watch(out.envelope);
    std::vector<double> sup_w_history;
    SettleBuffer settle(0.95 * config.scheme.t_end);

    std::vector<RunHook> hooks;
    hooks.push_back([&](const FieldState& s, const StepInfo&) {
        ledger_update(ledger, s);
        out.max_abs_residual = std::max(out.max_abs_residual, std::abs(ledger.residual));
        const double su = sup_norm(s.u);
        const double sv = sup_norm(s.v);
        const double sw = sup_norm(s.w);
        sup_w_history.push_back(sw);
        watch.update(s.t, su);
        const PatternMetrics pm = pattern_metrics(s.grid, s.u);
        out.series.push_back({s.t, ledger.u_mass, ledger.w_mass, ledger.time_integral,
                              ledger.residual, su, sv, sw, pm.amplitude, pm.dominant_mode});
        settle.offer(s, su, sv, sw, pm.amplitude);
    });
    for (const auto& h : extra_hooks) hooks.push_back(h);

    std::optional<RunResult> rr;
    try {
        rr.emplace(run(std::move(*initial), params, config.scheme, hooks, config.output.cadence));
    } catch (const Error& e) {
        out.status = RunStatus::SolverFailure;
        out.error = e.what();
        return out;
    }

    out.steps = rr->steps;
    out.reached_t_end = rr->reached_t_end;
    out.consumed_mass = rr->consumed_mass;
    out.theta_time_integral = rr->theta_time_integral;
    out.w_monotone = w_monotonicity_check(sup_w_history);
    out.consumption_ok = consumption_bound_check(rr->consumed_mass, out.initial_w_mass);
    out.running_max_sup_u = watch.running_max();
    out.exceeded_envelope = watch.exceeded_envelope();
    out.plateaued = watch.plateaued();

    const double window_variation = settle.variation_against(
        sup_norm(rr->state.u), sup_norm(rr->state.v), sup_norm(rr->state.w),
        pattern_metrics(rr->state.grid, rr->state.u).amplitude);
    TrajectorySummary summary{std::move(rr->state), rr->reached_t_end, out.initial_u_mass,
                              out.initial_w_mass, rr->consumed_mass, window_variation};
    out.asymptote = classify_asymptotics(summary, params);
    out.final_state = std::move(summary.final_state);
    return out;
}

void write_run_artifacts(const fs::path& dir, const RunConfig& config, const RunOutcome& out) {
    fs::create_directories(dir);

    {
        const fs::path path = dir / "manifest.cfg";
        std::ofstream f(path, std::ios::trunc);
        if (!f) throw InvalidInput("cannot write " + path.string());
        f << "# reproducibility manifest: rerun with `motsim run manifest.cfg`\n"
          << serialize_config(config);
    }

    write_series(dir / "series.csv", out.series);

    if (out.status == RunStatus::Ok || out.status == RunStatus::SolverFailure) {
        write_stability_report(dir, out.stability, config.model, config.grid.length);
    }
    if (out.final_state) {
        write_asymptote_report(dir / "asymptote.txt", out.asymptote);
        write_snapshot(dir / "final.csv", *out.final_state);
    }

    std::vector<std::pair<std::string, std::string>> kv;
    auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
    kv.emplace_back("status", status_name(out.status));
    if (!out.error.empty()) kv.emplace_back("error", out.error);
    kv.emplace_back("h1_ok", flag(out.hypotheses.h1_ok));
    kv.emplace_back("h2_ok", flag(out.hypotheses.h2_ok));
    if (!out.hypotheses.warnings.empty()) {
        kv.emplace_back("hypothesis_warnings", join(out.hypotheses.warnings));
    }
    kv.emplace_back("steps", std::to_string(out.steps));
    kv.emplace_back("reached_t_end", flag(out.reached_t_end));
    kv.emplace_back("initial_u_mass", format_g17(out.initial_u_mass));
    kv.emplace_back("initial_w_mass", format_g17(out.initial_w_mass));
    kv.emplace_back("consumed_mass", format_g17(out.consumed_mass));
    kv.emplace_back("theta_time_integral", format_g17(out.theta_time_integral));
    kv.emplace_back("max_ledger_residual", format_g17(out.max_abs_residual));
    kv.emplace_back("consumption_bound_ok", flag(out.consumption_ok));
    kv.emplace_back("sup_w_monotone", flag(out.w_monotone.ok));
    kv.emplace_back("boundedness_envelope", format_g17(out.envelope));
    kv.emplace_back("running_max_sup_u", format_g17(out.running_max_sup_u));
    kv.emplace_back("exceeded_envelope", flag(out.exceeded_envelope));
    kv.emplace_back("sup_u_plateaued", flag(out.plateaued));
    write_key_values(dir / "run.txt", kv);
}

int cmd_run(const RunConfig& base_config, const CommandOptions& options) {
    const RunConfig config = with_overrides(base_config, options);
    const fs::path dir = config.output.dir;

    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        std::cerr << "cannot create output directory " << dir.string() << ": " << ec.message()
                  << "\n";
        return exit_code(RunStatus::ConfigError);
    }

    const fs::path snapdir = dir / "snapshots";
    int snaps = 0;
    std::vector<RunHook> hooks;
    if (config.output.snapshots) {
        fs::create_directories(snapdir, ec);
        if (ec) {
            std::cerr << "cannot create " << snapdir.string() << ": " << ec.message() << "\n";
            return exit_code(RunStatus::ConfigError);
        }
        hooks.push_back([&](const FieldState& s, const StepInfo&) {
            if (snaps >= config.output.max_snapshots) return;
            char name[32];
            std::snprintf(name, sizeof name, "snap_%05d.csv", snaps);
            write_snapshot(snapdir / name, s);
            ++snaps;
        });
    }

    RunOutcome outcome = execute_run(config, hooks);
    write_run_artifacts(dir, config, outcome);

    if (!options.quiet) {
        std::cout << "run " << dir.string() << ": status=" << status_name(outcome.status);
        if (!outcome.error.empty()) std::cout << " (" << outcome.error << ")";
        if (outcome.final_state) {
            std::cout << " regime=" << regime_name(outcome.asymptote.regime)
                      << " amplitude=" << outcome.asymptote.amplitude
                      << " dominant_mode=" << outcome.asymptote.dominant_mode
                      << " steps=" << outcome.steps;
        }
        std::cout << "\n";
    }
    return exit_code(outcome.status);
}

int cmd_stability(const RunConfig& base_config, const CommandOptions& options) {
    const RunConfig config = with_overrides(base_config, options);
    try {
        const FieldState initial = make_initial_state(config);
        const double u_mass = integrate(config.grid, initial.u);
        const double w_mass = integrate(config.grid, initial.w);
        const double u_star = (u_mass + config.model.alpha * w_mass) / config.grid.length;

        const StabilityReport report = stability_report(config.model, u_star, config.grid.length);

        const fs::path dir = config.output.dir;
        fs::create_directories(dir);
        {
            std::ofstream f(dir / "manifest.cfg", std::ios::trunc);
            if (!f) throw InvalidInput("cannot write " + (dir / "manifest.cfg").string());
            f << "# reproducibility manifest: analyzed with `motsim stability manifest.cfg`\n"
              << serialize_config(config);
        }
        write_stability_report(dir, report, config.model, config.grid.length);

        if (!options.quiet) {
            std::cout << "stability " << dir.string() << ": u_star=" << format_g17(report.u_star)
                      << " unstable=" << (report.unstable ? "true" : "false")
                      << " admissible_modes=" << report.modes.modes.size();
            if (report.modes.fastest) {
                std::cout << " fastest_n=" << report.modes.fastest->n
                          << " growth=" << format_g17(report.modes.fastest->growth);
            }
            std::cout << "\n";
        }
        return exit_code(RunStatus::Ok);
    } catch (const Error& e) {
        std::cerr << "stability: " << e.what() << "\n";
        return exit_code(RunStatus::ConfigError);
    }
}

int cmd_sweep(const SweepConfig& sweep, const CommandOptions& options) {
    const RunConfig base = with_overrides(sweep.base, options);
    const fs::path dir = base.output.dir;

    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        std::cerr << "cannot create output directory " << dir.string() << ": " << ec.message()
                  << "\n";
        return exit_code(RunStatus::ConfigError);
    }

    const auto& axes = sweep.axes;
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.values.size();
    if (axes.empty()) total = 0;

    struct Cell {
        std::vector<double> values;
        RunStatus status = RunStatus::Ok;
        std::string error;
        bool evaluated = false;
        bool predicted = false; // stability columns are meaningful
        bool predicted_unstable = false;
        int fastest_n = 0;
        double fastest_growth = 0.0;
        Regime regime = Regime::Undecided;
        bool settled = false;
        double amplitude = 0.0;
        int dominant_mode = 0;
        double max_residual = 0.0;
        double theta = 0.0;
        int coherent = -1; // -1: no implication applies
    };
    std::vector<Cell> cells(total);

    int width = 3;
    for (std::size_t t = total; t >= 1000; t /= 10) ++width;

    std::atomic<std::size_t> next{0};
    std::mutex print_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) break;
            Cell& cell = cells[i];

            cell.values.resize(axes.size());
            std::size_t rem = i;
            for (std::size_t a = axes.size(); a-- > 0;) {
                const std::size_t size = axes[a].values.size();
                cell.values[a] = axes[a].values[rem % size];
                rem /= size;
            }

            char name[32];
            std::snprintf(name, sizeof name, "cell_%0*zu", width, i);

            RunConfig cfg = base;
            bool applied = true;
            try {
                for (std::size_t a = 0; a < axes.size(); ++a) {
                    cfg = apply_axis_value(cfg, axes[a].name, cell.values[a]);
                }
            } catch (const Error& e) {
                cell.status = RunStatus::ConfigError;
                cell.error = e.what();
                applied = false;
            }

            if (applied) {
                cfg.output.dir = (dir / name).string();
                cfg.output.snapshots = false;
                cell.theta = cfg.model.theta;

                RunOutcome outcome = execute_run(cfg);
                try {
                    write_run_artifacts(cfg.output.dir, cfg, outcome);
                } catch (const Error& e) {
                    if (outcome.status == RunStatus::Ok) {
                        outcome.status = RunStatus::ConfigError;
                        outcome.error = e.what();
                    }
                }
                cell.status = outcome.status;
                cell.error = outcome.error;
                if (outcome.status == RunStatus::Ok ||
                    outcome.status == RunStatus::SolverFailure) {
                    cell.predicted = true;
                    cell.predicted_unstable = outcome.stability.unstable;
                    if (outcome.stability.modes.fastest) {
                        cell.fastest_n = outcome.stability.modes.fastest->n;
                        cell.fastest_growth = outcome.stability.modes.fastest->growth;
                    }
                }
                if (outcome.status == RunStatus::Ok && outcome.final_state) {
                    cell.evaluated = true;
                    cell.regime = outcome.asymptote.regime;
                    cell.settled = outcome.asymptote.settled;
                    cell.amplitude = outcome.asymptote.amplitude;
                    cell.dominant_mode = outcome.asymptote.dominant_mode;
                    cell.max_residual = outcome.max_abs_residual;
                    // The linearization is about the theta = 0 equilibrium, so
                    // the prediction/observation contract only binds there.
                    if (cell.theta == 0.0) {
                        if (!cell.predicted_unstable) {
                            cell.coherent = cell.regime == Regime::ConvergeToUStar ? 1 : 0;
                        } else if (cell.fastest_growth > 0.05) {
                            cell.coherent = cell.regime == Regime::Pattern ? 1 : 0;
                        }
                    }
                }
            }

            if (!options.quiet) {
                std::lock_guard<std::mutex> lock(print_mutex);
                std::cout << "sweep " << name << " (" << (i + 1) << "/" << total
                          << "): status=" << status_name(cell.status);
                if (cell.evaluated) std::cout << " regime=" << regime_name(cell.regime);
                if (!cell.error.empty()) std::cout << " (" << cell.error << ")";
                std::cout << "\n";
            }
        }
    };

    std::size_t n_workers = options.workers > 0
                                ? static_cast<std::size_t>(options.workers)
                                : std::max(1u, std::thread::hardware_concurrency());
    n_workers = std::max<std::size_t>(1, std::min(n_workers, total));
    {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k + 1 < n_workers; ++k) pool.emplace_back(worker);
        worker();
    } // pool joins here

    int violations = 0;
    for (const auto& c : cells) {
        if (c.coherent == 0) ++violations;
    }

    const fs::path summary_path = dir / "sweep_summary.csv";
    std::ofstream f(summary_path, std::ios::trunc);
    if (!f) {
        std::cerr << "cannot write " << summary_path.string() << "\n";
        return exit_code(RunStatus::ConfigError);
    }
    f << "# coherence_violations=" << violations << "\n";
    for (const auto& a : axes) f << a.name << ",";
    f << "status,predicted_unstable,fastest_mode,fastest_growth,regime,settled,amplitude_u,"
         "dominant_mode,max_ledger_residual,coherent,error\n";
    for (const auto& c : cells) {
        for (double v : c.values) f << format_g17(v) << ",";
        f << status_name(c.status) << ",";
        if (c.predicted) {
            f << (c.predicted_unstable ? "true" : "false") << "," << c.fastest_n << ","
              << format_g17(c.fastest_growth) << ",";
        } else {
            f << ",,,";
        }
        if (c.evaluated) {
            f << regime_name(c.regime) << "," << (c.settled ? "true" : "false") << ","
              << format_g17(c.amplitude) << "," << c.dominant_mode << ","
              << format_g17(c.max_residual) << ",";
        } else {
            f << ",,,,,";
        }
        if (c.coherent >= 0) f << c.coherent;
        f << "," << sanitize_csv(c.error) << "\n";
    }
    f.close();

    if (!options.quiet) {
        std::cout << "sweep summary: " << total << " cells, coherence_violations=" << violations
                  << " (" << summary_path.string() << ")\n";
    }
    return exit_code(RunStatus::Ok);
}

} // namespace motsim
