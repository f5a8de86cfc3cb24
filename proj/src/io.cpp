#include "motsim/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace motsim {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open for writing: " + path.string());
    return out;
}

double parse_double(const std::string& token, const std::filesystem::path& path, int line) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') {
        throw InvalidInput("bad number '" + token + "' in " + path.string() + " line " +
                           std::to_string(line));
    }
    return v;
}

} // namespace

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_snapshot(const std::filesystem::path& path, const FieldState& state) {
    auto out = open_out(path);
    out << "# t=" << format_g17(state.t) << " n=" << state.grid.cells
        << " l=" << format_g17(state.grid.length) << "\n";
    out << "x,u,v,w\n";
    for (int i = 0; i < state.grid.cells; ++i) {
        out << format_g17(state.grid.center(i)) << ',' << format_g17(state.u[i]) << ','
            << format_g17(state.v[i]) << ',' << format_g17(state.w[i]) << "\n";
    }
    if (!out) throw InvalidInput("write failed: " + path.string());
}

FieldState read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open snapshot: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("empty snapshot: " + path.string());

    double t = 0.0, length = 0.0;
    long n = 0;
    if (std::sscanf(line.c_str(), "# t=%lf n=%ld l=%lf", &t, &n, &length) != 3) {
        throw InvalidInput("snapshot header not recognized in " + path.string());
    }
    if (!std::getline(in, line) || line != "x,u,v,w") {
        throw InvalidInput("snapshot column header not recognized in " + path.string());
    }

    FieldState state(Grid(length, static_cast<int>(n)));
    state.t = t;
    for (long i = 0; i < n; ++i) {
        if (!std::getline(in, line)) {
            throw InvalidInput("snapshot truncated at row " + std::to_string(i) + ": " +
                               path.string());
        }
        std::istringstream row(line);
        std::string tok;
        double vals[4];
        for (int c = 0; c < 4; ++c) {
            if (!std::getline(row, tok, ',')) {
                throw InvalidInput("snapshot row " + std::to_string(i) + " has fewer than 4 "
                                   "columns: " + path.string());
            }
            vals[c] = parse_double(tok, path, static_cast<int>(i) + 3);
        }
        state.u[i] = vals[1];
        state.v[i] = vals[2];
        state.w[i] = vals[3];
    }
    return state;
}

void write_series(const std::filesystem::path& path, const std::vector<SeriesRow>& rows) {
    auto out = open_out(path);
    out << kSeriesHeader << "\n";
    for (const auto& r : rows) {
        out << format_g17(r.t) << ',' << format_g17(r.mass_u) << ',' << format_g17(r.mass_w)
            << ',' << format_g17(r.theta_integral) << ',' << format_g17(r.ledger_residual) << ','
            << format_g17(r.sup_u) << ',' << format_g17(r.sup_v) << ',' << format_g17(r.sup_w)
            << ',' << format_g17(r.amplitude_u) << ',' << r.dominant_mode << "\n";
    }
    if (!out) throw InvalidInput("write failed: " + path.string());
}

void write_key_values(const std::filesystem::path& path,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto out = open_out(path);
    for (const auto& [k, v] : pairs) out << k << " = " << v << "\n";
    if (!out) throw InvalidInput("write failed: " + path.string());
}

void write_stability_report(const std::filesystem::path& dir, const StabilityReport& report,
                            const ModelParams& params, double length) {
    std::filesystem::create_directories(dir);

    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("u_star", format_g17(report.u_star));
    kv.emplace_back("s_value", format_g17(report.s_value));
    kv.emplace_back("band_k_sq", report.band_k_sq ? format_g17(*report.band_k_sq) : "none");
    kv.emplace_back("unstable", report.unstable ? "true" : "false");
    kv.emplace_back("admissible_modes", std::to_string(report.modes.modes.size()));
    if (report.modes.fastest) {
        kv.emplace_back("fastest_mode", std::to_string(report.modes.fastest->n));
        kv.emplace_back("fastest_growth", format_g17(report.modes.fastest->growth));
    } else {
        kv.emplace_back("fastest_mode", "none");
        kv.emplace_back("fastest_growth", "none");
    }
    if (report.conditions) {
        const auto& c = *report.conditions;
        kv.emplace_back("con1", c.con1 ? "true" : "false");
        kv.emplace_back("con1_lhs", format_g17(c.con1_lhs));
        kv.emplace_back("con1_rhs", format_g17(c.con1_rhs));
        kv.emplace_back("con1_u_star_threshold", format_g17(c.u_star_threshold));
        kv.emplace_back("con2", c.con2 ? "true" : "false");
        kv.emplace_back("con2_mode_n", std::to_string(c.mode_n));
        kv.emplace_back("con2_d_bound", format_g17(c.con2_rhs));
    } else {
        kv.emplace_back("con1", "n/a");
        kv.emplace_back("con2", "n/a");
    }
    for (const auto& eq : report.equilibria) {
        const char* name = eq.kind == EquilibriumKind::Zero ? "zero"
                           : eq.kind == EquilibriumKind::NutrientOnly ? "nutrient_only"
                                                                      : "cell_only";
        std::ostringstream line;
        line << "(" << format_g17(eq.state[0]) << ", " << format_g17(eq.state[1]) << ", "
             << format_g17(eq.state[2]) << ") eigenvalues (" << format_g17(eq.eigenvalues[0])
             << ", " << format_g17(eq.eigenvalues[1]) << ", " << format_g17(eq.eigenvalues[2])
             << ") " << (eq.unstable ? "unstable" : "stable") << " zero_modes="
             << eq.zero_modes;
        kv.emplace_back(std::string("equilibrium_") + name, line.str());
    }
    write_key_values(dir / "stability.txt", kv);

    auto out = open_out(dir / "stability_modes.csv");
    out << "n,k_sq,a1,a0,re_rho_plus,im_rho_plus,rho_w\n";
    for (const auto& mode : report.modes.modes) {
        const DispersionPoint pt = dispersion_at(params, report.u_star, mode.k_sq);
        out << mode.n << ',' << format_g17(pt.k_sq) << ',' << format_g17(pt.a1) << ','
            << format_g17(pt.a0) << ',' << format_g17(pt.rho_plus.real()) << ','
            << format_g17(pt.rho_plus.imag()) << ',' << format_g17(pt.rho_w) << "\n";
    }
    (void)length;
}

void write_asymptote_report(const std::filesystem::path& path, const AsymptoteReport& report) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("regime", regime_name(report.regime));
    kv.emplace_back("settled", report.settled ? "true" : "false");
    kv.emplace_back("u_star_pred", format_g17(report.u_star_pred));
    kv.emplace_back("w_star_pred", format_g17(report.w_star_pred));
    kv.emplace_back("dist_u", format_g17(report.dist_u));
    kv.emplace_back("dist_v", format_g17(report.dist_v));
    kv.emplace_back("dist_w", format_g17(report.dist_w));
    kv.emplace_back("window_variation", format_g17(report.window_variation));
    kv.emplace_back("amplitude", format_g17(report.amplitude));
    kv.emplace_back("dominant_mode", std::to_string(report.dominant_mode));
    write_key_values(path, kv);
}

} // namespace motsim
