#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "motsim/diagnostics.hpp"
#include "motsim/grid.hpp"
#include "motsim/stability.hpp"

namespace motsim {

/// Shortest round-trip-exact decimal form (17 significant digits).
std::string format_g17(double x);

/// Field snapshot:
///   # t=<time> n=<cells> l=<length>
///   x,u,v,w
///   <rows>
void write_snapshot(const std::filesystem::path& path, const FieldState& state);
FieldState read_snapshot(const std::filesystem::path& path);

struct SeriesRow {
    double t = 0.0;
    double mass_u = 0.0;
    double mass_w = 0.0;
    double theta_integral = 0.0;
    double ledger_residual = 0.0;
    double sup_u = 0.0;
    double sup_v = 0.0;
    double sup_w = 0.0;
    double amplitude_u = 0.0;
    int dominant_mode = 0;
};

inline constexpr const char* kSeriesHeader =
    "t,mass_u,mass_w,theta_integral,ledger_residual,sup_u,sup_v,sup_w,amplitude_u,dominant_mode";

void write_series(const std::filesystem::path& path, const std::vector<SeriesRow>& rows);

void write_key_values(const std::filesystem::path& path,
                      const std::vector<std::pair<std::string, std::string>>& pairs);

/// stability.txt (key=value) plus stability_modes.csv
/// ("n,k_sq,a1,a0,re_rho_plus,im_rho_plus,rho_w") in dir.
void write_stability_report(const std::filesystem::path& dir, const StabilityReport& report,
                            const ModelParams& params, double length);

void write_asymptote_report(const std::filesystem::path& path, const AsymptoteReport& report);

} // namespace motsim
