#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "motsim/model.hpp"

namespace motsim {

/// Spatially homogeneous steady states of the reaction ODEs (theta = 0):
///   Zero          (0, 0, 0)
///   NutrientOnly  (0, 0, u*/alpha)   emitted only when alpha > 0
///   CellOnly      (u*, u*, 0)
enum class EquilibriumKind { Zero, NutrientOnly, CellOnly };

struct Equilibrium {
    EquilibriumKind kind;
    std::array<double, 3> state;       // (u, v, w)
    std::array<double, 3> eigenvalues; // reaction-ODE linearization
    bool unstable = false;             // some eigenvalue > 0
    int zero_modes = 0;                // eigenvalues at 0 (marginal directions)
};

std::vector<Equilibrium> ode_equilibria(const ModelParams& params, double u_star);

/// One point of the dispersion relation around (u_c, u_c, 0): the (u, v) block
/// gives rho^2 + a1 rho + a0 = 0 with
///   a1 = 1 + (dcoef + gamma(u_c)) k^2
///   a0 = dcoef gamma(u_c) k^4 + (gamma(u_c) + u_c gamma'(u_c)) k^2
/// and the decoupled nutrient branch rho_w = -k^2 - u_c F'(0).
struct DispersionPoint {
    double k_sq = 0.0;
    double a1 = 0.0;
    double a0 = 0.0;
    std::complex<double> rho_plus;  // larger real part
    std::complex<double> rho_minus;
    double rho_w = 0.0;
};

DispersionPoint dispersion_at(const ModelParams& params, double u_c, double k_sq);

/// Independent check: assembles the full 3x3 linearization matrix at wavenumber
/// k and extracts its eigenvalues by solving the characteristic cubic
/// numerically. Shares no code path with dispersion_at. Sorted by descending
/// real part (then descending imaginary part).
std::array<std::complex<double>, 3> mk_eigen_oracle(const ModelParams& params, double u_c,
                                                    double k_sq);

/// Upper edge of the unstable wavenumber band around (u*, u*, 0):
///   S = gamma(u*) + u* gamma'(u*);  band is 0 < k^2 < -S/(dcoef gamma(u*))
/// Empty when S >= 0.
std::optional<double> instability_band(const ModelParams& params, double u_star);

struct Mode {
    int n = 0;
    double k_sq = 0.0;
    double growth = 0.0; // Re rho_plus
};

struct ModeSet {
    std::vector<Mode> modes;
    std::optional<Mode> fastest; // ties resolved toward the smaller index
};

/// Neumann cosine modes k = n pi / length, n = 1..n_max, lying strictly inside
/// the instability band.
ModeSet admissible_modes(const ModelParams& params, double u_star, double length,
                         int n_max = 512);

/// The closed-form pattern conditions for the exponential motility family:
///   con1: u* > 1/lambda  and  (gamma1/gamma0) e^(lambda u*) < lambda u* - 1
///   con2: dcoef < (-S/gamma(u*)) length^2 / (n pi)^2
/// Throws WrongFamily for other motility families.
struct PatternConditions {
    bool con1 = false;
    bool con2 = false;
    double u_star_threshold = 0.0; // 1/lambda
    double con1_lhs = 0.0;         // (gamma1/gamma0) e^(lambda u*)
    double con1_rhs = 0.0;         // lambda u* - 1
    double con2_rhs = 0.0;         // D bound for the requested mode
    int mode_n = 1;
};

PatternConditions check_pattern_conditions(const ModelParams& params, double u_star,
                                           double length, int mode_n);

struct StabilityReport {
    double u_star = 0.0;
    double s_value = 0.0;               // gamma(u*) + u* gamma'(u*)
    std::optional<double> band_k_sq;    // empty when no unstable band
    ModeSet modes;
    std::optional<PatternConditions> conditions; // empty for non-exponential families
    std::vector<Equilibrium> equilibria;
    bool unstable = false; // some admissible mode grows
};

StabilityReport stability_report(const ModelParams& params, double u_star, double length,
                                 int n_max = 512);

} // namespace motsim
