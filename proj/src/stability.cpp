#include "motsim/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace motsim {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

void require_u_star(double u_star) {
    if (!std::isfinite(u_star) || u_star < 0.0) {
        throw InvalidInput("equilibrium mass u* must be >= 0");
    }
}

constexpr double kZeroEig = 1e-14;

Equilibrium make_equilibrium(EquilibriumKind kind, std::array<double, 3> state,
                             std::array<double, 3> eig) {
    Equilibrium e;
    e.kind = kind;
    e.state = state;
    e.eigenvalues = eig;
    for (double x : eig) {
        if (x > kZeroEig) e.unstable = true;
        if (std::abs(x) <= kZeroEig) ++e.zero_modes;
    }
    return e;
}

/// Monic cubic roots, polished with complex Newton in extended precision so
/// the oracle comparison tolerance is never limited by the closed form.
std::array<std::complex<double>, 3> solve_cubic(double b2, double b1, double b0) {
    using C = std::complex<long double>;
    const long double B2 = b2, B1 = b1, B0 = b0;
    const long double p = B1 - B2 * B2 / 3.0L;
    const long double q = 2.0L * B2 * B2 * B2 / 27.0L - B2 * B1 / 3.0L + B0;

    std::array<C, 3> t;
    const long double disc = -4.0L * p * p * p - 27.0L * q * q;
    if (p == 0.0L && q == 0.0L) {
        t = {C(0), C(0), C(0)};
    } else if (disc >= 0.0L) {
        // three real roots
        const long double m = 2.0L * std::sqrt(-p / 3.0L);
        long double arg = 3.0L * q / (p * m);
        arg = std::clamp(arg, -1.0L, 1.0L);
        const long double phi = std::acos(arg);
        for (int k = 0; k < 3; ++k) {
            t[k] = C(m * std::cos((phi - 2.0L * kPiL * k) / 3.0L));
        }
    } else {
        // one real root, complex pair
        const long double s = std::sqrt(q * q / 4.0L + p * p * p / 27.0L);
        const long double a = std::cbrt(q > 0 ? -q / 2.0L - s : -q / 2.0L + s);
        const long double b = (a == 0.0L) ? 0.0L : -p / (3.0L * a);
        t[0] = C(a + b);
        t[1] = C(-(a + b) / 2.0L, (a - b) * std::sqrt(3.0L) / 2.0L);
        t[2] = std::conj(t[1]);
    }

    std::array<std::complex<double>, 3> out;
    for (int k = 0; k < 3; ++k) {
        C z = t[k] - B2 / 3.0L;
        for (int it = 0; it < 6; ++it) {
            const C f = ((z + B2) * z + B1) * z + B0;
            const C df = (3.0L * z + 2.0L * B2) * z + B1;
            if (std::abs(df) == 0.0L) break;
            const C step = f / df;
            z -= step;
            if (std::abs(step) <= 1e-30L * (1.0L + std::abs(z))) break;
        }
        out[k] = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.real() != y.real()) return x.real() > y.real();
        return x.imag() > y.imag();
    });
    return out;
}

} // namespace

std::vector<Equilibrium> ode_equilibria(const ModelParams& params, double u_star) {
    require_u_star(u_star);
    std::vector<Equilibrium> out;
    out.push_back(make_equilibrium(EquilibriumKind::Zero, {0.0, 0.0, 0.0}, {0.0, -1.0, 0.0}));
    if (u_star > 0.0) {
        if (params.alpha > 0.0) {
            const double wbar = u_star / params.alpha;
            const double growth = params.alpha * eval_response(params.response, wbar);
            out.push_back(make_equilibrium(EquilibriumKind::NutrientOnly, {0.0, 0.0, wbar},
                                           {0.0, -1.0, growth}));
        }
        const double fp0 = eval_response_deriv(params.response, 0.0);
        out.push_back(make_equilibrium(EquilibriumKind::CellOnly, {u_star, u_star, 0.0},
                                       {0.0, -1.0, -u_star * fp0}));
    }
    return out;
}

DispersionPoint dispersion_at(const ModelParams& params, double u_c, double k_sq) {
    require_u_star(u_c);
    if (!std::isfinite(k_sq) || k_sq < 0.0) throw InvalidInput("k^2 must be >= 0");

    const double g = eval_motility(params.motility, u_c);
    const double dg = eval_motility_deriv(params.motility, u_c);
    const double fp0 = eval_response_deriv(params.response, 0.0);

    DispersionPoint pt;
    pt.k_sq = k_sq;
    pt.a1 = 1.0 + (params.dcoef + g) * k_sq;
    pt.a0 = params.dcoef * g * k_sq * k_sq + (g + u_c * dg) * k_sq;
    pt.rho_w = -k_sq - u_c * fp0;

    const double disc = pt.a1 * pt.a1 - 4.0 * pt.a0;
    if (disc >= 0.0) {
        // Cancellation-safe: the larger-magnitude root first, the other from
        // the product a0.
        const double sq = std::sqrt(disc);
        double big;
        if (pt.a1 >= 0.0) {
            big = -0.5 * (pt.a1 + sq);
        } else {
            big = -0.5 * (pt.a1 - sq);
        }
        double other;
        if (big != 0.0) {
            other = pt.a0 / big;
        } else {
            other = -pt.a1; // big == 0 forces a0 == 0
        }
        const double lo = std::min(big, other), hi = std::max(big, other);
        pt.rho_plus = hi;
        pt.rho_minus = lo;
    } else {
        const double re = -0.5 * pt.a1;
        const double im = 0.5 * std::sqrt(-disc);
        pt.rho_plus = {re, im};
        pt.rho_minus = {re, -im};
    }
    return pt;
}

std::array<std::complex<double>, 3> mk_eigen_oracle(const ModelParams& params, double u_c,
                                                    double k_sq) {
    require_u_star(u_c);
    if (!std::isfinite(k_sq) || k_sq < 0.0) throw InvalidInput("k^2 must be >= 0");

    const double g = eval_motility(params.motility, u_c);
    const double dg = eval_motility_deriv(params.motility, u_c);
    const double fp0 = eval_response_deriv(params.response, 0.0);

    const double m[3][3] = {
        {-g * k_sq, -u_c * dg * k_sq, params.alpha * u_c * fp0},
        {1.0, -params.dcoef * k_sq - 1.0, 0.0},
        {0.0, 0.0, -k_sq - u_c * fp0},
    };

    // det(M - rho I) = -(rho^3 + b2 rho^2 + b1 rho + b0), assembled literally
    // from trace, principal minors, and determinant.
    const double tr = m[0][0] + m[1][1] + m[2][2];
    const double minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
                          (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                          (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return solve_cubic(-tr, minors, -det);
}

std::optional<double> instability_band(const ModelParams& params, double u_star) {
    require_u_star(u_star);
    const double g = eval_motility(params.motility, u_star);
    const double s = g + u_star * eval_motility_deriv(params.motility, u_star);
    if (s >= 0.0) return std::nullopt;
    return -s / (params.dcoef * g);
}

ModeSet admissible_modes(const ModelParams& params, double u_star, double length, int n_max) {
    if (!std::isfinite(length) || length <= 0.0) throw InvalidInput("domain length must be > 0");
    if (n_max < 1) throw InvalidInput("n_max must be >= 1");
    ModeSet set;
    const auto band = instability_band(params, u_star);
    if (!band) return set;
    for (int n = 1; n <= n_max; ++n) {
        const double k = n * M_PI / length;
        const double k_sq = k * k;
        if (!(k_sq < *band)) break; // k_sq increases with n
        Mode mode;
        mode.n = n;
        mode.k_sq = k_sq;
        mode.growth = dispersion_at(params, u_star, k_sq).rho_plus.real();
        if (!set.fastest || mode.growth > set.fastest->growth) set.fastest = mode;
        set.modes.push_back(mode);
    }
    return set;
}

PatternConditions check_pattern_conditions(const ModelParams& params, double u_star,
                                           double length, int mode_n) {
    require_u_star(u_star);
    if (!std::isfinite(length) || length <= 0.0) throw InvalidInput("domain length must be > 0");
    if (mode_n < 1) throw InvalidInput("mode index must be >= 1");
    if (params.motility.family != MotilityFamily::Exponential) {
        throw WrongFamily("pattern conditions are closed-form only for the exponential "
                          "motility family");
    }
    const double g0 = params.motility.gamma0;
    const double g1 = params.motility.gamma1;
    const double lam = params.motility.lambda;

    PatternConditions pc;
    pc.mode_n = mode_n;
    pc.u_star_threshold = 1.0 / lam;
    pc.con1_rhs = lam * u_star - 1.0;
    pc.con1_lhs = (g0 > 0.0) ? (g1 / g0) * std::exp(lam * u_star)
                             : std::numeric_limits<double>::infinity();
    pc.con1 = (u_star > pc.u_star_threshold) && (pc.con1_lhs < pc.con1_rhs);

    const double g = eval_motility(params.motility, u_star);
    const double s = g + u_star * eval_motility_deriv(params.motility, u_star);
    const double kn = mode_n * M_PI / length;
    pc.con2_rhs = (-s / g) * (1.0 / (kn * kn));
    pc.con2 = params.dcoef < pc.con2_rhs;
    return pc;
}

StabilityReport stability_report(const ModelParams& params, double u_star, double length,
                                 int n_max) {
    StabilityReport rep;
    rep.u_star = u_star;
    const double g = eval_motility(params.motility, u_star);
    rep.s_value = g + u_star * eval_motility_deriv(params.motility, u_star);
    rep.band_k_sq = instability_band(params, u_star);
    rep.modes = admissible_modes(params, u_star, length, n_max);
    rep.equilibria = ode_equilibria(params, u_star);
    try {
        rep.conditions = check_pattern_conditions(params, u_star, length, 1);
    } catch (const WrongFamily&) {
        rep.conditions = std::nullopt;
    }
    rep.unstable = rep.modes.fastest && rep.modes.fastest->growth > 0.0;
    return rep;
}

} // namespace motsim
