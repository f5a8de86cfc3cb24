#include "motsim/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace motsim {

namespace {

bool finite(double x) { return std::isfinite(x); }

/// Fritsch-Carlson tangents: monotone on monotone data, no overshoot past
/// neighboring knot values either way.
std::vector<double> fritsch_carlson_slopes(const std::vector<std::pair<double, double>>& k) {
    const std::size_t n = k.size();
    std::vector<double> h(n - 1), d(n - 1), m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = k[i + 1].first - k[i].first;
        d[i] = (k[i + 1].second - k[i].second) / h[i];
    }
    if (n == 2) {
        m[0] = m[1] = d[0];
        return m;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] == 0.0 || d[i] == 0.0 || (d[i - 1] > 0) != (d[i] > 0)) {
            m[i] = 0.0;
        } else {
            const double w1 = 2 * h[i] + h[i - 1];
            const double w2 = h[i] + 2 * h[i - 1];
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double t = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (t * d0 <= 0.0) return 0.0;
        if ((d0 > 0) != (d1 > 0) && std::abs(t) > 3 * std::abs(d0)) return 3 * d0;
        return t;
    };
    m[0] = endpoint(h[0], h[1], d[0], d[1]);
    m[n - 1] = endpoint(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    return m;
}

struct HermiteEval {
    double value;
    double deriv;
};

HermiteEval eval_table(const MotilitySpec& spec, double v) {
    const auto& k = spec.knots;
    if (v <= k.front().first) return {k.front().second, 0.0};
    if (v >= k.back().first) return {k.back().second, 0.0};
    std::size_t i = 1;
    while (k[i].first < v) ++i; // knots are few; linear scan is fine
    const double x0 = k[i - 1].first, x1 = k[i].first;
    const double y0 = k[i - 1].second, y1 = k[i].second;
    const double m0 = spec.slopes[i - 1], m1 = spec.slopes[i];
    const double h = x1 - x0;
    const double t = (v - x0) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    const double value = h00 * y0 + h10 * h * m0 + h01 * y1 + h11 * h * m1;
    const double dh00 = (6 * t2 - 6 * t) / h;
    const double dh10 = 3 * t2 - 4 * t + 1;
    const double dh01 = (-6 * t2 + 6 * t) / h;
    const double dh11 = 3 * t2 - 2 * t;
    const double deriv = dh00 * y0 + dh10 * m0 + dh01 * y1 + dh11 * m1;
    return {value, deriv};
}

} // namespace

MotilitySpec MotilitySpec::exponential(double gamma0, double gamma1, double lambda) {
    if (!finite(gamma0) || !finite(gamma1) || !finite(lambda) || gamma0 < 0.0 || gamma1 <= 0.0 ||
        lambda <= 0.0) {
        throw InvalidInput("exponential motility needs gamma0 >= 0, gamma1 > 0, lambda > 0");
    }
    MotilitySpec s;
    s.family = MotilityFamily::Exponential;
    s.gamma0 = gamma0;
    s.gamma1 = gamma1;
    s.lambda = lambda;
    return s;
}

MotilitySpec MotilitySpec::constant(double gamma_c) {
    if (!finite(gamma_c) || gamma_c <= 0.0) {
        throw InvalidInput("constant motility needs gamma_c > 0");
    }
    MotilitySpec s;
    s.family = MotilityFamily::Constant;
    s.gamma_c = gamma_c;
    return s;
}

MotilitySpec MotilitySpec::table(std::vector<std::pair<double, double>> knots) {
    if (knots.size() < 2) throw InvalidInput("table motility needs at least two knots");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!finite(knots[i].first) || !finite(knots[i].second)) {
            throw InvalidInput("table motility knots must be finite");
        }
        if (i > 0 && knots[i].first <= knots[i - 1].first) {
            throw InvalidInput("table motility knot positions must strictly increase");
        }
    }
    MotilitySpec s;
    s.family = MotilityFamily::Table;
    s.knots = std::move(knots);
    s.slopes = fritsch_carlson_slopes(s.knots);
    return s;
}

double MotilitySpec::lower_bound() const {
    switch (family) {
    case MotilityFamily::Exponential: return gamma1;
    case MotilityFamily::Constant: return gamma_c;
    case MotilityFamily::Table: {
        double lo = knots.front().second;
        for (const auto& [v, g] : knots) lo = std::min(lo, g);
        return lo;
    }
    }
    return 0.0;
}

double MotilitySpec::upper_bound() const {
    switch (family) {
    case MotilityFamily::Exponential: return gamma1 + gamma0;
    case MotilityFamily::Constant: return gamma_c;
    case MotilityFamily::Table: {
        double hi = knots.front().second;
        for (const auto& [v, g] : knots) hi = std::max(hi, g);
        return hi;
    }
    }
    return 0.0;
}

double MotilitySpec::deriv_bound() const {
    switch (family) {
    case MotilityFamily::Exponential: return lambda * gamma0;
    case MotilityFamily::Constant: return 0.0;
    case MotilityFamily::Table: {
        double b = 0.0;
        for (double m : slopes) b = std::max(b, std::abs(m));
        // Interior slope of the Hermite piece can exceed knot tangents by a
        // bounded factor; 1.5x covers the cubic's extremum.
        return 1.5 * b;
    }
    }
    return 0.0;
}

ResponseSpec ResponseSpec::linear() {
    ResponseSpec s;
    s.family = ResponseFamily::Linear;
    return s;
}

ResponseSpec ResponseSpec::michaelis(double lambda_f) {
    if (!finite(lambda_f) || lambda_f <= 0.0) {
        throw InvalidInput("michaelis response needs lambda_f > 0");
    }
    ResponseSpec s;
    s.family = ResponseFamily::Michaelis;
    s.lambda_f = lambda_f;
    return s;
}

ResponseSpec ResponseSpec::hill(double lambda_f, double m) {
    if (!finite(lambda_f) || lambda_f <= 0.0 || !finite(m) || m <= 1.0) {
        throw InvalidInput("hill response needs lambda_f > 0 and exponent m > 1");
    }
    ResponseSpec s;
    s.family = ResponseFamily::Hill;
    s.lambda_f = lambda_f;
    s.hill_m = m;
    return s;
}

ModelParams::ModelParams(MotilitySpec m, ResponseSpec r, double alpha_, double theta_,
                         double dcoef_)
    : motility(std::move(m)), response(r), alpha(alpha_), theta(theta_), dcoef(dcoef_) {
    if (!finite(alpha) || alpha < 0.0) throw InvalidInput("alpha must be >= 0");
    if (!finite(theta) || theta < 0.0) throw InvalidInput("theta must be >= 0");
    if (!finite(dcoef) || dcoef <= 0.0) throw InvalidInput("dcoef must be > 0");
}

double eval_motility(const MotilitySpec& spec, double v) {
    if (v < 0.0) throw NegativeInput("motility evaluated at negative v");
    switch (spec.family) {
    case MotilityFamily::Exponential: return spec.gamma1 + spec.gamma0 * std::exp(-spec.lambda * v);
    case MotilityFamily::Constant: return spec.gamma_c;
    case MotilityFamily::Table: {
        const double g = eval_table(spec, v).value;
        if (g <= 0.0) throw NonPositiveMotility("table motility evaluated to a value <= 0");
        return g;
    }
    }
    throw InvalidInput("unknown motility family");
}

double eval_motility_deriv(const MotilitySpec& spec, double v) {
    if (v < 0.0) throw NegativeInput("motility derivative evaluated at negative v");
    switch (spec.family) {
    case MotilityFamily::Exponential:
        return -spec.lambda * spec.gamma0 * std::exp(-spec.lambda * v);
    case MotilityFamily::Constant: return 0.0;
    case MotilityFamily::Table: return eval_table(spec, v).deriv;
    }
    throw InvalidInput("unknown motility family");
}

double eval_response(const ResponseSpec& spec, double w) {
    if (w < 0.0) throw NegativeInput("response evaluated at negative w");
    switch (spec.family) {
    case ResponseFamily::Linear: return w;
    case ResponseFamily::Michaelis: return w / (spec.lambda_f + w);
    case ResponseFamily::Hill: {
        const double wm = std::pow(w, spec.hill_m);
        return wm / (spec.lambda_f + wm);
    }
    }
    throw InvalidInput("unknown response family");
}

double eval_response_deriv(const ResponseSpec& spec, double w) {
    if (w < 0.0) throw NegativeInput("response derivative evaluated at negative w");
    switch (spec.family) {
    case ResponseFamily::Linear: return 1.0;
    case ResponseFamily::Michaelis: {
        const double s = spec.lambda_f + w;
        return spec.lambda_f / (s * s);
    }
    case ResponseFamily::Hill: {
        const double wm = std::pow(w, spec.hill_m);
        const double s = spec.lambda_f + wm;
        if (w == 0.0) return 0.0; // m > 1, so w^(m-1) -> 0
        return spec.hill_m * spec.lambda_f * std::pow(w, spec.hill_m - 1.0) / (s * s);
    }
    }
    throw InvalidInput("unknown response family");
}

HypothesisReport validate_hypotheses(const ModelParams& params, double v_max, double w_max,
                                     int n_samples) {
    if (!finite(v_max) || v_max <= 0.0 || !finite(w_max) || w_max <= 0.0) {
        throw InvalidRange("hypothesis sampling ranges must be positive");
    }
    if (n_samples < 2) throw InvalidRange("hypothesis validation needs at least two samples");

    HypothesisReport rep;
    rep.samples = n_samples;

    rep.h1_ok = true;
    rep.gamma_min = std::numeric_limits<double>::infinity();
    rep.gamma_max = 0.0;
    rep.deriv_bound = 0.0;
    // Table knots are attained values, so check them directly; the sampled
    // grid below could straddle an isolated zero.
    if (params.motility.family == MotilityFamily::Table) {
        for (const auto& [v, g] : params.motility.knots) {
            if (g <= 0.0) {
                rep.h1_ok = false;
                rep.warnings.push_back("motility table touches zero at v = " +
                                       std::to_string(v));
                break;
            }
        }
    }
    for (int i = 0; rep.h1_ok && i < n_samples; ++i) {
        const double v = v_max * static_cast<double>(i) / (n_samples - 1);
        double g = 0.0, dg = 0.0;
        try {
            g = eval_motility(params.motility, v);
            dg = eval_motility_deriv(params.motility, v);
        } catch (const Error& e) {
            rep.h1_ok = false;
            rep.warnings.push_back(std::string("motility evaluation failed: ") + e.what());
            break;
        }
        if (!finite(g) || g <= 0.0 || !finite(dg)) {
            rep.h1_ok = false;
            rep.warnings.push_back("motility left the admissible range (positive, finite, "
                                   "finite derivative)");
            break;
        }
        rep.gamma_min = std::min(rep.gamma_min, g);
        rep.gamma_max = std::max(rep.gamma_max, g);
        rep.deriv_bound = std::max(rep.deriv_bound, std::abs(dg));
    }
    if (!rep.h1_ok) rep.gamma_min = rep.gamma_max = rep.deriv_bound = 0.0;

    rep.h2_ok = true;
    double prev = 0.0;
    for (int i = 0; i < n_samples && rep.h2_ok; ++i) {
        const double w = w_max * static_cast<double>(i) / (n_samples - 1);
        double f = 0.0;
        try {
            f = eval_response(params.response, w);
        } catch (const Error& e) {
            rep.h2_ok = false;
            rep.warnings.push_back(std::string("response evaluation failed: ") + e.what());
            break;
        }
        if (!finite(f)) {
            rep.h2_ok = false;
            rep.warnings.push_back("response produced a non-finite value");
            break;
        }
        if (i == 0) {
            if (f != 0.0) {
                rep.h2_ok = false;
                rep.warnings.push_back("response does not vanish at w = 0");
            }
        } else if (f < prev - 1e-14 * std::max(1.0, std::abs(prev))) {
            rep.h2_ok = false;
            rep.warnings.push_back("response is not nondecreasing on the sampled range");
        }
        prev = f;
    }
    if (rep.h2_ok && eval_response_deriv(params.response, 0.0) == 0.0) {
        rep.warnings.push_back("F'(0) = 0: growth is degenerate at vanishing nutrient; "
                               "equilibrium analysis relying on F'(0) > 0 is marginal");
    }
    return rep;
}

double boundedness_envelope(const ModelParams& params, double c1, double c2) {
    if (!finite(c1) || !finite(c2) || c1 <= 0.0 || c2 < 0.0) {
        throw InvalidInput("envelope constants need c1 > 0 and c2 >= 0");
    }
    const double a = 1.0 + params.alpha;
    const double d = 1.0 + 1.0 / params.dcoef;
    const double poly = c1 * std::pow(a, 13) * std::pow(d, 12);
    const double arg = c2 * std::pow(a, 6) * std::pow(d, 4);
    return poly * std::exp(arg);
}

} // namespace motsim
