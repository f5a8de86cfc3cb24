#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motsim/errors.hpp"

namespace motsim {

/// Motility function gamma(v): how fast cells move as a function of signal level.
/// Three families:
///   Exponential  gamma(v) = gamma1 + gamma0 * exp(-lambda * v)
///   Constant     gamma(v) = gamma_c
///   Table        monotone piecewise-cubic through (v, gamma) knots,
///                clamped to the end values outside the knot range
enum class MotilityFamily { Exponential, Constant, Table };

struct MotilitySpec {
    MotilityFamily family = MotilityFamily::Constant;

    // Exponential family.
    double gamma0 = 0.0;
    double gamma1 = 0.0;
    double lambda = 0.0;

    // Constant family.
    double gamma_c = 0.0;

    // Table family: strictly increasing v with finite gamma values.
    std::vector<std::pair<double, double>> knots;

    // Fritsch-Carlson slopes, filled at construction for Table.
    std::vector<double> slopes;

    static MotilitySpec exponential(double gamma0, double gamma1, double lambda);
    static MotilitySpec constant(double gamma_c);
    static MotilitySpec table(std::vector<std::pair<double, double>> knots);

    /// Structural lower/upper bounds for the families that have closed forms
    /// (Exponential: [gamma1, gamma1 + gamma0]; Constant: [gamma_c, gamma_c];
    /// Table: [min knot, max knot] thanks to the shape-preserving interpolant).
    double lower_bound() const;
    double upper_bound() const;
    /// Closed-form bound on |gamma'| where available (Exponential: lambda*gamma0;
    /// Constant: 0); for Table the sampled estimate from validate_hypotheses applies.
    double deriv_bound() const;
};

/// Nutrient response F(w). Families:
///   Linear      F(w) = w
///   Michaelis   F(w) = w / (lambda_f + w)
///   Hill        F(w) = w^m / (lambda_f + w^m),  m > 1
enum class ResponseFamily { Linear, Michaelis, Hill };

struct ResponseSpec {
    ResponseFamily family = ResponseFamily::Linear;
    double lambda_f = 1.0;
    double hill_m = 2.0;

    static ResponseSpec linear();
    static ResponseSpec michaelis(double lambda_f);
    static ResponseSpec hill(double lambda_f, double m);
};

/// Full parameter set of the model
///   u_t = lap(gamma(v) u) + alpha u F(w) - theta u
///   v_t = dcoef lap(v) + u - v
///   w_t = lap(w) - u F(w)
struct ModelParams {
    MotilitySpec motility;
    ResponseSpec response;
    double alpha = 0.0; // growth yield, >= 0
    double theta = 0.0; // death rate, >= 0
    double dcoef = 1.0; // signal diffusivity, > 0

    ModelParams() = default;
    ModelParams(MotilitySpec m, ResponseSpec r, double alpha, double theta, double dcoef);
};

double eval_motility(const MotilitySpec& spec, double v);
double eval_motility_deriv(const MotilitySpec& spec, double v);
double eval_response(const ResponseSpec& spec, double w);
double eval_response_deriv(const ResponseSpec& spec, double w);

/// Sampled check of the structural hypotheses:
///   (H1) gamma positive and bounded with bounded derivative on [0, v_max]
///   (H2) F(0) = 0 and F nondecreasing on [0, w_max]
/// F'(0) = 0 is legal but degenerate for some of the equilibrium analysis, so it
/// is reported as a warning rather than a failure.
struct HypothesisReport {
    bool h1_ok = false;
    bool h2_ok = false;
    double gamma_min = 0.0;
    double gamma_max = 0.0;
    double deriv_bound = 0.0; // max sampled |gamma'|
    std::vector<std::string> warnings;
    int samples = 0;

    bool ok() const { return h1_ok && h2_ok; }
};

HypothesisReport validate_hypotheses(const ModelParams& params, double v_max, double w_max,
                                     int n_samples = 10001);

/// A priori sup-norm ceiling for u:
///   c1 (1+alpha)^13 (1+1/dcoef)^12 exp(c2 (1+alpha)^6 (1+1/dcoef)^4).
/// Advisory only; often overflows to +inf for interesting parameters.
double boundedness_envelope(const ModelParams& params, double c1 = 1.0, double c2 = 1.0);

} // namespace motsim
