#include <doctest.h>

#include <cmath>
#include <random>

#include "motsim/model.hpp"
#include "oracle_values.hpp"

using namespace motsim;

namespace {

MotilitySpec fig1_motility() { return MotilitySpec::exponential(10.0, 0.1, 1.0); }
ResponseSpec fig1_response() { return ResponseSpec::hill(1.0, 2.0); }

double central_diff(double (*f)(const MotilitySpec&, double), const MotilitySpec& spec, double v,
                    double h) {
    return (f(spec, v + h) - f(spec, v - h)) / (2.0 * h);
}

} // namespace

TEST_CASE("exponential motility endpoint values") {
    const MotilitySpec spec = fig1_motility();
    CHECK(eval_motility(spec, 0.0) == 10.1);             // e^0 forces gamma1 + gamma0
    CHECK(eval_motility(spec, 1000.0) == 0.1);           // exponential underflows, floor gamma1
    CHECK(eval_motility(spec, 4.0) ==
          doctest::Approx(oracle::kGammaAt4).epsilon(1e-14));
    CHECK(spec.lower_bound() == 0.1);
    CHECK(spec.upper_bound() == 10.1);
    CHECK(spec.deriv_bound() == 10.0);
}

TEST_CASE("motility derivative closed forms") {
    const MotilitySpec spec = fig1_motility();
    CHECK(eval_motility_deriv(spec, 0.0) == -10.0); // -lambda gamma0 at v = 0
    CHECK(eval_motility_deriv(spec, 4.0) ==
          doctest::Approx(oracle::kGammaDerivAt4).epsilon(1e-14));

    const MotilitySpec flat = MotilitySpec::constant(2.0);
    CHECK(eval_motility_deriv(flat, 0.0) == 0.0);
    CHECK(eval_motility_deriv(flat, 7.3) == 0.0);
    CHECK(eval_motility(flat, 7.3) == 2.0);

    // Closed form against a central finite difference.
    for (double v : {0.1, 0.7, 2.0, 4.0, 9.5}) {
        const double fd = central_diff(&eval_motility, spec, v, 1e-6);
        CHECK(std::abs(eval_motility_deriv(spec, v) - fd) <= 1e-8);
    }
}

TEST_CASE("motility rejects negative concentrations") {
    CHECK_THROWS_AS(eval_motility(fig1_motility(), -0.5), NegativeInput);
    CHECK_THROWS_AS(eval_motility_deriv(fig1_motility(), -1e-9), NegativeInput);
}

TEST_CASE("table motility interpolates monotonically and clamps") {
    const MotilitySpec spec =
        MotilitySpec::table({{0.0, 5.0}, {1.0, 3.0}, {2.0, 2.5}, {4.0, 2.4}});
    CHECK(eval_motility(spec, 0.0) == 5.0);
    CHECK(eval_motility(spec, 1.0) == 3.0);
    CHECK(eval_motility(spec, 4.0) == 2.4);
    CHECK(eval_motility(spec, 50.0) == 2.4); // clamped beyond the last knot
    CHECK(spec.lower_bound() == 2.4);
    CHECK(spec.upper_bound() == 5.0);

    // Shape preservation: values stay inside the bracketing knots, and the
    // decreasing data produce a nonincreasing interpolant.
    double prev = eval_motility(spec, 0.0);
    for (int i = 1; i <= 400; ++i) {
        const double v = 4.0 * i / 400.0;
        const double g = eval_motility(spec, v);
        CHECK(g <= prev + 1e-12);
        CHECK(g >= 2.4);
        CHECK(g <= 5.0);
        prev = g;
    }

    // Interpolant slope agrees with a finite difference away from the knots.
    for (double v : {0.5, 1.5, 2.7, 3.3}) {
        const double fd = central_diff(&eval_motility, spec, v, 1e-6);
        CHECK(std::abs(eval_motility_deriv(spec, v) - fd) <= 1e-6);
    }
}

TEST_CASE("table motility evaluating to zero throws") {
    const MotilitySpec spec = MotilitySpec::table({{0.0, 1.0}, {1.0, 0.0}});
    CHECK_THROWS_AS(eval_motility(spec, 1.0), NonPositiveMotility);
}

TEST_CASE("response families") {
    const ResponseSpec hill = fig1_response();
    CHECK(eval_response(hill, 0.0) == 0.0);
    CHECK(eval_response(hill, 1.0) == 0.5);
    CHECK(eval_response(hill, 4.0) ==
          doctest::Approx(oracle::kResponseAt4).epsilon(1e-15));

    const ResponseSpec lin = ResponseSpec::linear();
    CHECK(eval_response(lin, 3.7) == 3.7);
    CHECK(eval_response_deriv(lin, 3.7) == 1.0);

    const ResponseSpec mm = ResponseSpec::michaelis(1.0);
    CHECK(eval_response(mm, 0.0) == 0.0);
    CHECK(eval_response(mm, 4.0) == doctest::Approx(0.8).epsilon(1e-15));

    CHECK_THROWS_AS(eval_response(hill, -0.1), NegativeInput);
    CHECK_THROWS_AS(eval_response_deriv(mm, -0.1), NegativeInput);
}

TEST_CASE("response derivatives match finite differences") {
    for (const ResponseSpec& spec :
         {ResponseSpec::linear(), ResponseSpec::michaelis(0.7), ResponseSpec::hill(1.0, 2.0),
          ResponseSpec::hill(2.5, 3.0)}) {
        for (double w : {0.1, 0.5, 1.0, 2.0, 8.0}) {
            const double h = 1e-5;
            const double fd = (eval_response(spec, w + h) - eval_response(spec, w - h)) / (2 * h);
            CHECK(std::abs(eval_response_deriv(spec, w) - fd) <= 1e-6);
        }
    }
}

TEST_CASE("exponential family bounds hold pointwise") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> g0(0.5, 20.0), g1(0.01, 2.0), lam(0.2, 3.0),
        vs(0.0, 15.0);
    for (int trial = 0; trial < 50; ++trial) {
        const MotilitySpec spec = MotilitySpec::exponential(g0(gen), g1(gen), lam(gen));
        double prev_v = 0.0, prev_g = eval_motility(spec, 0.0);
        for (int i = 0; i < 40; ++i) {
            const double v = vs(gen);
            const double g = eval_motility(spec, v);
            CHECK(g >= spec.lower_bound());
            CHECK(g <= spec.upper_bound() * (1 + 1e-15));
            CHECK(std::abs(eval_motility_deriv(spec, v)) <= spec.deriv_bound() * (1 + 1e-15));
            // Density-suppressed: nonincreasing in v.
            if (v >= prev_v) CHECK(g <= prev_g + 1e-12);
            if (v < prev_v) CHECK(g >= prev_g - 1e-12);
            prev_v = v;
            prev_g = g;
        }
    }
}

TEST_CASE("hypothesis validation on the reference parameter set") {
    const ModelParams params(fig1_motility(), fig1_response(), 1.0, 0.0, 0.1);
    const HypothesisReport rep = validate_hypotheses(params, 10.0, 10.0);
    CHECK(rep.h1_ok);
    CHECK(rep.h2_ok);
    CHECK(rep.ok());
    REQUIRE(!rep.warnings.empty()); // Hill with m = 2 has F'(0) = 0
    bool mentions_deriv = false;
    for (const auto& w : rep.warnings) {
        if (w.find("F'(0)") != std::string::npos) mentions_deriv = true;
    }
    CHECK(mentions_deriv);
    CHECK(rep.gamma_min >= 0.1);
    CHECK(rep.gamma_max <= 10.1 * (1 + 1e-15));
}

TEST_CASE("hypothesis validation trivial pass and table failure") {
    const ModelParams tame(MotilitySpec::constant(1.0), ResponseSpec::linear(), 0.5, 0.0, 1.0);
    const HypothesisReport ok = validate_hypotheses(tame, 5.0, 5.0);
    CHECK(ok.ok());
    CHECK(ok.warnings.empty());

    ModelParams bad = tame;
    bad.motility = MotilitySpec::table({{0.0, 1.0}, {2.0, 0.0}});
    const HypothesisReport rep = validate_hypotheses(bad, 5.0, 5.0);
    CHECK(!rep.h1_ok);
    CHECK(!rep.ok());
}

TEST_CASE("hypothesis validation rejects bad sampling ranges") {
    const ModelParams params(fig1_motility(), fig1_response(), 1.0, 0.0, 0.1);
    CHECK_THROWS_AS(validate_hypotheses(params, -1.0, 10.0), InvalidRange);
    CHECK_THROWS_AS(validate_hypotheses(params, 10.0, 10.0, 1), InvalidRange);
}

TEST_CASE("boundedness envelope closed form") {
    const MotilitySpec g = MotilitySpec::constant(1.0);
    const ResponseSpec f = ResponseSpec::linear();
    // alpha = 0 and huge D collapse every factor to 1: M -> c1 * e^c2.
    CHECK(boundedness_envelope(ModelParams(g, f, 0.0, 0.0, 1e12), 1.0, 1.0) ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-9));
    CHECK(boundedness_envelope(ModelParams(g, f, 1.0, 0.0, 1.0), 1.0, 0.0) == 33554432.0);
    CHECK(boundedness_envelope(ModelParams(g, f, 0.0, 0.0, 1.0), 2.0, 0.0) == 8192.0);
}
