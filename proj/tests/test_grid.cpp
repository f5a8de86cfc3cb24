#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "motsim/grid.hpp"
#include "oracle_values.hpp"

using namespace motsim;

namespace {

constexpr double kPi = std::numbers::pi;

Field sample_cos(const Grid& grid, int mode) {
    Field f(grid.cells);
    for (int i = 0; i < grid.cells; ++i) {
        f[i] = std::cos(mode * kPi * grid.center(i) / grid.length);
    }
    return f;
}

double eigen_error(int cells) {
    const Grid grid(20.0, cells);
    const Field f = sample_cos(grid, 1);
    const Field lap = laplacian_neumann(grid, f);
    const double ksq = (kPi / grid.length) * (kPi / grid.length);
    double worst = 0.0;
    for (int i = 0; i < cells; ++i) worst = std::max(worst, std::abs(lap[i] + ksq * f[i]));
    return worst / ksq;
}

} // namespace

TEST_CASE("grid geometry") {
    const Grid grid(20.0, 512);
    CHECK(grid.dx() == 20.0 / 512);
    CHECK(grid.center(0) == grid.dx() / 2);
    CHECK(grid.center(511) == doctest::Approx(20.0 - grid.dx() / 2).epsilon(1e-15));
    CHECK_THROWS_AS(Grid(20.0, 0), InvalidInput);
    CHECK_THROWS_AS(Grid(-1.0, 32), InvalidInput);
}

TEST_CASE("laplacian of a constant vanishes identically") {
    const Grid grid(7.0, 33);
    const Field f(grid.cells, 3.25);
    for (double x : laplacian_neumann(grid, f)) CHECK(x == 0.0);
}

TEST_CASE("laplacian reproduces the first Neumann eigenfunction") {
    const Grid grid(20.0, 128);
    const Field f = sample_cos(grid, 1);
    const Field lap = laplacian_neumann(grid, f);
    const double ksq = (kPi / grid.length) * (kPi / grid.length);
    for (int i = 0; i < grid.cells; ++i) {
        CHECK(std::abs(lap[i] + ksq * f[i]) <= 1e-5); // truncation is O(dx^2 ksq^2)
    }
}

TEST_CASE("eigenfunction error drops second order per grid doubling") {
    const double e128 = eigen_error(128);
    const double e256 = eigen_error(256);
    const double e512 = eigen_error(512);
    CHECK(e128 / e256 >= 3.0);
    CHECK(e128 / e256 <= 5.0);
    CHECK(e256 / e512 >= 3.0);
    CHECK(e256 / e512 <= 5.0);
}

TEST_CASE("discrete integral of any laplacian telescopes to zero") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> val(-5.0, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        const Grid grid(7.3, 257);
        Field f(grid.cells);
        double sup = 0.0;
        for (double& x : f) {
            x = val(gen);
            sup = std::max(sup, std::abs(x));
        }
        CHECK(std::abs(integrate(grid, laplacian_neumann(grid, f))) <=
              1e-13 * grid.cells * sup);
    }
}

TEST_CASE("laplacian commutes with spatial reflection") {
    std::mt19937 gen(13);
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    const Grid grid(5.0, 64);
    Field f(grid.cells);
    for (double& x : f) x = val(gen);

    Field mirrored(f.rbegin(), f.rend());
    Field lap = laplacian_neumann(grid, f);
    Field lap_mirrored = laplacian_neumann(grid, mirrored);
    std::reverse(lap_mirrored.begin(), lap_mirrored.end());
    for (int i = 0; i < grid.cells; ++i) CHECK(lap[i] == lap_mirrored[i]);
}

TEST_CASE("laplacian rejects mismatched fields") {
    const Grid grid(5.0, 64);
    CHECK_THROWS_AS(laplacian_neumann(grid, Field(63, 1.0)), GridMismatch);
    CHECK_THROWS_AS(require_match(grid, Field(65, 1.0), "f"), GridMismatch);
}

TEST_CASE("motility laplacian reduces to the plain laplacian for constant motility") {
    std::mt19937 gen(17);
    std::uniform_real_distribution<double> val(0.0, 4.0);
    const Grid grid(5.0, 48);
    Field u(grid.cells), v(grid.cells);
    for (double& x : u) x = val(gen);
    for (double& x : v) x = val(gen);

    // Power-of-two constant: both evaluation orders are exact scalings.
    const Field via_product = motility_laplacian(grid, MotilitySpec::constant(2.0), u, v);
    Field plain = laplacian_neumann(grid, u);
    for (int i = 0; i < grid.cells; ++i) CHECK(via_product[i] == 2.0 * plain[i]);

    const Field general = motility_laplacian(grid, MotilitySpec::constant(0.7), u, v);
    double scale = 0.0;
    for (double x : plain) scale = std::max(scale, std::abs(x));
    for (int i = 0; i < grid.cells; ++i) {
        CHECK(general[i] == doctest::Approx(0.7 * plain[i]).epsilon(1e-12).scale(scale));
    }
}

TEST_CASE("motility laplacian of a constant product vanishes") {
    const Grid grid(5.0, 48);
    const Field u(grid.cells, 2.5), v(grid.cells, 1.5);
    const MotilitySpec spec = MotilitySpec::exponential(10.0, 0.1, 1.0);
    for (double x : motility_laplacian(grid, spec, u, v)) CHECK(x == 0.0);
}

TEST_CASE("motility laplacian is discretely conservative") {
    std::mt19937 gen(19);
    std::uniform_real_distribution<double> val(0.0, 4.0);
    const Grid grid(11.0, 200);
    const MotilitySpec spec = MotilitySpec::exponential(10.0, 0.1, 1.0);
    Field u(grid.cells), v(grid.cells);
    double sup_p = 0.0;
    for (double& x : v) x = val(gen);
    for (int i = 0; i < grid.cells; ++i) {
        u[i] = val(gen);
        sup_p = std::max(sup_p, eval_motility(spec, v[i]) * u[i]);
    }
    const Field curve = motility_laplacian(grid, spec, u, v);
    CHECK(std::abs(integrate(grid, curve)) <= 1e-13 * grid.cells * sup_p);
}

TEST_CASE("motility laplacian converges to the analytic operator") {
    // u = v = 1 + 0.1 cos(pi x / l), gamma the exponential reference family.
    // With s(x) = 1 + 0.1 cos(pi x / l) and G(s) = (0.1 + 10 e^{-s}) s,
    //   (gamma(v) u)'' = G''(s) s'^2 + G'(s) s''.
    const double l = 20.0;
    const MotilitySpec spec = MotilitySpec::exponential(10.0, 0.1, 1.0);

    auto analytic = [&](double x) {
        const double s = 1.0 + 0.1 * std::cos(kPi * x / l);
        const double sp = -0.1 * (kPi / l) * std::sin(kPi * x / l);
        const double spp = -0.1 * (kPi / l) * (kPi / l) * std::cos(kPi * x / l);
        const double e = 10.0 * std::exp(-s);
        const double gp = 0.1 + e - s * e;  // G'(s)
        const double gpp = e * (s - 2.0);   // G''(s)
        return gpp * sp * sp + gp * spp;
    };

    auto sup_error = [&](int cells) {
        const Grid grid(l, cells);
        Field u(cells);
        for (int i = 0; i < cells; ++i) u[i] = 1.0 + 0.1 * std::cos(kPi * grid.center(i) / l);
        const Field lap = motility_laplacian(grid, spec, u, u);
        double worst = 0.0;
        for (int i = 0; i < cells; ++i) {
            worst = std::max(worst, std::abs(lap[i] - analytic(grid.center(i))));
        }
        return worst;
    };

    const double e256 = sup_error(256);
    const double e512 = sup_error(512);
    CHECK(e256 <= 1e-4);
    CHECK(e256 / e512 >= 3.0);
    CHECK(e256 / e512 <= 5.0);
}

TEST_CASE("integrate handles constants and linear profiles") {
    const Grid grid(20.0, 512);
    CHECK(integrate(grid, Field(grid.cells, 4.0)) == 80.0);
    CHECK(integrate(grid, Field(grid.cells, 0.0)) == 0.0);

    const Grid unit(1.0, 1000);
    Field ramp(unit.cells);
    for (int i = 0; i < unit.cells; ++i) ramp[i] = unit.center(i);
    CHECK(std::abs(integrate(unit, ramp) - 0.5) <= 1e-6); // midpoint rule, linear exact
}

TEST_CASE("norms") {
    CHECK(sup_norm({1.0, -3.0, 2.0}) == 3.0);
    CHECK(sup_norm(Field(5, 0.0)) == 0.0);
    const Grid grid(20.0, 512);
    CHECK(l2_norm(grid, Field(grid.cells, 0.0)) == 0.0);
    CHECK(l2_norm(grid, Field(grid.cells, 2.0)) ==
          doctest::Approx(oracle::kSqrt80).epsilon(1e-14));
}
