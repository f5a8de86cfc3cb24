#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "motsim/tridiag.hpp"

using namespace motsim;

TEST_CASE("identity system returns the right-hand side") {
    const std::vector<double> sub(5, 0.0), diag(5, 1.0), sup(5, 0.0);
    const std::vector<double> rhs{1.0, -2.0, 3.5, 0.0, 7.0};
    CHECK(solve_tridiagonal(sub, diag, sup, rhs) == rhs);
}

TEST_CASE("classic 3x3 second-difference system") {
    const std::vector<double> sub{0.0, -1.0, -1.0};
    const std::vector<double> diag{2.0, 2.0, 2.0};
    const std::vector<double> sup{-1.0, -1.0, 0.0};
    const std::vector<double> x = solve_tridiagonal(sub, diag, sup, {1.0, 0.0, 1.0});
    REQUIRE(x.size() == 3);
    for (double xi : x) CHECK(xi == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("random diagonally dominant systems solve to tiny residuals") {
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> off(-1.0, 1.0), load(-10.0, 10.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 100;
        std::vector<double> sub(n), diag(n), sup(n), rhs(n);
        for (int i = 0; i < n; ++i) {
            sub[i] = off(gen);
            sup[i] = off(gen);
            diag[i] = 2.5 + std::abs(sub[i]) + std::abs(sup[i]); // strict dominance
            rhs[i] = load(gen);
        }
        sub[0] = 0.0;
        sup[n - 1] = 0.0;

        const std::vector<double> x = solve_tridiagonal(sub, diag, sup, rhs);

        double norm_b = 0.0, worst = 0.0;
        for (int i = 0; i < n; ++i) {
            double ax = diag[i] * x[i];
            if (i > 0) ax += sub[i] * x[i - 1];
            if (i + 1 < n) ax += sup[i] * x[i + 1];
            worst = std::max(worst, std::abs(ax - rhs[i]));
            norm_b = std::max(norm_b, std::abs(rhs[i]));
        }
        CHECK(worst <= 1e-12 * norm_b);
    }
}

TEST_CASE("in-place span form matches the allocating wrapper") {
    const std::vector<double> sub{0.0, -0.3, 0.2, -0.1};
    const std::vector<double> diag{1.5, 2.0, 1.8, 2.2};
    const std::vector<double> sup{0.4, -0.2, 0.3, 0.0};
    const std::vector<double> rhs{1.0, 2.0, -1.0, 0.5};

    std::vector<double> in_place = rhs, scratch(rhs.size());
    solve_tridiagonal(sub, diag, sup, in_place, scratch);
    CHECK(in_place == solve_tridiagonal(sub, diag, sup, rhs));
}

TEST_CASE("vanishing pivot throws") {
    const std::vector<double> sub{0.0, 1.0};
    const std::vector<double> diag{1e-16, 1.0};
    const std::vector<double> sup{1.0, 0.0};
    CHECK_THROWS_AS(solve_tridiagonal(sub, diag, sup, {1.0, 1.0}), SingularSystem);
}

TEST_CASE("mismatched lengths are rejected") {
    const std::vector<double> three(3, 1.0), four(4, 1.0);
    CHECK_THROWS_AS(solve_tridiagonal(three, four, three, {1.0, 1.0, 1.0}), InvalidInput);
}
