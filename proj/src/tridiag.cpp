#include "motsim/tridiag.hpp"

#include <cmath>

namespace motsim {

void solve_tridiagonal(std::span<const double> sub, std::span<const double> diag,
                       std::span<const double> sup, std::span<double> rhs,
                       std::span<double> scratch) {
    const std::size_t n = diag.size();
    if (n == 0 || sub.size() != n || sup.size() != n || rhs.size() != n || scratch.size() != n) {
        throw InvalidInput("solve_tridiagonal: band, rhs, and scratch must share one length");
    }
    constexpr double kPivotFloor = 1e-14;

    double pivot = diag[0];
    if (!(std::abs(pivot) > kPivotFloor)) {
        throw SingularSystem("tridiagonal pivot vanished at row 0");
    }
    scratch[0] = sup[0] / pivot;
    rhs[0] = rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = diag[i] - sub[i] * scratch[i - 1];
        if (!(std::abs(pivot) > kPivotFloor)) {
            throw SingularSystem("tridiagonal pivot vanished at row " + std::to_string(i));
        }
        scratch[i] = sup[i] / pivot;
        rhs[i] = (rhs[i] - sub[i] * rhs[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] -= scratch[i] * rhs[i + 1];
    }
}

std::vector<double> solve_tridiagonal(const std::vector<double>& sub,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& sup, std::vector<double> rhs) {
    std::vector<double> scratch(diag.size());
    solve_tridiagonal(std::span<const double>(sub), std::span<const double>(diag),
                      std::span<const double>(sup), std::span<double>(rhs),
                      std::span<double>(scratch));
    return rhs;
}

} // namespace motsim
