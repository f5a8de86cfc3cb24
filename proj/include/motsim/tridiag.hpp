#pragma once

#include <span>
#include <vector>

#include "motsim/errors.hpp"

namespace motsim {

/// Thomas elimination for A x = b with
///   A(i, i-1) = sub[i]   (sub[0] ignored)
///   A(i, i)   = diag[i]
///   A(i, i+1) = sup[i]   (sup[n-1] ignored)
/// Solves in place: rhs enters as b and leaves as x. scratch needs n entries.
/// Throws SingularSystem when an elimination pivot magnitude drops below 1e-14.
/// Intended for the diagonally dominant systems produced by I - dt * Lap.
void solve_tridiagonal(std::span<const double> sub, std::span<const double> diag,
                       std::span<const double> sup, std::span<double> rhs,
                       std::span<double> scratch);

/// Convenience wrapper allocating the scratch and returning the solution.
std::vector<double> solve_tridiagonal(const std::vector<double>& sub,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& sup,
                                      std::vector<double> rhs);

} // namespace motsim
