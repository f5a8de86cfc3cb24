#pragma once

#include <vector>

#include "motsim/errors.hpp"
#include "motsim/model.hpp"

namespace motsim {

/// Components may dip this far below zero before a run aborts.
inline constexpr double kNegativityTolerance = 1e-12;

/// Uniform cell-centered grid on (0, length): cell i owns
/// ((i)*dx, (i+1)*dx) with center (i+0.5)*dx.
struct Grid {
    Grid(double length, int cells);

    double length;
    int cells;

    double dx() const { return length / cells; }
    double center(int i) const { return (i + 0.5) * dx(); }
};

using Field = std::vector<double>;

/// The three fields plus simulated time. All fields live on the same grid.
struct FieldState {
    explicit FieldState(Grid g, double fill_u = 0.0, double fill_v = 0.0, double fill_w = 0.0);

    Grid grid;
    Field u, v, w;
    double t = 0.0;
};

/// Zero-flux (Neumann) Laplacian in flux form: interior faces carry
/// (f_{i+1}-f_i)/dx, boundary faces carry zero, and each cell receives the
/// divided face difference. The face differences telescope, so the discrete
/// integral of the result vanishes to rounding.
Field laplacian_neumann(const Grid& grid, const Field& f);

/// Laplacian of the product gamma(v) u, the motility-flux term.
Field motility_laplacian(const Grid& grid, const MotilitySpec& motility, const Field& u,
                         const Field& v);

/// Midpoint-rule integral sum_i f_i dx (compensated summation).
double integrate(const Grid& grid, const Field& f);

double sup_norm(const Field& f);

double l2_norm(const Grid& grid, const Field& f);

/// Throws GridMismatch unless f has grid.cells entries.
void require_match(const Grid& grid, const Field& f, const char* what);

} // namespace motsim
