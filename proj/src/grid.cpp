#include "motsim/grid.hpp"

#include <cmath>
#include <string>

namespace motsim {

Grid::Grid(double length_, int cells_) : length(length_), cells(cells_) {
    if (!std::isfinite(length) || length <= 0.0) {
        throw InvalidInput("grid length must be positive and finite");
    }
    if (cells < 4) throw InvalidInput("grid needs at least 4 cells");
}

FieldState::FieldState(Grid g, double fill_u, double fill_v, double fill_w)
    : grid(g),
      u(static_cast<std::size_t>(g.cells), fill_u),
      v(static_cast<std::size_t>(g.cells), fill_v),
      w(static_cast<std::size_t>(g.cells), fill_w) {}

void require_match(const Grid& grid, const Field& f, const char* what) {
    if (f.size() != static_cast<std::size_t>(grid.cells)) {
        throw GridMismatch(std::string(what) + ": field length " + std::to_string(f.size()) +
                           " does not match grid with " + std::to_string(grid.cells) + " cells");
    }
}

namespace {

/// Divided differences of face fluxes; faces[0] and faces[n] are the zero-flux
/// boundary faces. Shared by the plain and the product-form Laplacian.
Field flux_form_laplacian(const Grid& grid, const Field& p) {
    const int n = grid.cells;
    const double inv_dx = 1.0 / grid.dx();
    Field out(static_cast<std::size_t>(n));
    double flux_left = 0.0; // zero-flux boundary
    for (int i = 0; i < n; ++i) {
        const double flux_right = (i + 1 < n) ? (p[i + 1] - p[i]) * inv_dx : 0.0;
        out[i] = (flux_right - flux_left) * inv_dx;
        flux_left = flux_right;
    }
    for (double x : out) {
        if (!std::isfinite(x)) throw NonFinite("laplacian produced a non-finite value");
    }
    return out;
}

} // namespace

Field laplacian_neumann(const Grid& grid, const Field& f) {
    require_match(grid, f, "laplacian_neumann");
    return flux_form_laplacian(grid, f);
}

Field motility_laplacian(const Grid& grid, const MotilitySpec& motility, const Field& u,
                         const Field& v) {
    require_match(grid, u, "motility_laplacian(u)");
    require_match(grid, v, "motility_laplacian(v)");
    Field p(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        p[i] = eval_motility(motility, v[i]) * u[i];
    }
    return flux_form_laplacian(grid, p);
}

double integrate(const Grid& grid, const Field& f) {
    require_match(grid, f, "integrate");
    // Kahan summation: long accumulations feed conservation ledgers, so keep
    // the rounding error flat in n.
    double sum = 0.0, comp = 0.0;
    for (double x : f) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum * grid.dx();
}

double sup_norm(const Field& f) {
    double m = 0.0;
    for (double x : f) m = std::max(m, std::abs(x));
    return m;
}

double l2_norm(const Grid& grid, const Field& f) {
    require_match(grid, f, "l2_norm");
    double sum = 0.0, comp = 0.0;
    for (double x : f) {
        const double y = x * x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return std::sqrt(sum * grid.dx());
}

} // namespace motsim
