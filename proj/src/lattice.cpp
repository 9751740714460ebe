#include "gfis/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gfis {

LatticeDomain build_lattice(const std::vector<Interval>& bounds, int points_per_dim) {
    if (bounds.empty()) throw std::invalid_argument("build_lattice: empty bounds");
    if (points_per_dim < 1)
        throw std::invalid_argument("build_lattice: points_per_dim must be >= 1");
    for (size_t k = 0; k < bounds.size(); ++k) {
        if (bounds[k].lo > bounds[k].hi)
            throw std::invalid_argument("build_lattice: bounds[" + std::to_string(k) +
                                        "] has lower > upper");
    }

    LatticeDomain lattice;
    lattice.dim = static_cast<int>(bounds.size());
    lattice.bounds = bounds;
    lattice.spacing_per_dim.resize(bounds.size());

    std::vector<std::vector<double>> grids(bounds.size());
    for (size_t k = 0; k < bounds.size(); ++k) {
        auto& grid = grids[k];
        if (points_per_dim == 1) {
            grid.push_back(bounds[k].lo);
            lattice.spacing_per_dim[k] = 0.0;
        } else {
            const double h = bounds[k].width() / (points_per_dim - 1);
            lattice.spacing_per_dim[k] = h;
            grid.resize(points_per_dim);
            for (int i = 0; i < points_per_dim; ++i) grid[i] = bounds[k].lo + i * h;
            grid.back() = bounds[k].hi;  // exact endpoint
        }
        lattice.spacing = std::max(lattice.spacing, lattice.spacing_per_dim[k]);
    }

    // Row-major cartesian product.
    std::size_t total = 1;
    for (size_t k = 0; k < grids.size(); ++k) total *= grids[k].size();
    lattice.points.reserve(total);
    std::vector<int> index(bounds.size(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        Eigen::VectorXd point(lattice.dim);
        for (int k = 0; k < lattice.dim; ++k) point[k] = grids[k][index[k]];
        lattice.points.push_back(std::move(point));
        for (int k = lattice.dim - 1; k >= 0; --k) {
            if (++index[k] < static_cast<int>(grids[k].size())) break;
            index[k] = 0;
        }
    }

    // Farthest interior point from the lattice is a cell center; for the
    // one-point case it is the opposite box corner.
    double radius2 = 0.0;
    for (size_t k = 0; k < bounds.size(); ++k) {
        const double half = (points_per_dim == 1) ? bounds[k].width()
                                                  : 0.5 * lattice.spacing_per_dim[k];
        radius2 += half * half;
    }
    lattice.covering_radius = std::sqrt(radius2);
    return lattice;
}

}  // namespace gfis
