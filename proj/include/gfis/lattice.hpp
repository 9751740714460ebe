#pragma once

#include <Eigen/Core>

#include <vector>

namespace gfis {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

// Regular lattice covering a d-dimensional box, both endpoints included per
// dimension. Point order is a row-major cartesian product of the per-dim grids.
struct LatticeDomain {
    int dim = 0;
    std::vector<Interval> bounds;
    std::vector<Eigen::VectorXd> points;
    std::vector<double> spacing_per_dim;
    double spacing = 0.0;          // max over dimensions
    double covering_radius = 0.0;  // max distance from the box to the lattice

    int size() const { return static_cast<int>(points.size()); }
};

// points_per_dim evenly spaced points per dimension, M = points_per_dim^dim.
// A one-point lattice sits at the lower corner.
LatticeDomain build_lattice(const std::vector<Interval>& bounds, int points_per_dim);

}  // namespace gfis
