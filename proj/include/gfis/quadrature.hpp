#pragma once

#include <functional>
#include <span>
#include <vector>

namespace gfis {

// Gauss-Legendre rule on [-1,1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes/weights computed by Newton iteration on the Legendre recurrence and
// cached per order; thread-safe.
const GaussLegendreRule& gauss_legendre(int order);

// Single-interval Gauss-Legendre integral of f over [a,b].
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order);

// Composite rule: `panels` equal panels per segment between consecutive
// breakpoints. Breakpoints must be sorted.
double integrate_composite(const std::function<double(double)>& f,
                           std::span<const double> breakpoints, int panels,
                           int order);

// Monotone cubic interpolation (Fritsch-Carlson). Fitting monotone data gives
// a monotone interpolant; evaluation clamps to the node range.
class PchipInterpolant {
  public:
    PchipInterpolant() = default;
    static PchipInterpolant fit(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double front_x() const { return x_.front(); }
    double back_x() const { return x_.back(); }
    double back_y() const { return y_.back(); }

  private:
    std::vector<double> x_, y_, slope_;
};

}  // namespace gfis
