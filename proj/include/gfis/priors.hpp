#pragma once

#include "gfis/lattice.hpp"
#include "gfis/rng.hpp"
#include "gfis/trend.hpp"

#include <functional>
#include <memory>
#include <mutex>

namespace gfis {

class LSumTable;

// Density on an interval, specified in normalized [0,1] coordinates and
// mapped affinely onto the support, so normalization is preserved for any
// support width. Sampling goes through the quantile function.
class PriorDensity {
  public:
    static PriorDensity uniform();
    // density01 must be strictly positive and integrate to 1 over [0,1];
    // quantile01 is its inverse CDF mapping (0,1) -> [0,1].
    static PriorDensity custom(std::function<double(double)> density01,
                               std::function<double(double)> quantile01);

    bool is_uniform() const { return uniform_; }
    double density(double x, const Interval& support) const;
    double sample(Rng& rng, const Interval& support) const;

    // Positivity on a grid and unit mass within 1e-10 (quadrature check).
    void validate(const char* name) const;

  private:
    bool uniform_ = true;
    std::function<double(double)> density01_;
    std::function<double(double)> quantile01_;
};

// Shared lazily-built cache for the l(z) lookup table; copies of a
// MixturePriors value share one slot.
struct EllCacheSlot {
    std::once_flag once;
    std::shared_ptr<const LSumTable> table;
};

// The mixture change of measure: priors for the tilt scale and shift, their
// slightly enlarged supports, and the threshold. Treat as immutable after
// construction.
struct MixturePriors {
    FunctionClassBounds bounds;
    double b = 0.0;
    double a = 1.0;
    double delta_b = 0.0;  // a / b
    Interval i1;           // [mu_lo, mu_hi + delta_b]
    Interval i2;           // [sigma_lo, sigma_hi + delta_b^2]
    PriorDensity g;        // scale prior on i2
    PriorDensity h;        // shift prior on i1
    std::shared_ptr<EllCacheSlot> ell_cache;

    static MixturePriors make(const FunctionClassBounds& bounds, double b,
                              double a = 1.0);
    static MixturePriors make_with(const FunctionClassBounds& bounds, double b,
                                   double a, PriorDensity g, PriorDensity h);

    bool has_uniform_priors() const { return g.is_uniform() && h.is_uniform(); }

    // Support of the tilt variable s = (b - nu) / varsigma.
    double s_min() const { return (b - i1.hi) / i2.hi; }
    double s_max() const { return (b - i1.lo) / i2.lo; }
};

}  // namespace gfis
