#pragma once

#include "gfis/field.hpp"
#include "gfis/priors.hpp"
#include "gfis/summary.hpp"
#include "gfis/trend.hpp"

#include <Eigen/Core>

#include <span>
#include <stdexcept>
#include <vector>

namespace gfis {

// A path drawn under the mixture measure Q, with the tilt that produced it.
// By construction varsigma * path[tau] + nu > b.
struct TiltedSample {
    Eigen::VectorXd path;
    double varsigma = 0.0;
    double nu = 0.0;
    int tau = 0;
};

// One importance-sampling replicate: value = weight * indicator.
struct Replicate {
    double weight = 0.0;
    bool indicator = false;
    double value = 0.0;
    bool non_absolutely_continuous = false;
};

// Raised when a path carries no mixture mass (all l(f_i) = 0); unreachable
// for paths drawn under Q, so it indicates a caller bug.
class ZeroMixtureMassError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Closed-form inner integral r(s) for uniform priors:
//   (1/2) |I2|^{-1} |I1|^{-1} (hi^2 - lo^2),
// with [lo,hi] = [(b - i1.hi)/s, (b - i1.lo)/s] clipped to I2, zero when the
// clip is empty or s <= 0. Throws for non-uniform priors.
double r_of_s(double s, const MixturePriors& priors);

enum class EllMode {
    table,       // memoized monotone-cubic table (default; certified at build)
    quadrature,  // direct composite Gauss-Legendre, kept for verification
};

// l(z) = integral over s in (-inf, z] of r(s)/phi_bar(s); zero for
// z <= s_min, constant for z >= s_max. The integrand is evaluated as
// exp(log r - log phi_bar).
double ell(double z, const MixturePriors& priors, EllMode mode = EllMode::table);

// Sum over path coordinates of l(f_i), fixed-order pairwise.
double sum_ell(const Eigen::VectorXd& path, const MixturePriors& priors);

// dP/dQ at a path: M / sum_i l(f_i). Throws ZeroMixtureMassError if the sum
// vanishes (an infinite weight is never returned).
double likelihood_ratio(const Eigen::VectorXd& path, const MixturePriors& priors);

// Algorithm: varsigma ~ g, nu ~ h, tau uniform, f(tau) truncated above
// (b - nu)/varsigma, remaining coordinates from the conditional law.
TiltedSample sample_under_q(const DiscretizedField& field,
                            const MixturePriors& priors, Rng& rng);

// A Q-sample with its trend-independent weight denominator cached.
struct WeightedSample {
    Eigen::VectorXd path;
    double sum_ell = 0.0;
};

WeightedSample make_weighted_sample(const DiscretizedField& field,
                                    const MixturePriors& priors, Rng& rng);

// One replicate of the uniform estimator for the given trend.
Replicate replicate_uniform(const DiscretizedField& field, const TrendModel& trend,
                            const MixturePriors& priors, Rng& rng);

// Re-weights one shared sample set for many trends: only the exceedance
// indicator is recomputed per trend, the cached weight is reused. Values are
// bit-identical to replicate_uniform on the same streams.
std::vector<EstimateSummary> evaluate_many_trends(
    std::span<const WeightedSample> samples, std::span<const TrendModel> trends,
    const LatticeDomain& lattice, const MixturePriors& priors);

}  // namespace gfis
