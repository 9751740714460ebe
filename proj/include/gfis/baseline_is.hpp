#pragma once

#include "gfis/field.hpp"
#include "gfis/trend.hpp"
#include "gfis/uniform_is.hpp"

#include <Eigen/Core>

#include <optional>

namespace gfis {

// The single-trend change of measure of Adler-Blanchet-Liu: the tilt index is
// drawn proportionally to the per-point exceedance probabilities of the
// design trend. Tail masses are kept in log space; the atom probabilities are
// normalized by log-sum-exp.
struct DesignMeasure {
    TrendOnLattice trend;        // the (sigma, mu) the measure was built for
    double b = 0.0;
    Eigen::VectorXd atom_probs;  // sums to 1
    Eigen::VectorXd atom_cdf;
    double log_normalizer = 0.0;  // log sum_j phi_bar((b - mu_j)/sigma_j)

    static DesignMeasure make(const TrendModel& design, const DiscretizedField& field,
                              double b);
};

// tau ~ atom_probs, f(tau) truncated above the design threshold, rest from
// the conditional law; the returned path always design-exceeds at tau.
Eigen::VectorXd sample_under_q_dagger(const DiscretizedField& field,
                                      const DesignMeasure& design, Rng& rng);

// dP/dQ-dagger at a path: normalizer / (number of design exceedances).
// Empty when the count is zero -- the derivative does not exist there
// (returned as a value so misspecification experiments can count it).
std::optional<double> q_dagger_weight(const Eigen::VectorXd& path,
                                      const DesignMeasure& design);

// Indicator under eval_trend, weight under the design measure. With
// eval == design this is the polynomially efficient single-trend estimator.
Replicate replicate_abl09(const DiscretizedField& field, const TrendModel& eval_trend,
                          const DesignMeasure& design, Rng& rng);

// Plain Monte Carlo: weight 1, value = exceedance indicator under P.
Replicate replicate_naive(const DiscretizedField& field, const TrendModel& trend,
                          double b, Rng& rng);

}  // namespace gfis
