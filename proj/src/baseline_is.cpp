#include "gfis/baseline_is.hpp"

#include "gfis/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gfis {

DesignMeasure DesignMeasure::make(const TrendModel& design,
                                  const DiscretizedField& field, double b) {
    DesignMeasure d;
    d.trend = evaluate_on(design, field.lattice());
    d.b = b;
    const int m = field.size();
    Eigen::VectorXd log_tails(m);
    for (int i = 0; i < m; ++i) {
        if (!(d.trend.sigma[i] > 0.0))
            throw std::invalid_argument("DesignMeasure: sigma must be positive");
        log_tails[i] = phi_bar((b - d.trend.mu[i]) / d.trend.sigma[i]).log_value;
    }
    const double top = log_tails.maxCoeff();
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += std::exp(log_tails[i] - top);
    d.log_normalizer = top + std::log(acc);

    d.atom_probs.resize(m);
    d.atom_cdf.resize(m);
    double cum = 0.0;
    for (int i = 0; i < m; ++i) {
        d.atom_probs[i] = std::exp(log_tails[i] - d.log_normalizer);
        cum += d.atom_probs[i];
        d.atom_cdf[i] = cum;
    }
    d.atom_cdf[m - 1] = 1.0;
    return d;
}

Eigen::VectorXd sample_under_q_dagger(const DiscretizedField& field,
                                      const DesignMeasure& design, Rng& rng) {
    const double u = rng.next_double();
    const double* begin = design.atom_cdf.data();
    const double* end = begin + design.atom_cdf.size();
    const int tau = static_cast<int>(std::lower_bound(begin, end, u) - begin);
    const double c = (design.b - design.trend.mu[tau]) / design.trend.sigma[tau];
    const double x = sample_truncated_std_normal(c, rng);
    return field.conditional_given_point(tau, x, rng);
}

std::optional<double> q_dagger_weight(const Eigen::VectorXd& path,
                                      const DesignMeasure& design) {
    int count = 0;
    for (Eigen::Index i = 0; i < path.size(); ++i)
        if (design.trend.sigma[i] * path[i] + design.trend.mu[i] > design.b) ++count;
    if (count == 0) return std::nullopt;
    return std::exp(design.log_normalizer - std::log(static_cast<double>(count)));
}

Replicate replicate_abl09(const DiscretizedField& field, const TrendModel& eval_trend,
                          const DesignMeasure& design, Rng& rng) {
    const Eigen::VectorXd path = sample_under_q_dagger(field, design, rng);
    const TrendOnLattice tv = evaluate_on(eval_trend, field.lattice());
    Replicate rep;
    for (Eigen::Index i = 0; i < path.size(); ++i) {
        if (tv.sigma[i] * path[i] + tv.mu[i] > design.b) {
            rep.indicator = true;
            break;
        }
    }
    const std::optional<double> weight = q_dagger_weight(path, design);
    if (!weight) {
        // An eval-exceeding path with no design exceedance has no weight.
        rep.non_absolutely_continuous = rep.indicator;
        return rep;
    }
    rep.weight = *weight;
    rep.value = rep.indicator ? rep.weight : 0.0;
    return rep;
}

Replicate replicate_naive(const DiscretizedField& field, const TrendModel& trend,
                          double b, Rng& rng) {
    const Eigen::VectorXd path = field.sample(rng);
    const TrendOnLattice tv = evaluate_on(trend, field.lattice());
    Replicate rep;
    rep.weight = 1.0;
    for (Eigen::Index i = 0; i < path.size(); ++i) {
        if (tv.sigma[i] * path[i] + tv.mu[i] > b) {
            rep.indicator = true;
            break;
        }
    }
    rep.value = rep.indicator ? 1.0 : 0.0;
    return rep;
}

}  // namespace gfis
