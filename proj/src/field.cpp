#include "gfis/field.hpp"

#include "gfis/gaussian.hpp"

#include <stdexcept>

namespace gfis {

DiscretizedField::DiscretizedField(LatticeDomain lattice, const CovarianceModel& model)
    : lattice_(std::move(lattice)) {
    sigma_ = covariance_matrix(model, lattice_);
    sqrt_ = sqrt_factor(sigma_);
    cond_once_.resize(lattice_.size());
    for (auto& flag : cond_once_) flag = std::make_unique<std::once_flag>();
    cond_factors_.resize(lattice_.size());
}

Eigen::VectorXd DiscretizedField::sample(Rng& rng) const {
    Eigen::VectorXd z(size());
    for (int i = 0; i < size(); ++i) z[i] = sample_std_normal(rng);
    return sqrt_ * z;
}

const Eigen::MatrixXd& DiscretizedField::conditional_factor(int tau) const {
    std::call_once(*cond_once_[tau], [&] {
        // sigma_tt = 1, so conditioning is a rank-one downdate by the tau column.
        const Eigen::VectorXd col = sigma_.col(tau);
        Eigen::MatrixXd cond = sigma_ - col * col.transpose();
        cond_factors_[tau] = sqrt_factor(cond);
    });
    return cond_factors_[tau];
}

Eigen::VectorXd DiscretizedField::conditional_given_point(int tau, double x,
                                                          Rng& rng) const {
    if (tau < 0 || tau >= size())
        throw std::invalid_argument("conditional_given_point: tau out of range");
    const Eigen::MatrixXd& factor = conditional_factor(tau);
    Eigen::VectorXd z(size());
    for (int i = 0; i < size(); ++i) z[i] = sample_std_normal(rng);
    Eigen::VectorXd path = sigma_.col(tau) * x + factor * z;
    path[tau] = x;  // factor row tau is zero; pin exactly
    return path;
}

}  // namespace gfis
