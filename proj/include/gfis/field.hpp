#pragma once

#include "gfis/covariance.hpp"
#include "gfis/lattice.hpp"
#include "gfis/rng.hpp"

#include <Eigen/Core>

#include <memory>
#include <mutex>
#include <vector>

namespace gfis {

// A Gaussian field restricted to a lattice: correlation matrix plus a square
// root factor for exact joint sampling. Immutable after construction and safe
// to share across threads; the per-coordinate conditional factors are built
// lazily under std::call_once.
class DiscretizedField {
  public:
    DiscretizedField(LatticeDomain lattice, const CovarianceModel& model);

    const LatticeDomain& lattice() const { return lattice_; }
    const Eigen::MatrixXd& sigma() const { return sigma_; }
    const Eigen::MatrixXd& sqrt() const { return sqrt_; }
    int size() const { return lattice_.size(); }

    // One joint draw of f on the lattice: A z with z iid standard normal.
    Eigen::VectorXd sample(Rng& rng) const;

    // Full path with f(t_tau) = x and the rest drawn from the exact
    // conditional law: mean sigma_col(tau) * x, covariance
    // sigma - sigma_col(tau) sigma_row(tau), square root by clamped
    // eigendecomposition (cached per tau).
    Eigen::VectorXd conditional_given_point(int tau, double x, Rng& rng) const;

  private:
    const Eigen::MatrixXd& conditional_factor(int tau) const;

    LatticeDomain lattice_;
    Eigen::MatrixXd sigma_;
    Eigen::MatrixXd sqrt_;
    mutable std::vector<std::unique_ptr<std::once_flag>> cond_once_;
    mutable std::vector<Eigen::MatrixXd> cond_factors_;
};

inline Eigen::VectorXd sample_field(const DiscretizedField& field, Rng& rng) {
    return field.sample(rng);
}

inline Eigen::VectorXd conditional_given_point(const DiscretizedField& field,
                                               int tau, double x, Rng& rng) {
    return field.conditional_given_point(tau, x, rng);
}

}  // namespace gfis
