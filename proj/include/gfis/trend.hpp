#pragma once

#include "gfis/lattice.hpp"

#include <Eigen/Core>

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gfis {

// Holder class bounds shared by every trend the estimator must cover.
struct FunctionClassBounds {
    double mu_lo = 0.0;
    double mu_hi = 0.0;
    double sigma_lo = 1.0;
    double sigma_hi = 1.0;
    double holder_exponent = 1.0;  // beta
    double holder_const = 1.0;     // kappa_H

    void validate() const;
};

// One (sigma, mu) pair, evaluated pointwise, plus the class it belongs to.
struct TrendModel {
    std::function<double(const Eigen::VectorXd&)> mu;
    std::function<double(const Eigen::VectorXd&)> sigma;
    FunctionClassBounds bounds;

    static TrendModel constant(double sigma_value, double mu_value,
                               FunctionClassBounds bounds);
};

// Trend evaluated on a lattice; the form every estimator consumes.
struct TrendOnLattice {
    Eigen::VectorXd mu;
    Eigen::VectorXd sigma;
};

TrendOnLattice evaluate_on(const TrendModel& trend, const LatticeDomain& lattice);

// Checks membership in the class (mu and sigma within bounds at every lattice
// point, small tolerance for roundoff).
bool satisfies_class(const TrendOnLattice& values, const FunctionClassBounds& bounds,
                     double tol = 1e-12);

class ClassViolationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Declarative trend used by configs and result rows. Forms:
//   mu:    constant(value)   or linear(value):    mu(t) = value * t_1
//   sigma: constant(value)   or parabolic(value): sigma(t) = 1 - 0.5 (t_1 - value)^2
struct TrendSpec {
    enum class MuKind { constant, linear };
    enum class SigmaKind { constant, parabolic };

    MuKind mu_kind = MuKind::constant;
    double mu_value = 0.0;
    SigmaKind sigma_kind = SigmaKind::constant;
    double sigma_value = 1.0;

    TrendModel to_model(const FunctionClassBounds& bounds) const;

    // Named parameters for reporting: mu/beta1 and sigma/beta2.
    std::vector<std::pair<std::string, double>> params() const;
};

}  // namespace gfis
