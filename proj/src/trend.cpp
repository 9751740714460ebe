#include "gfis/trend.hpp"

namespace gfis {

void FunctionClassBounds::validate() const {
    if (!(sigma_lo > 0.0))
        throw std::invalid_argument("FunctionClassBounds: sigma_lo must be positive");
    if (!(sigma_lo <= sigma_hi))
        throw std::invalid_argument("FunctionClassBounds: sigma_lo > sigma_hi");
    if (!(mu_lo <= mu_hi))
        throw std::invalid_argument("FunctionClassBounds: mu_lo > mu_hi");
    if (!(holder_exponent > 0.0))
        throw std::invalid_argument("FunctionClassBounds: holder_exponent must be positive");
    if (!(holder_const > 0.0))
        throw std::invalid_argument("FunctionClassBounds: holder_const must be positive");
}

TrendModel TrendModel::constant(double sigma_value, double mu_value,
                                FunctionClassBounds bounds) {
    TrendModel trend;
    trend.mu = [mu_value](const Eigen::VectorXd&) { return mu_value; };
    trend.sigma = [sigma_value](const Eigen::VectorXd&) { return sigma_value; };
    trend.bounds = bounds;
    return trend;
}

TrendOnLattice evaluate_on(const TrendModel& trend, const LatticeDomain& lattice) {
    const int m = lattice.size();
    TrendOnLattice values;
    values.mu.resize(m);
    values.sigma.resize(m);
    for (int i = 0; i < m; ++i) {
        values.mu[i] = trend.mu(lattice.points[i]);
        values.sigma[i] = trend.sigma(lattice.points[i]);
    }
    return values;
}

bool satisfies_class(const TrendOnLattice& values, const FunctionClassBounds& bounds,
                     double tol) {
    const int m = static_cast<int>(values.mu.size());
    for (int i = 0; i < m; ++i) {
        if (values.mu[i] < bounds.mu_lo - tol || values.mu[i] > bounds.mu_hi + tol)
            return false;
        if (values.sigma[i] < bounds.sigma_lo - tol ||
            values.sigma[i] > bounds.sigma_hi + tol)
            return false;
    }
    return true;
}

TrendModel TrendSpec::to_model(const FunctionClassBounds& bounds) const {
    TrendModel trend;
    trend.bounds = bounds;
    const double mu_value_copy = mu_value;
    switch (mu_kind) {
        case MuKind::constant:
            trend.mu = [mu_value_copy](const Eigen::VectorXd&) { return mu_value_copy; };
            break;
        case MuKind::linear:
            trend.mu = [mu_value_copy](const Eigen::VectorXd& t) {
                return mu_value_copy * t[0];
            };
            break;
    }
    const double sigma_value_copy = sigma_value;
    switch (sigma_kind) {
        case SigmaKind::constant:
            trend.sigma = [sigma_value_copy](const Eigen::VectorXd&) {
                return sigma_value_copy;
            };
            break;
        case SigmaKind::parabolic:
            trend.sigma = [sigma_value_copy](const Eigen::VectorXd& t) {
                const double d = t[0] - sigma_value_copy;
                return 1.0 - 0.5 * d * d;
            };
            break;
    }
    return trend;
}

std::vector<std::pair<std::string, double>> TrendSpec::params() const {
    std::vector<std::pair<std::string, double>> out;
    out.emplace_back(sigma_kind == SigmaKind::constant ? "sigma" : "beta2", sigma_value);
    out.emplace_back(mu_kind == MuKind::constant ? "mu" : "beta1", mu_value);
    return out;
}

}  // namespace gfis
