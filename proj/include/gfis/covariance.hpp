#pragma once

#include "gfis/lattice.hpp"

#include <Eigen/Core>

namespace gfis {

// Unit-variance correlation models for the zero-mean field f.
struct CovarianceModel {
    enum class Kind { iid, exponential, cosine, explicit_matrix };

    Kind kind = Kind::iid;
    double scale = 1.0;        // exponential: r(s,t) = exp(-|s-t|/scale)
    Eigen::MatrixXd matrix;    // explicit_matrix payload
    double holder_exponent = 1.0;
    double holder_const = 1.0;

    static CovarianceModel iid();
    static CovarianceModel exponential(double scale);
    static CovarianceModel cosine();
    static CovarianceModel explicit_matrix(Eigen::MatrixXd sigma);
};

// Sigma_ij = r(t_i, t_j). Explicit matrices are checked for shape, symmetry
// (to 1e-12) and unit diagonal.
Eigen::MatrixXd covariance_matrix(const CovarianceModel& model,
                                  const LatticeDomain& lattice);

// A with A A^T = sigma to 1e-8, valid for rank-deficient sigma: symmetric
// eigendecomposition with eigenvalues clamped at zero (Cholesky fast path when
// strictly positive definite). Throws if an eigenvalue is below -1e-10.
Eigen::MatrixXd sqrt_factor(const Eigen::MatrixXd& sigma);

}  // namespace gfis
