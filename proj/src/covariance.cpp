#include "gfis/covariance.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace gfis {

CovarianceModel CovarianceModel::iid() { return {}; }

CovarianceModel CovarianceModel::exponential(double scale) {
    if (!(scale > 0.0))
        throw std::invalid_argument("CovarianceModel::exponential: scale must be positive");
    CovarianceModel m;
    m.kind = Kind::exponential;
    m.scale = scale;
    // r(s,t)=exp(-|s-t|/c) is Lipschitz in each argument with constant 1/c,
    // i.e. Holder with exponent 1.
    m.holder_const = 1.0 / scale;
    return m;
}

CovarianceModel CovarianceModel::cosine() {
    CovarianceModel m;
    m.kind = Kind::cosine;
    return m;
}

CovarianceModel CovarianceModel::explicit_matrix(Eigen::MatrixXd sigma) {
    CovarianceModel m;
    m.kind = Kind::explicit_matrix;
    m.matrix = std::move(sigma);
    return m;
}

Eigen::MatrixXd covariance_matrix(const CovarianceModel& model,
                                  const LatticeDomain& lattice) {
    const int m = lattice.size();
    Eigen::MatrixXd sigma(m, m);
    switch (model.kind) {
        case CovarianceModel::Kind::iid:
            sigma.setIdentity();
            break;
        case CovarianceModel::Kind::exponential:
            for (int i = 0; i < m; ++i)
                for (int j = 0; j <= i; ++j) {
                    const double dist = (lattice.points[i] - lattice.points[j]).norm();
                    sigma(i, j) = sigma(j, i) = std::exp(-dist / model.scale);
                }
            break;
        case CovarianceModel::Kind::cosine:
            if (lattice.dim != 1)
                throw std::invalid_argument("covariance_matrix: cosine model is 1-d");
            for (int i = 0; i < m; ++i)
                for (int j = 0; j <= i; ++j) {
                    sigma(i, j) = sigma(j, i) =
                        std::cos(lattice.points[i][0] - lattice.points[j][0]);
                }
            break;
        case CovarianceModel::Kind::explicit_matrix: {
            const Eigen::MatrixXd& given = model.matrix;
            if (given.rows() != m || given.cols() != m)
                throw std::invalid_argument("covariance_matrix: explicit matrix shape mismatch");
            if ((given - given.transpose()).cwiseAbs().maxCoeff() > 1e-12)
                throw std::invalid_argument("covariance_matrix: explicit matrix not symmetric");
            if ((given.diagonal().array() - 1.0).abs().maxCoeff() > 1e-12)
                throw std::invalid_argument("covariance_matrix: explicit matrix diagonal != 1");
            sigma = given;
            break;
        }
    }
    return sigma;
}

Eigen::MatrixXd sqrt_factor(const Eigen::MatrixXd& sigma) {
    if (sigma.rows() != sigma.cols())
        throw std::invalid_argument("sqrt_factor: matrix must be square");

    // Strictly PD matrices take the Cholesky route.
    {
        Eigen::LLT<Eigen::MatrixXd> llt(sigma);
        if (llt.info() == Eigen::Success) {
            Eigen::MatrixXd factor = llt.matrixL();
            if ((factor * factor.transpose() - sigma).cwiseAbs().maxCoeff() <= 1e-8)
                return factor;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("sqrt_factor: eigendecomposition failed");
    Eigen::VectorXd eigenvalues = es.eigenvalues();
    if (eigenvalues.minCoeff() < -1e-10)
        throw std::invalid_argument("sqrt_factor: matrix is not positive semidefinite");
    Eigen::VectorXd clamped = eigenvalues.cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * clamped.asDiagonal();
}

}  // namespace gfis
