#include "hankelspec/linalg.hpp"

#include <algorithm>
#include <limits>

namespace hankelspec {

HermitianEigen hermitian_eigen_desc(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    const Eigen::Index n = m.rows();
    HermitianEigen out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        out.values(j) = solver.eigenvalues()(n - 1 - j);
        out.vectors.col(j) = solver.eigenvectors().col(n - 1 - j);
    }
    return out;
}

Eigen::VectorXd hermitian_eigenvalues_desc(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().reverse();
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues();
}

double operator_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    return singular_values(m)(0);
}

double psd_noise_floor(double lambda_max, Eigen::Index n) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    return 32.0 * eps * static_cast<double>(n) * lambda_max;
}

} // namespace hankelspec
