#pragma once

#include <Eigen/Dense>
#include <vector>

namespace hankelspec {

// Eigensystem of a Hermitian PSD matrix, eigenvalues sorted descending.
struct HermitianEigen {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors; // column j pairs with values(j)
};

HermitianEigen hermitian_eigen_desc(const Eigen::MatrixXcd& m);

// Descending eigenvalues only (cheaper; used by stabilization loops).
Eigen::VectorXd hermitian_eigenvalues_desc(const Eigen::MatrixXcd& m);

// Singular values of an arbitrary complex matrix, descending.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m);

// Spectral norm ||m||_2.
double operator_norm(const Eigen::MatrixXcd& m);

// Resolution floor for eigenvalues of an n x n PSD product M = G G*: zero
// eigenvalues come out of a dense solver at O(eps * n * lambda_max), so
// anything below this is indistinguishable from zero through the squared
// route.  Retention thresholds are clamped to it.
double psd_noise_floor(double lambda_max, Eigen::Index n);

} // namespace hankelspec
