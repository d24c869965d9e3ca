#pragma once

#include <Eigen/Dense>

#include "hankelspec/weights.hpp"
#include "hankelspec/zeta.hpp"

namespace hankelspec {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// The truncated matrix of the inverse spectral formula together with its
// pairing vectors:
//
//   A_{jk} = sum_m  nu_j nu_k zeta_{2k-1} kappa_m^2 zeta_{2m}
//            / ((rho_j^2 - sigma_m^2)(rho_k^2 - sigma_m^2))
//   X = (nu_j zeta_{2j-1}),  Y = (nu_j),  W = (nu_j zeta_{2j-1} / rho_j^2)
//
// A is a contraction: A A^* = I - Y Y^T exactly at finite rank.
struct AOperator {
    CMatrix a;      // N x N
    CVector x_vec;  // X
    CVector y_vec;  // Y (real entries)
    CVector w_vec;  // W
    WeightTable weights;
};

AOperator build_a(const ZetaSequence& z);
AOperator build_a(const ZetaSequence& z, const WeightTable& w);

// Rank-one factor A^(m) with entries
//   nu_j/(rho_j^2 - sigma_m^2) * nu_k rho_k e^{-i phi_k}/(rho_k^2 - sigma_m^2)
//   * sigma_m kappa_m^2 e^{-i theta_m}.
// The factors sum to A; sum_m A^(m) (A^(m))^* = I - Y Y^T.
// m is 0-based.  Throws IndexOutOfRange / ZeroSigma.
CMatrix rank_one_factor(const ZetaSequence& z, std::size_t m);
CMatrix rank_one_factor(const ZetaSequence& z, const WeightTable& w, std::size_t m);

} // namespace hankelspec
