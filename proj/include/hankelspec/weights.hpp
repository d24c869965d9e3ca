#pragma once

#include <cstddef>
#include <vector>

#include "hankelspec/zeta.hpp"

namespace hankelspec {

// Interpolation weights of the inverse spectral formula:
//
//   nu_j^2    = (1 - sigma_j^2/rho_j^2) * prod_{k != j} (rho_j^2 - sigma_k^2)/(rho_j^2 - rho_k^2)
//   kappa_m^2 = (rho_m^2 - sigma_m^2)   * prod_{l != m} (sigma_m^2 - rho_l^2)/(sigma_m^2 - sigma_l^2)
//
// Under strict interlacing every ratio is positive, so the products are
// accumulated as sums of log-magnitudes and exponentiated once per weight.
// kappa is well defined by the same formula at sigma_m = 0 (the odd rank
// pattern); such entries are kept and flagged, since the sum rule
// sum kappa^2 = sum (rho^2 - sigma^2) needs them.
struct WeightTable {
    std::vector<double> nu_sq;       // size N
    std::vector<double> kappa_sq;    // size N
    std::vector<double> log_nu_sq;   // log-space internals
    std::vector<double> log_kappa_sq;
    std::vector<bool> sigma_is_zero; // true at the odd-pattern tail entry

    double sum_nu_sq() const;
    double sum_kappa_sq() const;
    // sum_j nu_j^2 / rho_j^2; the reciprocal is the constant C of the
    // resolvent expansion when the data is odd.
    double sum_nu_sq_over_rho_sq(const ZetaSequence& z) const;
};

// Throws Error{Overflow} when a log-sum leaves the representable range
// (pathologically clustered moduli).
WeightTable compute_weights(const ZetaSequence& z);

} // namespace hankelspec
