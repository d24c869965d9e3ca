#pragma once

#include <string>
#include <vector>

#include "hankelspec/weights.hpp"
#include "hankelspec/zeta.hpp"

namespace hankelspec {

// One evaluated identity row.  Indices are 1-based in reports to match the
// usual j/m/p labelling; p is 0 for the single-index identities.
struct IdentityRow {
    std::string identity; // "1", "1kappa", "2", "2kappa", "sum_nu", "sum_kappa"
    std::size_t m = 0;
    std::size_t p = 0;
    double residual = 0.0;
    bool boundary = false; // sigma_N = 0 rows: reported, never gated
};

struct IdentityReport {
    std::vector<IdentityRow> rows;
    double max_residual = 0.0;          // over non-boundary rows
    double max_boundary_residual = 0.0; // over flagged rows
    double c_constant = 0.0;            // resolvent constant (odd data only)
    double sum_nu_sq = 0.0;
    double sum_kappa_sq = 0.0;
};

// Evaluates the partial-fraction identity suite for every m, p <= N:
//
//   (1)   sum_j rho_j^2 nu_j^2 / (rho_j^2 - sigma_m^2)                    = 1
//   (1k)  sum_{sigma_j>0} kappa_j^2 / (rho_m^2 - sigma_j^2) + C/rho_m^2   = 1
//   (2)   sum_j rho_j^2 nu_j^2 / ((rho_j^2-sigma_m^2)(rho_j^2-sigma_p^2)) = delta_mp / kappa_m^2
//   (2k)  sum_j sigma_j^2 kappa_j^2 / ((sigma_j^2-rho_m^2)(sigma_j^2-rho_p^2))
//                                                                         = delta_mp / nu_m^2 - 1
//
// plus the sum rules sum nu^2 = 1 - prod (sigma/rho)^2 and
// sum kappa^2 = sum (rho^2 - sigma^2).  C is 0 for even data and
// (sum nu_j^2/rho_j^2)^{-1} for odd data (where it coincides with the
// sigma_N = 0 weight kappa_N^2).  Rows whose evaluation point touches the
// sigma_N = 0 boundary are flagged and excluded from the tolerance gate.
//
// Throws Error{ToleranceExceeded} carrying the worst non-boundary row when
// max_residual > tol.
IdentityReport identity_report(const ZetaSequence& z, double tol);
IdentityReport identity_report(const ZetaSequence& z, const WeightTable& w, double tol);

} // namespace hankelspec
