#pragma once

#include <cstddef>
#include <vector>

#include "hankelspec/a_operator.hpp"
#include "hankelspec/symbol.hpp"
#include "hankelspec/zeta.hpp"

namespace hankelspec {

struct ReconstructOptions {
    // Stop after this many consecutive coefficients below decay_floor * rho_1,
    // truncating the output before the tiny run.  0 disables the early stop.
    std::size_t decay_run = 8;
    double decay_floor = 1e-14;
    bool early_stop = true;
};

// Fourier coefficients of the symbol from spectral data:
//   c_n = X . A^n Y
// computed by the iteration v_0 = Y, v_{n+1} = A v_n, c_n = X . v_n
// (one matrix-vector product per coefficient; A is a contraction, so the
// iterate norms are non-increasing and |c_n| <= |X||Y| <= rho_1).
SymbolCoefficients reconstruct(const ZetaSequence& z, std::size_t n_max,
                               const ReconstructOptions& opts = {});
SymbolCoefficients reconstruct(const AOperator& op, std::size_t n_max,
                               const ReconstructOptions& opts = {});

// Embedding of the selfadjoint eigenvalue problem: two real sequences with
// |lambda_1| > |mu_1| > |lambda_2| > ... map to zeta = (lambda_1, mu_1, ...),
// i.e. phi_j = 0 or pi matching sign(lambda_j) and likewise theta_j.
// len(mu) must be len(lambda) or len(lambda) - 1.
// Throws Error{InterlacingViolation}.
ZetaSequence real_case_embed(const std::vector<double>& lambda, const std::vector<double>& mu,
                             double margin = 1e-10);

} // namespace hankelspec
