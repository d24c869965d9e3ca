#pragma once

#include <cstddef>
#include <vector>

#include "hankelspec/symbol.hpp"
#include "hankelspec/zeta.hpp"

namespace hankelspec {

// Power-series coefficients of numer(z)/denom(z) to order n_max via the
// division recurrence.  Requires denom(0) = 1 and all denominator roots
// strictly outside the closed unit disc (|root| > 1 + root_margin, checked
// through companion-matrix eigenvalues).
// Throws NormalizationError / DenominatorRootInDisc.
SymbolCoefficients expand_rational(const std::vector<Complex>& numer,
                                   const std::vector<Complex>& denom, std::size_t n_max,
                                   double root_margin = 1e-9);

// Roots of a complex polynomial (ascending coefficients) via the companion
// matrix; trailing coefficients below 1e-14 * max|coeff| are trimmed.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

enum class RankPattern { EvenV2N, OddV2N1, NotFiniteRank };

struct RankReport {
    std::size_t rank_h = 0;
    std::size_t rank_k = 0;
    RankPattern pattern = RankPattern::EvenV2N;
    std::vector<std::size_t> sizes_checked;
};

// Numerical Kronecker ranks: counts of singular values above tol * rho_1 for
// the Hankel section and its shift, accepted once two successive size
// doublings agree (a section covering the whole coefficient support is exact
// and accepted directly).  Monotone growth up to max_size yields
// NotFiniteRank; anything else unstable raises Inconclusive.
RankReport kronecker_ranks(const SymbolCoefficients& c, double tol = 1e-10,
                           std::size_t max_size = 4096);

} // namespace hankelspec
