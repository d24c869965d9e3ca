#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hankelspec/symbol.hpp"
#include "hankelspec/zeta.hpp"

namespace hankelspec {

enum class KernelCase {
    TrivialKernel,        // asymptotic advisory only; never from finite data
    CaseOneNotInClosure,  // sum nu^2 < 1: phi = (1-sum nu^2)^{-1/2} (1 - sum alpha_n z^n)
    CaseTwoInRange,       // sum nu^2 = 1, sum nu^2/rho^2 finite: phi = z psi
};

const char* to_string(KernelCase c);

// Kernel classification and, when requested, the inner generator of
// ker H_u = phi L^2_+.  generator_coeffs holds phi directly in case one and
// psi in case two (generator_is_shifted records phi = z psi).
struct KernelReport {
    KernelCase case_tag = KernelCase::CaseOneNotInClosure;
    double normalization = 0.0; // (1-sum nu^2)^{-1/2} or (sum nu^2/rho^2)^{-1/2}

    double sum_nu_sq = 0.0;
    double sum_nu_sq_over_rho_sq = 0.0;
    // p_N = rho_{N+1}^{-2} prod_{j<=N} sigma_j^2/rho_j^2 for N = 0..pairs-1
    // and partial sums of (1 - sigma_j^2/rho_j^2): the trend data behind the
    // triviality conditions, which involve genuine limits.
    std::vector<double> p_seq;
    std::vector<double> ratio_gap_partial_sums;

    std::string kernel_relation; // ker K_u vs ker H_u for this rank pattern

    bool has_generator = false;
    bool generator_is_shifted = false; // case two: stored coefficients are psi
    std::vector<Complex> generator_coeffs;

    // Coefficients of phi itself (applies the z-shift in case two).
    std::vector<Complex> phi_coeffs() const;
};

// Classification from finite spectral data: even rank pattern is always case
// one, odd always case two.  No generator is computed.
KernelReport classify_kernel(const ZetaSequence& z);

// Eq.-(8) logic on user-asserted limiting behavior: the kernel is trivial iff
// sum (1 - sigma_j^2/rho_j^2) diverges AND sup_N p_N is infinite.
KernelCase classify_asymptotic(bool ratio_gap_sum_diverges, bool p_sup_diverges);

// Generator coefficients to degree n_max:
//   case one: phi_hat(0) = N0 (1 - alpha_0), phi_hat(n) = -N0 alpha_n,
//             alpha_n = Y . A^n Y, N0 = (1 - sum nu^2)^{-1/2}
//   case two: psi_hat(n) = N1 beta_n, beta_n = W . A^n Y,
//             N1 = (sum nu^2/rho^2)^{-1/2}, phi = z psi
// Throws Error{TrivialKernelCase} when asserted_case forces the trivial case.
KernelReport inner_generator(const ZetaSequence& z, std::size_t n_max);

struct GeneratorVerification {
    double max_modulus_deviation = 0.0; // max_t ||phi(e^{it})| - 1|
    double tail_estimate = 0.0;         // geometric bound on the neglected series tail
    double phi_annihilation = 0.0;      // ||Gamma conj(phi_hat)|| / ||phi_hat||
    double phi_shifted_annihilation = 0.0;
    double psi_shifted_annihilation = 0.0; // case two only: ker K_u membership
};

// Numerical inner-ness and kernel-membership check of a generator against the
// symbol: boundary modulus on `samples` circle points via the truncated
// series, plus annihilation residuals under size x size Hankel sections.
// Throws Error{TruncationTooShort} when the series tail estimate exceeds
// tail_tol (or the observed decay gives no usable estimate).
GeneratorVerification verify_generator(const SymbolCoefficients& c, const KernelReport& report,
                                       std::size_t samples, std::size_t size,
                                       double tail_tol = 1e-6);

} // namespace hankelspec
