#include "hankelspec/a_operator.hpp"

#include <cmath>
#include <string>

namespace hankelspec {

AOperator build_a(const ZetaSequence& z) { return build_a(z, compute_weights(z)); }

AOperator build_a(const ZetaSequence& z, const WeightTable& w) {
    const std::size_t n = z.pair_count();
    AOperator op;
    op.weights = w;
    op.a = CMatrix::Zero(n, n);
    op.x_vec = CVector::Zero(n);
    op.y_vec = CVector::Zero(n);
    op.w_vec = CVector::Zero(n);

    std::vector<double> nu(n);
    for (std::size_t j = 0; j < n; ++j) nu[j] = std::sqrt(w.nu_sq[j]);

    for (std::size_t j = 0; j < n; ++j) {
        op.x_vec(j) = nu[j] * z.zeta_rho(j);
        op.y_vec(j) = nu[j];
        op.w_vec(j) = nu[j] * z.zeta_rho(j) / z.rho_sq(j);
    }

    for (std::size_t m = 0; m < n; ++m) {
        if (z.sigma(m) == 0.0) continue; // zeta_{2m} = 0 kills the term
        const Complex weight = w.kappa_sq[m] * z.zeta_sigma(m);
        for (std::size_t j = 0; j < n; ++j) {
            const double dj = z.rho_sq(j) - z.sigma_sq(m);
            for (std::size_t k = 0; k < n; ++k) {
                const double dk = z.rho_sq(k) - z.sigma_sq(m);
                op.a(j, k) += nu[j] * nu[k] * z.zeta_rho(k) * weight / (dj * dk);
            }
        }
    }
    return op;
}

CMatrix rank_one_factor(const ZetaSequence& z, std::size_t m) {
    return rank_one_factor(z, compute_weights(z), m);
}

CMatrix rank_one_factor(const ZetaSequence& z, const WeightTable& w, std::size_t m) {
    const std::size_t n = z.pair_count();
    if (m >= n)
        throw Error(ErrorCode::IndexOutOfRange,
                    "factor index " + std::to_string(m + 1) + " exceeds pair count " +
                        std::to_string(n));
    if (z.sigma(m) == 0.0)
        throw Error(ErrorCode::ZeroSigma, "sigma_" + std::to_string(m + 1) + " = 0 has no rank-one factor");

    CVector left(n), right(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double nu_j = std::sqrt(w.nu_sq[j]);
        const double d = z.rho_sq(j) - z.sigma_sq(m);
        left(j) = nu_j / d;
        right(j) = nu_j * z.zeta_rho(j) / d; // nu_k rho_k e^{-i phi_k}
    }
    const Complex scale = w.kappa_sq[m] * z.zeta_sigma(m); // sigma_m kappa_m^2 e^{-i theta_m}
    return scale * (left * right.transpose());
}

} // namespace hankelspec
