#include "hankelspec/inverse.hpp"

#include <cmath>

namespace hankelspec {

SymbolCoefficients reconstruct(const ZetaSequence& z, std::size_t n_max,
                               const ReconstructOptions& opts) {
    if (z.empty()) return SymbolCoefficients{{Complex{0.0, 0.0}}};
    return reconstruct(build_a(z), n_max, opts);
}

SymbolCoefficients reconstruct(const AOperator& op, std::size_t n_max,
                               const ReconstructOptions& opts) {
    const Eigen::Index n = op.a.rows();
    if (n == 0) return SymbolCoefficients{{Complex{0.0, 0.0}}};

    double rho_1 = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
        rho_1 = std::max(rho_1, std::abs(op.x_vec(j)) / std::sqrt(op.weights.nu_sq[j]));

    std::vector<Complex> coeffs;
    coeffs.reserve(n_max + 1);
    CVector v = op.y_vec;
    std::size_t tiny_run = 0;
    for (std::size_t k = 0; k <= n_max; ++k) {
        const Complex c_k = op.x_vec.cwiseProduct(v).sum(); // bilinear pairing X.v
        coeffs.push_back(c_k);
        if (opts.early_stop && opts.decay_run > 0) {
            if (std::abs(c_k) < opts.decay_floor * rho_1) {
                if (++tiny_run >= opts.decay_run) {
                    coeffs.resize(coeffs.size() - tiny_run);
                    break;
                }
            } else {
                tiny_run = 0;
            }
        }
        if (k < n_max) v = op.a * v;
    }
    return SymbolCoefficients{std::move(coeffs)};
}

ZetaSequence real_case_embed(const std::vector<double>& lambda, const std::vector<double>& mu,
                             double margin) {
    if (!(mu.size() == lambda.size() || mu.size() + 1 == lambda.size()))
        throw Error(ErrorCode::InterlacingViolation,
                    "mu must have the same length as lambda or one fewer entry");
    std::vector<Complex> zeta;
    zeta.reserve(lambda.size() + mu.size());
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        zeta.emplace_back(lambda[j], 0.0);
        if (j < mu.size()) zeta.emplace_back(mu[j], 0.0);
    }
    return validate_zeta(zeta, margin); // enforces |lambda_1| > |mu_1| > ...
}

} // namespace hankelspec
