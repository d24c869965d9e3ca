#include "hankelspec/kernel.hpp"

#include <cmath>

#include "hankelspec/a_operator.hpp"
#include "hankelspec/hankel.hpp"

namespace hankelspec {

const char* to_string(KernelCase c) {
    switch (c) {
        case KernelCase::TrivialKernel: return "TrivialKernel";
        case KernelCase::CaseOneNotInClosure: return "CaseOneNotInClosure";
        case KernelCase::CaseTwoInRange: return "CaseTwoInRange";
    }
    return "?";
}

std::vector<Complex> KernelReport::phi_coeffs() const {
    if (!generator_is_shifted) return generator_coeffs;
    std::vector<Complex> phi(generator_coeffs.size() + 1, Complex{0.0, 0.0});
    for (std::size_t n = 0; n < generator_coeffs.size(); ++n) phi[n + 1] = generator_coeffs[n];
    return phi;
}

namespace {

void fill_criteria(KernelReport& rep, const ZetaSequence& z, const WeightTable& w) {
    const std::size_t n = z.pair_count();
    rep.sum_nu_sq = w.sum_nu_sq();
    rep.sum_nu_sq_over_rho_sq = w.sum_nu_sq_over_rho_sq(z);

    double log_prod = 0.0;
    double partial = 0.0;
    rep.p_seq.clear();
    rep.ratio_gap_partial_sums.clear();
    for (std::size_t k = 0; k < n; ++k) {
        // p_{k} with the product over the first k pairs and rho_{k+1} below it
        rep.p_seq.push_back(std::exp(log_prod - std::log(z.rho_sq(k))));
        const double ratio_sq = z.sigma_sq(k) / z.rho_sq(k);
        partial += 1.0 - ratio_sq;
        rep.ratio_gap_partial_sums.push_back(partial);
        if (ratio_sq > 0.0) log_prod += std::log(ratio_sq);
    }

    if (z.is_odd()) {
        rep.case_tag = KernelCase::CaseTwoInRange;
        rep.normalization = 1.0 / std::sqrt(rep.sum_nu_sq_over_rho_sq);
        rep.kernel_relation = "ker K_u = ker H_u + span(H_u^{-1}(1))";
    } else {
        rep.case_tag = KernelCase::CaseOneNotInClosure;
        rep.normalization = 1.0 / std::sqrt(1.0 - rep.sum_nu_sq);
        rep.kernel_relation = "ker K_u = ker H_u";
    }
}

} // namespace

KernelReport classify_kernel(const ZetaSequence& z) {
    KernelReport rep;
    // The zero symbol rides the same formulas: empty sums give case one with
    // normalization 1 and generator phi = 1, matching ker H_0 = L^2_+.
    fill_criteria(rep, z, compute_weights(z));
    return rep;
}

KernelCase classify_asymptotic(bool ratio_gap_sum_diverges, bool p_sup_diverges) {
    if (!ratio_gap_sum_diverges) return KernelCase::CaseOneNotInClosure; // 1 not in closure
    if (!p_sup_diverges) return KernelCase::CaseTwoInRange;              // 1 in range
    return KernelCase::TrivialKernel;
}

KernelReport inner_generator(const ZetaSequence& z, std::size_t n_max) {
    const AOperator op = build_a(z);
    KernelReport rep;
    fill_criteria(rep, z, op.weights);
    rep.has_generator = true;

    CVector v = op.y_vec;
    rep.generator_coeffs.resize(n_max + 1);
    if (rep.case_tag == KernelCase::CaseOneNotInClosure) {
        for (std::size_t k = 0; k <= n_max; ++k) {
            const Complex alpha_k = op.y_vec.cwiseProduct(v).sum(); // Y . A^k Y
            rep.generator_coeffs[k] =
                (k == 0) ? rep.normalization * (1.0 - alpha_k) : -rep.normalization * alpha_k;
            if (k < n_max) v = op.a * v;
        }
        rep.generator_is_shifted = false;
    } else {
        for (std::size_t k = 0; k <= n_max; ++k) {
            const Complex beta_k = op.w_vec.cwiseProduct(v).sum(); // W . A^k Y
            rep.generator_coeffs[k] = rep.normalization * beta_k;
            if (k < n_max) v = op.a * v;
        }
        rep.generator_is_shifted = true; // phi = z psi
    }
    return rep;
}

GeneratorVerification verify_generator(const SymbolCoefficients& c, const KernelReport& report,
                                       std::size_t samples, std::size_t size, double tail_tol) {
    if (!report.has_generator)
        throw Error(ErrorCode::TrivialKernelCase, "report carries no generator to verify");

    const std::vector<Complex> phi = report.phi_coeffs();
    GeneratorVerification out;

    // Tail estimate from the observed decay of the last coefficients.
    {
        const std::size_t n = phi.size();
        double ratio = 0.0;
        std::size_t used = 0;
        for (std::size_t k = n >= 8 ? n - 8 : 1; k < n; ++k) {
            const double prev = std::abs(phi[k - 1]);
            if (prev > 0.0) {
                ratio = std::max(ratio, std::abs(phi[k]) / prev);
                ++used;
            }
        }
        const double last = std::abs(phi[n - 1]);
        if (last == 0.0) {
            out.tail_estimate = 0.0; // finitely supported generator
        } else if (used == 0 || ratio >= 1.0) {
            throw Error(ErrorCode::TruncationTooShort,
                        "generator coefficients show no decay; tail estimate unavailable");
        } else {
            out.tail_estimate = last * ratio / (1.0 - ratio);
        }
        if (out.tail_estimate > tail_tol)
            throw Error(ErrorCode::TruncationTooShort,
                        "series tail estimate " + std::to_string(out.tail_estimate) +
                            " exceeds verification tolerance");
    }

    // Boundary modulus on uniform circle samples.
    for (std::size_t s = 0; s < samples; ++s) {
        const double t = 2.0 * M_PI * static_cast<double>(s) / static_cast<double>(samples);
        Complex val = 0.0;
        const Complex w = std::polar(1.0, t);
        Complex pw = 1.0;
        for (std::size_t n = 0; n < phi.size(); ++n) {
            val += phi[n] * pw;
            pw *= w;
        }
        out.max_modulus_deviation =
            std::max(out.max_modulus_deviation, std::abs(std::abs(val) - 1.0));
    }

    // Annihilation residuals under finite Hankel sections.
    const HankelPair h = build_hankel_pair(c, size);
    auto residual = [&](const Eigen::MatrixXcd& gamma, const std::vector<Complex>& coeffs) {
        CVector vec = CVector::Zero(size);
        for (std::size_t n = 0; n < std::min<std::size_t>(coeffs.size(), size); ++n)
            vec(n) = coeffs[n];
        const double norm = vec.norm();
        if (norm == 0.0) return 0.0;
        return (gamma * vec.conjugate()).norm() / norm;
    };
    out.phi_annihilation = residual(h.gamma, phi);
    out.phi_shifted_annihilation = residual(h.gamma_shift, phi);
    if (report.generator_is_shifted)
        out.psi_shifted_annihilation = residual(h.gamma_shift, report.generator_coeffs);

    return out;
}

} // namespace hankelspec
