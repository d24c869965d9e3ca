// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria are pinned to fixed tolerances and fixed random seeds.

#include <chrono>
#include <cstdio>
#include <random>

#include <Eigen/Dense>

#include "hankelspec/genfun.hpp"
#include "hankelspec/hankel.hpp"
#include "hankelspec/identities.hpp"
#include "hankelspec/inverse.hpp"
#include "hankelspec/kernel.hpp"
#include "hankelspec/linalg.hpp"
#include "hankelspec/rational.hpp"
#include "support/test_support.hpp"

using namespace hankelspec;
using testsupport::geometric_symbol;
using testsupport::random_zeta;

namespace {

int failures = 0;

void report(int criterion, bool pass, const char* what, double metric) {
    std::printf("%s criterion %d: %s (worst %.3e)\n", pass ? "PASS" : "FAIL", criterion, what,
                metric);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ReconstructOptions full_output() {
    ReconstructOptions o;
    o.early_stop = false;
    return o;
}

// 1. Closed-form N=1 roundtrip: zeta=(2, 0.5) -> c_n = 1.875 * 0.25^n within
//    1e-12 relative; forward map returns zeta within 1e-10.
void criterion_1() {
    const ZetaSequence z = validate_zeta({{2, 0}, {0.5, 0}});
    const SymbolCoefficients c = reconstruct(z, 80, full_output());
    double worst = 0.0;
    double expect = 1.875;
    for (std::size_t n = 0; n <= 80; ++n) {
        worst = std::max(worst, std::abs(c.at(n) - Complex{expect, 0.0}) / expect);
        expect *= 0.25;
    }
    bool pass = worst < 1e-12;

    ForwardOptions fopts;
    fopts.expected_rank = 1;
    const ZetaSequence back = forward_map(c, fopts);
    const double zres = testsupport::zeta_mismatch(z, back);
    pass = pass && zres < 1e-10;
    report(1, pass, "closed-form N=1 roundtrip", std::max(worst, zres));
}

// 2. Real case at N=1: lambda=(2), mu=(1) -> c_n = 1.5 * 0.5^n; 64x64 dense
//    symmetric eigensolves recover eigenvalues 2 and 1 within 1e-9.
void criterion_2() {
    const ZetaSequence z = real_case_embed({2.0}, {1.0});
    const SymbolCoefficients c = reconstruct(z, 160, full_output());
    double worst = 0.0;
    double expect = 1.5;
    for (std::size_t n = 0; n <= 40; ++n) {
        worst = std::max(worst, std::abs(c.at(n) - Complex{expect, 0.0}) / std::abs(expect));
        expect *= 0.5;
    }

    Eigen::MatrixXd g(64, 64), gs(64, 64);
    for (int n = 0; n < 64; ++n)
        for (int p = 0; p < 64; ++p) {
            g(n, p) = c.at(n + p).real();
            gs(n, p) = c.at(n + p + 1).real();
        }
    const Eigen::VectorXd eh =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g, Eigen::EigenvaluesOnly).eigenvalues();
    const Eigen::VectorXd ek =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gs, Eigen::EigenvaluesOnly).eigenvalues();
    const double e1 = std::abs(eh(eh.size() - 1) - 2.0);
    const double e2 = std::abs(ek(ek.size() - 1) - 1.0);
    const bool pass = worst < 1e-12 && e1 < 1e-9 && e2 < 1e-9;
    report(2, pass, "real-case N=1 eigenvalues 2 and 1", std::max({worst, e1, e2}));
}

// 3. Weight identities at N=2.
void criterion_3() {
    const ZetaSequence z = validate_zeta({{2, 0}, {1.5, 0}, {1, 0}, {0.5, 0}});
    const WeightTable w = compute_weights(z);
    double worst = std::abs(w.nu_sq[0] - 0.546875);
    worst = std::max(worst, std::abs(w.nu_sq[1] - 0.3125));
    worst = std::max(worst, std::abs(w.kappa_sq[0] - 1.09375));
    worst = std::max(worst, std::abs(w.kappa_sq[1] - 1.40625));
    const double prod = (2.25 * 0.25) / (4.0 * 1.0);
    worst = std::max(worst, std::abs(w.sum_nu_sq() - (1.0 - prod)));
    worst = std::max(worst, std::abs(w.sum_kappa_sq() - 2.5));
    report(3, worst < 1e-12, "hand-evaluated weights at N=2", worst);
}

// 4. Partial-fraction identity suite: 50 random spectra, N in 1..8, moduli
//    log-uniform in [1e-2, 1e1], residuals < 1e-9, runtime < 10 s.
void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> pairs(1, 8);
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const ZetaSequence z =
            testsupport::random_zeta_loguniform(rng, pairs(rng), 1e-2, 1e1, rep % 5 == 0);
        const IdentityReport rep_i = identity_report(z, 1e-9);
        worst = std::max(worst, rep_i.max_residual);
    }
    const double dt = seconds_since(t0);
    report(4, worst < 1e-9 && dt < 10.0, "identity suite on 50 random spectra", worst);
    std::printf("       (runtime %.2f s)\n", dt);
}

// 5. Contraction and factorization on the same corpus.
void criterion_5() {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> pairs(1, 8);
    double worst_norm = 0.0, worst_fact = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = pairs(rng);
        const ZetaSequence z =
            testsupport::random_zeta_loguniform(rng, n, 1e-2, 1e1, rep % 5 == 0);
        const AOperator op = build_a(z);
        worst_norm = std::max(worst_norm, operator_norm(op.a) - 1.0);

        CMatrix gram = CMatrix::Zero(n, n);
        for (std::size_t m = 0; m < n; ++m) {
            if (z.sigma(m) == 0.0) continue;
            const CMatrix f = rank_one_factor(z, op.weights, m);
            gram += f * f.adjoint();
        }
        CMatrix target = CMatrix::Identity(n, n);
        target -= op.y_vec * op.y_vec.transpose();
        worst_fact = std::max(worst_fact, (gram - target).cwiseAbs().maxCoeff());
    }
    const bool pass = worst_norm <= 1e-10 && worst_fact < 1e-9;
    report(5, pass, "contraction ||A|| <= 1 and factor gram = I - YY^T",
           std::max(worst_norm, worst_fact));
}

// 6. Bijectivity at desk scale: 100 spectra and 100 rational symbols, N <= 6,
//    roundtrips within 1e-8; even reconstructions have Kronecker ranks (N, N).
//    Runtime < 60 s.  Spectra whose symbols need more than 384 coefficients to
//    settle (poles hugging the unit circle) are redrawn to keep the sections
//    small; the near-circle regime is covered separately by the fixed
//    (2, 1.5, 1, 0.5) case below.
void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::size_t> pairs(1, 6);
    double worst = 0.0;
    bool ranks_ok = true;

    int done = 0;
    while (done < 100) {
        testsupport::ZetaGenOptions opts;
        opts.min_ratio = 0.5;
        opts.max_ratio = 0.9;
        opts.odd = done % 4 == 0;
        const std::size_t n = pairs(rng);
        const ZetaSequence z = random_zeta(rng, n, opts);
        const auto c = testsupport::reconstruct_bounded(z, 384);
        if (!c) continue;
        ++done;
        ForwardOptions fopts;
        fopts.expected_rank = n;
        worst = std::max(worst, testsupport::zeta_mismatch(z, forward_map(*c, fopts)));
        if (!opts.odd) {
            const RankReport rk = kronecker_ranks(*c);
            ranks_ok = ranks_ok && rk.rank_h == n && rk.rank_k == n;
        }
    }

    // the reconstruct-example spectrum: poles at modulus 0.975, checked at the
    // accuracy its 800-coefficient truncation supports
    {
        const ZetaSequence z = validate_zeta({{2, 0}, {1.5, 0}, {1, 0}, {0.5, 0}});
        const SymbolCoefficients c = reconstruct(z, 800, full_output());
        ForwardOptions fopts;
        fopts.expected_rank = 2;
        const double res = testsupport::zeta_mismatch(z, forward_map(c, fopts));
        ranks_ok = ranks_ok && res < 1e-6;
    }

    int rational_done = 0;
    while (rational_done < 100) {
        const auto rat =
            testsupport::random_rational(rng, 1 + rational_done % 6, rational_done % 2 == 0);
        const SymbolCoefficients c = expand_rational(rat.numer, rat.denom, 128);
        ZetaSequence z;
        try {
            z = forward_map(c);
        } catch (const Error&) {
            continue; // clustered draw outside the generic class; redraw
        }
        const SymbolCoefficients back = reconstruct(z, c.size() - 1, full_output());
        worst = std::max(worst, testsupport::symbol_mismatch(c, back));
        ++rational_done;
    }

    const double dt = seconds_since(t0);
    const bool pass = worst < 1e-8 && ranks_ok && dt < 60.0;
    report(6, pass, "bijectivity roundtrips and Kronecker ranks", worst);
    std::printf("       (runtime %.2f s)\n", dt);
}

// 7. Blaschke degenerate case: singular values {1, 1} and {1}; forward_map
//    refuses with NonGeneric.
void criterion_7() {
    const SymbolCoefficients c = expand_rational({{-0.5, 0}, {1, 0}}, {{1, 0}, {-0.5, 0}}, 200);
    const HankelPair h = build_hankel_pair(c, 128);
    const Eigen::VectorXd sh = hermitian_eigenvalues_desc(h.gamma * h.gamma.adjoint());
    const Eigen::VectorXd sk = hermitian_eigenvalues_desc(h.gamma_shift * h.gamma_shift.adjoint());
    double worst = std::abs(std::sqrt(std::max(sh(0), 0.0)) - 1.0);
    worst = std::max(worst, std::abs(std::sqrt(std::max(sh(1), 0.0)) - 1.0));
    worst = std::max(worst, std::abs(std::sqrt(std::max(sk(0), 0.0)) - 1.0));
    // the remaining values are zero up to the squared-route resolution
    const double floor_sq = psd_noise_floor(std::max(sh(0), 0.0), 128);
    bool rest_vanish = sh(2) <= floor_sq && sk(1) <= floor_sq;

    bool refused = false;
    try {
        forward_map(c);
    } catch (const Error& e) {
        refused = e.code() == ErrorCode::NonGeneric;
    }
    report(7, worst < 1e-9 && rest_vanish && refused, "Blaschke symbol: {1,1}/{1} and NonGeneric",
           worst);
}

// 8. Generating-function cross-validation on an N <= 4 corpus.
void criterion_8() {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pairs(1, 4);
    double worst_three = 0.0, worst_recip = 0.0, worst_trace = 0.0;
    for (int rep = 0; rep < 12; ++rep) {
        testsupport::ZetaGenOptions opts;
        opts.min_ratio = 0.35;
        opts.max_ratio = 0.8;
        opts.odd = rep % 4 == 0;
        const ZetaSequence z = random_zeta(rng, pairs(rng), opts);
        const SymbolCoefficients c = reconstruct(z, 160, full_output());
        const auto grid = genfun_grid(z, &c, -5.0, -0.01, 32, c.size());
        for (const auto& s : grid) {
            const double scale = std::max(1.0, std::abs(s.j_product));
            worst_three = std::max(worst_three,
                                   std::abs(s.j_product - s.j_partial_fraction) / scale);
            worst_three = std::max(worst_three,
                                   std::abs(s.j_product - s.j_resolvent.value()) / scale);
            worst_recip = std::max(worst_recip, s.product_inverse_residual);
            worst_trace = std::max(worst_trace, s.trace_residual);
        }
    }
    const bool pass = worst_three < 1e-8 && worst_recip < 1e-10 && worst_trace < 1e-10;
    report(8, pass, "J three-way agreement, reciprocal, trace identity",
           std::max({worst_three, worst_recip, worst_trace}));
}

// 9. Kernel generators: closed form at (2, 0.5); boundary modulus and
//    annihilation; constant symbol gives phi = unimodular * z.
void criterion_9() {
    const ZetaSequence z = validate_zeta({{2, 0}, {0.5, 0}});
    const KernelReport rep = inner_generator(z, 200);
    double worst = std::abs(rep.generator_coeffs[0] - Complex{0.25, 0.0});
    double expect = -0.9375;
    for (std::size_t n = 1; n <= 60; ++n) {
        worst = std::max(worst,
                         std::abs(rep.generator_coeffs[n] - Complex{expect, 0.0}) /
                             std::abs(expect));
        expect *= 0.25;
    }
    bool pass = worst < 1e-10;

    const SymbolCoefficients c = reconstruct(z, 160, full_output());
    const GeneratorVerification v = verify_generator(c, rep, 512, 64);
    pass = pass && v.max_modulus_deviation < 1e-6 && v.phi_annihilation < 1e-9;

    const Complex a = std::polar(2.0, M_PI / 3.0);
    const KernelReport konst = inner_generator(validate_zeta({a}), 16);
    const std::vector<Complex> phi = konst.phi_coeffs();
    double cworst = std::abs(phi[0]) + std::abs(phi[1] - std::polar(1.0, M_PI / 3.0));
    for (std::size_t n = 2; n < phi.size(); ++n) cworst += std::abs(phi[n]);
    pass = pass && cworst < 1e-12;
    report(9, pass, "kernel generators: closed form, inner-ness, annihilation",
           std::max({worst, v.max_modulus_deviation, v.phi_annihilation, cworst}));
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures > 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
