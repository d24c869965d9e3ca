#include "hankelspec/rational.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "hankelspec/hankel.hpp"
#include "hankelspec/linalg.hpp"

namespace hankelspec {

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
    double scale = 0.0;
    for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
    std::size_t degree = coeffs.empty() ? 0 : coeffs.size() - 1;
    while (degree > 0 && std::abs(coeffs[degree]) <= 1e-14 * scale) --degree;
    if (degree == 0) return {};

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (std::size_t i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < degree; ++i)
        companion(i, degree - 1) = -coeffs[i] / coeffs[degree];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<Complex> roots(degree);
    for (std::size_t i = 0; i < degree; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

SymbolCoefficients expand_rational(const std::vector<Complex>& numer,
                                   const std::vector<Complex>& denom, std::size_t n_max,
                                   double root_margin) {
    if (denom.empty() || std::abs(denom[0] - Complex{1.0, 0.0}) > 1e-12)
        throw Error(ErrorCode::NormalizationError, "denominator must satisfy denom(0) = 1");

    for (const Complex& root : polynomial_roots(denom)) {
        if (std::abs(root) <= 1.0 + root_margin) {
            std::ostringstream msg;
            msg << "denominator root at modulus " << std::abs(root)
                << " inside or on the unit circle (margin " << root_margin << ")";
            throw Error(ErrorCode::DenominatorRootInDisc, msg.str());
        }
    }

    std::vector<Complex> c(n_max + 1, Complex{0.0, 0.0});
    for (std::size_t n = 0; n <= n_max; ++n) {
        Complex value = n < numer.size() ? numer[n] : Complex{0.0, 0.0};
        const std::size_t kmax = std::min(n, denom.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) value -= denom[k] * c[n - k];
        c[n] = value;
    }
    return SymbolCoefficients{std::move(c)};
}

namespace {

std::pair<std::size_t, std::size_t> rank_counts(const SymbolCoefficients& c, std::size_t size,
                                                double tol) {
    const HankelPair h = build_hankel_pair(c, size);
    const Eigen::VectorXd eh = hermitian_eigenvalues_desc(h.gamma * h.gamma.adjoint());
    const Eigen::VectorXd ek = hermitian_eigenvalues_desc(h.gamma_shift * h.gamma_shift.adjoint());
    const double rho_1_sq = std::max(eh(0), 0.0);
    if (rho_1_sq == 0.0) return {0, 0};
    const double floor_sq =
        std::max(tol * tol * rho_1_sq, psd_noise_floor(rho_1_sq, h.gamma.rows()));
    std::size_t rh = 0, rk = 0;
    while (rh < static_cast<std::size_t>(eh.size()) && eh(rh) > floor_sq) ++rh;
    while (rk < static_cast<std::size_t>(ek.size()) && ek(rk) > floor_sq) ++rk;
    return {rh, rk};
}

} // namespace

RankReport kronecker_ranks(const SymbolCoefficients& c, double tol, std::size_t max_size) {
    RankReport rep;
    const std::size_t len = c.effective_length();
    if (len == 0) {
        rep.pattern = RankPattern::EvenV2N; // zero symbol: ranks (0, 0)
        return rep;
    }

    std::size_t size = std::min<std::size_t>(32, std::max<std::size_t>(len, 2));
    auto counts = rank_counts(c, size, tol);
    rep.sizes_checked.push_back(size);
    bool grew_every_step = true;
    bool accepted = size >= len; // full support: exact

    while (!accepted) {
        const std::size_t next = std::min(2 * size, std::max<std::size_t>(len, 2));
        if (next > max_size) break;
        const auto next_counts = rank_counts(c, next, tol);
        rep.sizes_checked.push_back(next);
        if (next_counts != counts) {
            grew_every_step = grew_every_step && next_counts.first >= counts.first &&
                              next_counts.second >= counts.second;
        } else {
            accepted = true;
        }
        if (next >= len) accepted = true; // exact section
        counts = next_counts;
        size = next;
    }

    rep.rank_h = counts.first;
    rep.rank_k = counts.second;
    if (accepted) {
        if (rep.rank_k == rep.rank_h)
            rep.pattern = RankPattern::EvenV2N;
        else if (rep.rank_k + 1 == rep.rank_h)
            rep.pattern = RankPattern::OddV2N1;
        else
            throw Error(ErrorCode::Inconclusive,
                        "rank counts (" + std::to_string(rep.rank_h) + ", " +
                            std::to_string(rep.rank_k) + ") fit no rank pattern");
        return rep;
    }
    if (grew_every_step) {
        rep.pattern = RankPattern::NotFiniteRank;
        return rep;
    }
    throw Error(ErrorCode::Inconclusive,
                "ranks did not stabilize below section size " + std::to_string(max_size));
}

} // namespace hankelspec
