#include "hankelspec/identities.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hankelspec {

namespace {

// Residual of sum(terms) = target, scaled by the largest magnitude involved;
// cancellation-heavy rows are judged against what double arithmetic can
// actually resolve.
double scaled_residual(double sum, double target, double max_term) {
    const double scale = std::max({std::abs(target), max_term, 1.0});
    return std::abs(sum - target) / scale;
}

void push(IdentityReport& rep, std::string id, std::size_t m, std::size_t p, double residual,
          bool boundary) {
    rep.rows.push_back({std::move(id), m, p, residual, boundary});
    if (boundary)
        rep.max_boundary_residual = std::max(rep.max_boundary_residual, residual);
    else
        rep.max_residual = std::max(rep.max_residual, residual);
}

} // namespace

IdentityReport identity_report(const ZetaSequence& z, double tol) {
    return identity_report(z, compute_weights(z), tol);
}

IdentityReport identity_report(const ZetaSequence& z, const WeightTable& w, double tol) {
    const std::size_t n = z.pair_count();
    IdentityReport rep;
    rep.sum_nu_sq = w.sum_nu_sq();
    rep.sum_kappa_sq = w.sum_kappa_sq();
    rep.c_constant = z.is_odd() && n > 0 ? 1.0 / w.sum_nu_sq_over_rho_sq(z) : 0.0;

    if (n == 0) return rep;

    // Sum rules from the finite-rank limits of the resolvent expansion.
    {
        double lp = 0.0; // log space
        for (std::size_t j = 0; j < n; ++j) {
            if (z.sigma(j) == 0.0) { lp = -std::numeric_limits<double>::infinity(); break; }
            lp += std::log(z.sigma_sq(j)) - std::log(z.rho_sq(j));
        }
        push(rep, "sum_nu", 0, 0, std::abs(rep.sum_nu_sq - (1.0 - std::exp(lp))), false);

        double diff = 0.0;
        for (std::size_t j = 0; j < n; ++j) diff += z.rho_sq(j) - z.sigma_sq(j);
        push(rep, "sum_kappa", 0, 0, std::abs(rep.sum_kappa_sq - diff) / diff, false);
    }

    for (std::size_t m = 0; m < n; ++m) {
        const bool bm = z.sigma(m) == 0.0;

        // (1): evaluated at x = 1/sigma_m^2
        double s1 = 0.0, mx1 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double t = z.rho_sq(j) * w.nu_sq[j] / (z.rho_sq(j) - z.sigma_sq(m));
            s1 += t;
            mx1 = std::max(mx1, std::abs(t));
        }
        push(rep, "1", m + 1, 0, scaled_residual(s1, 1.0, mx1), bm);

        // (1kappa): evaluated at x = 1/rho_m^2; the sigma_N = 0 weight is
        // accounted for by the constant C on odd data.
        double s1k = rep.c_constant / z.rho_sq(m);
        double mx1k = s1k;
        for (std::size_t j = 0; j < n; ++j) {
            if (z.sigma(j) == 0.0) continue;
            const double t = w.kappa_sq[j] / (z.rho_sq(m) - z.sigma_sq(j));
            s1k += t;
            mx1k = std::max(mx1k, std::abs(t));
        }
        push(rep, "1kappa", m + 1, 0, scaled_residual(s1k, 1.0, mx1k), z.is_odd());

        for (std::size_t p = 0; p < n; ++p) {
            const bool bp = bm || z.sigma(p) == 0.0;

            double s2 = 0.0, mx2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double t = z.rho_sq(j) * w.nu_sq[j] /
                                 ((z.rho_sq(j) - z.sigma_sq(m)) * (z.rho_sq(j) - z.sigma_sq(p)));
                s2 += t;
                mx2 = std::max(mx2, std::abs(t));
            }
            const double t2 = (m == p) ? 1.0 / w.kappa_sq[m] : 0.0;
            push(rep, "2", m + 1, p + 1, scaled_residual(s2, t2, mx2), bp);

            double s2k = 0.0, mx2k = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (z.sigma(j) == 0.0) continue; // sigma_j^2 factor vanishes exactly
                const double t = z.sigma_sq(j) * w.kappa_sq[j] /
                                 ((z.sigma_sq(j) - z.rho_sq(m)) * (z.sigma_sq(j) - z.rho_sq(p)));
                s2k += t;
                mx2k = std::max(mx2k, std::abs(t));
            }
            const double t2k = (m == p) ? 1.0 / w.nu_sq[m] - 1.0 : -1.0;
            push(rep, "2kappa", m + 1, p + 1, scaled_residual(s2k, t2k, mx2k), false);
        }
    }

    if (rep.max_residual > tol) {
        const IdentityRow* worst = nullptr;
        for (const auto& r : rep.rows)
            if (!r.boundary && (!worst || r.residual > worst->residual)) worst = &r;
        std::ostringstream msg;
        msg << "identity (" << worst->identity << ") m=" << worst->m << " p=" << worst->p
            << " residual " << worst->residual << " exceeds " << tol;
        throw Error(ErrorCode::ToleranceExceeded, msg.str());
    }
    return rep;
}

} // namespace hankelspec
