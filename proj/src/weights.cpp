#include "hankelspec/weights.hpp"

#include <cmath>
#include <string>

namespace hankelspec {

namespace {

// log of DBL_MAX is ~709.78; stay a little inside it.
constexpr double kLogRange = 705.0;

void check_range(double log_value, const char* what, std::size_t index) {
    if (!std::isfinite(log_value) || std::abs(log_value) > kLogRange) {
        throw Error(ErrorCode::Overflow,
                    std::string(what) + "^2 log-magnitude out of range at index " +
                        std::to_string(index + 1) + " (pathological clustering)");
    }
}

} // namespace

double WeightTable::sum_nu_sq() const {
    double s = 0.0;
    for (double v : nu_sq) s += v;
    return s;
}

double WeightTable::sum_kappa_sq() const {
    double s = 0.0;
    for (double v : kappa_sq) s += v;
    return s;
}

double WeightTable::sum_nu_sq_over_rho_sq(const ZetaSequence& z) const {
    double s = 0.0;
    for (std::size_t j = 0; j < nu_sq.size(); ++j) s += nu_sq[j] / z.rho_sq(j);
    return s;
}

WeightTable compute_weights(const ZetaSequence& z) {
    const std::size_t n = z.pair_count();
    WeightTable w;
    w.nu_sq.resize(n);
    w.kappa_sq.resize(n);
    w.log_nu_sq.resize(n);
    w.log_kappa_sq.resize(n);
    w.sigma_is_zero.resize(n);

    for (std::size_t j = 0; j < n; ++j) {
        const double rj = z.rho_sq(j);
        // leading factor 1 - sigma_j^2/rho_j^2
        double acc = std::log1p(-z.sigma_sq(j) / rj);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            acc += std::log(std::abs(rj - z.sigma_sq(k)));
            acc -= std::log(std::abs(rj - z.rho_sq(k)));
        }
        check_range(acc, "nu", j);
        w.log_nu_sq[j] = acc;
        w.nu_sq[j] = std::exp(acc);
    }

    for (std::size_t m = 0; m < n; ++m) {
        const double sm = z.sigma_sq(m);
        double acc = std::log(z.rho_sq(m) - sm);
        for (std::size_t l = 0; l < n; ++l) {
            if (l == m) continue;
            acc += std::log(std::abs(sm - z.rho_sq(l)));
            acc -= std::log(std::abs(sm - z.sigma_sq(l)));
        }
        check_range(acc, "kappa", m);
        w.log_kappa_sq[m] = acc;
        w.kappa_sq[m] = std::exp(acc);
        w.sigma_is_zero[m] = z.sigma(m) == 0.0;
    }

    return w;
}

} // namespace hankelspec
