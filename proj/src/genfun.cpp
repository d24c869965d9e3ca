#include "hankelspec/genfun.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "hankelspec/hankel.hpp"

namespace hankelspec {

namespace {

void check_pole(double x, double modulus_sq, const char* which, std::size_t j) {
    if (modulus_sq == 0.0) return;
    if (std::abs(1.0 - x * modulus_sq) < kPoleMargin) {
        std::ostringstream msg;
        msg << "x = " << x << " lies within the pole margin of 1/" << which << "_"
            << (j + 1) << "^2";
        throw Error(ErrorCode::NearPole, msg.str());
    }
}

} // namespace

double j_product(const ZetaSequence& z, double x) {
    double value = 1.0;
    for (std::size_t j = 0; j < z.pair_count(); ++j) {
        check_pole(x, z.rho_sq(j), "rho", j);
        value *= (1.0 - z.sigma_sq(j) * x) / (1.0 - z.rho_sq(j) * x);
    }
    return value;
}

double j_partial_fraction(const ZetaSequence& z, double x) {
    return j_partial_fraction(z, compute_weights(z), x);
}

double j_partial_fraction(const ZetaSequence& z, const WeightTable& w, double x) {
    double sum = 0.0;
    for (std::size_t j = 0; j < z.pair_count(); ++j) {
        check_pole(x, z.rho_sq(j), "rho", j);
        sum += w.nu_sq[j] * z.rho_sq(j) / (1.0 - x * z.rho_sq(j));
    }
    return 1.0 + x * sum;
}

double j_resolvent(const SymbolCoefficients& c, double x, std::size_t size) {
    const HankelPair h = build_hankel_pair(c, size);
    Eigen::MatrixXcd m = -x * (h.gamma * h.gamma.adjoint());
    m.diagonal().array() += 1.0;

    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(size);
    e0(0) = 1.0;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
    const Eigen::VectorXcd y = lu.solve(e0);
    const double residual = (m * y - e0).norm();
    if (!y.allFinite() || residual > 1e-6 * std::max(1.0, y.norm()))
        throw Error(ErrorCode::SingularSystem,
                    "I - x Gamma Gamma* is numerically singular at x = " + std::to_string(x));

    const Complex j0 = y(0);
    if (std::abs(j0.imag()) > 1e-8 * std::max(1.0, std::abs(j0)))
        throw Error(ErrorCode::ToleranceExceeded,
                    "resolvent pairing has non-vanishing imaginary part " +
                        std::to_string(j0.imag()));
    return j0.real();
}

InverseJValue inverse_j(const ZetaSequence& z, double x) {
    return inverse_j(z, compute_weights(z), x);
}

InverseJValue inverse_j(const ZetaSequence& z, const WeightTable& w, double x) {
    InverseJValue out;
    out.c_constant = z.is_odd() && z.pair_count() > 0 ? 1.0 / w.sum_nu_sq_over_rho_sq(z) : 0.0;
    double sum = out.c_constant;
    for (std::size_t j = 0; j < z.pair_count(); ++j) {
        if (z.sigma(j) == 0.0) continue; // its weight is the constant C
        check_pole(x, z.sigma_sq(j), "sigma", j);
        sum += w.kappa_sq[j] / (1.0 - x * z.sigma_sq(j));
    }
    out.value = 1.0 - x * sum;
    return out;
}

double trace_logderiv_check(const ZetaSequence& z, double x) {
    return trace_logderiv_check(z, compute_weights(z), x);
}

double trace_logderiv_check(const ZetaSequence& z, const WeightTable& w, double x) {
    double trace_sum = 0.0;
    double j_prime = 0.0;
    for (std::size_t j = 0; j < z.pair_count(); ++j) {
        check_pole(x, z.rho_sq(j), "rho", j);
        check_pole(x, z.sigma_sq(j), "sigma", j);
        trace_sum += z.rho_sq(j) / (1.0 - z.rho_sq(j) * x);
        trace_sum -= z.sigma_sq(j) / (1.0 - z.sigma_sq(j) * x);
        const double d = 1.0 - x * z.rho_sq(j);
        j_prime += w.nu_sq[j] * z.rho_sq(j) / (d * d);
    }
    const double j_value = j_product(z, x);
    return std::abs(trace_sum - j_prime / j_value);
}

double j_derivative_fd_residual(const ZetaSequence& z, double x, double step) {
    const WeightTable w = compute_weights(z);
    double j_prime = 0.0;
    for (std::size_t j = 0; j < z.pair_count(); ++j) {
        const double d = 1.0 - x * z.rho_sq(j);
        j_prime += w.nu_sq[j] * z.rho_sq(j) / (d * d);
    }
    const double h = step * std::max(1.0, std::abs(x));
    const double fd = (j_product(z, x + h) - j_product(z, x - h)) / (2.0 * h);
    return std::abs(j_prime - fd) / std::max(1.0, std::abs(j_prime));
}

std::vector<GenFunSample> genfun_grid(const ZetaSequence& z, const SymbolCoefficients* c,
                                      double x_min, double x_max, std::size_t points,
                                      std::size_t size) {
    const WeightTable w = compute_weights(z);
    std::vector<GenFunSample> grid;
    grid.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        GenFunSample s;
        s.x = points == 1 ? x_min
                          : x_min + (x_max - x_min) * static_cast<double>(i) /
                                        static_cast<double>(points - 1);
        try {
            s.j_product = j_product(z, s.x);
            s.j_partial_fraction = j_partial_fraction(z, w, s.x);
            const InverseJValue inv = inverse_j(z, w, s.x);
            s.inv_j = inv.value;
            s.c_constant = inv.c_constant;
            s.product_inverse_residual = std::abs(s.j_product * s.inv_j - 1.0);
            s.trace_residual = trace_logderiv_check(z, w, s.x);
            if (c != nullptr) s.j_resolvent = j_resolvent(*c, s.x, size);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NearPole) continue; // skip, keep the rest of the grid
            throw;
        }
        grid.push_back(s);
    }
    return grid;
}

} // namespace hankelspec
