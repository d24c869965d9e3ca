#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hankelspec/errors.hpp"

namespace hankelspec {

using Complex = std::complex<double>;

// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

// Interlaced spectral data zeta_1, zeta_2, ..., stored canonically with even
// length: an odd-length input is equivalent to the even form with a trailing
// zero (sigma_N = 0).  Odd positions (0-based even indices) carry the
// rho-circle entries rho_j e^{-i phi_j}, even positions the sigma-circle
// entries sigma_j e^{-i theta_j}, with strictly decreasing moduli
//   |zeta_1| > |zeta_2| > ... > 0.
// The empty sequence denotes the zero symbol.
class ZetaSequence {
public:
    ZetaSequence() = default;

    // Number of (rho, sigma) pairs after canonicalization.
    std::size_t pair_count() const { return entries_.size() / 2; }
    bool empty() const { return entries_.empty(); }

    // True when the data has the odd rank pattern, i.e. sigma_N = 0.
    bool is_odd() const { return odd_; }

    const std::vector<Complex>& entries() const { return entries_; }

    // 0-based views; j < pair_count().
    double rho(std::size_t j) const { return std::abs(entries_[2 * j]); }
    double sigma(std::size_t j) const { return std::abs(entries_[2 * j + 1]); }
    double rho_sq(std::size_t j) const { double r = rho(j); return r * r; }
    double sigma_sq(std::size_t j) const { double s = sigma(j); return s * s; }
    double phi(std::size_t j) const { return wrap_angle(-std::arg(entries_[2 * j])); }
    double theta(std::size_t j) const {
        return sigma(j) > 0.0 ? wrap_angle(-std::arg(entries_[2 * j + 1])) : 0.0;
    }
    Complex zeta_rho(std::size_t j) const { return entries_[2 * j]; }
    Complex zeta_sigma(std::size_t j) const { return entries_[2 * j + 1]; }

    // All entries real (angles 0 or pi)?
    bool is_real(double tol = 1e-12) const;

    // Validating constructor; see validate_zeta.
    static ZetaSequence validate(const std::vector<Complex>& raw, double margin = 1e-10);

private:
    std::vector<Complex> entries_; // canonical even length
    bool odd_ = false;
};

// Validates raw interlaced data against the domain constraints: strictly
// decreasing moduli with relative gap >= margin, no zero entries except a
// single trailing one (the odd-pattern encoding).  Odd-length input is
// canonicalized by appending sigma_N = 0.
//
// Throws Error{InterlacingViolation} or Error{ZeroEntry}.
ZetaSequence validate_zeta(const std::vector<Complex>& raw, double margin = 1e-10);

} // namespace hankelspec
