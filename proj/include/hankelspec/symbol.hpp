#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hankelspec {

// Finite Fourier coefficient sequence c_0..c_M of a holomorphic symbol.
// Trailing zeros are permitted and ignored by the operator constructions.
struct SymbolCoefficients {
    std::vector<std::complex<double>> coeffs;

    SymbolCoefficients() = default;
    explicit SymbolCoefficients(std::vector<std::complex<double>> c) : coeffs(std::move(c)) {}

    std::size_t size() const { return coeffs.size(); }
    std::complex<double> at(std::size_t n) const {
        return n < coeffs.size() ? coeffs[n] : std::complex<double>{0.0, 0.0};
    }

    // Length with trailing exact zeros removed.
    std::size_t effective_length() const;

    double max_abs() const;

    // All imaginary parts below tol (relative to the largest coefficient).
    bool is_real(double tol = 1e-12) const;
};

} // namespace hankelspec
