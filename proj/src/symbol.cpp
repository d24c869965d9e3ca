#include "hankelspec/symbol.hpp"

#include <cmath>

namespace hankelspec {

std::size_t SymbolCoefficients::effective_length() const {
    std::size_t n = coeffs.size();
    while (n > 0 && std::abs(coeffs[n - 1]) == 0.0) --n;
    return n;
}

double SymbolCoefficients::max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

bool SymbolCoefficients::is_real(double tol) const {
    const double scale = std::max(1.0, max_abs());
    for (const auto& c : coeffs)
        if (std::abs(c.imag()) > tol * scale) return false;
    return true;
}

} // namespace hankelspec
