#include "hankelspec/zeta.hpp"

#include <cmath>
#include <sstream>

namespace hankelspec {

double wrap_angle(double a) {
    double w = std::remainder(a, 2.0 * M_PI);
    if (w <= -M_PI) w = M_PI; // remainder may return -pi; canonical form is +pi
    return w;
}

bool ZetaSequence::is_real(double tol) const {
    for (const Complex& z : entries_) {
        if (std::abs(z.imag()) > tol * std::max(1.0, std::abs(z.real()))) return false;
    }
    return true;
}

ZetaSequence ZetaSequence::validate(const std::vector<Complex>& raw, double margin) {
    ZetaSequence out;
    if (raw.empty()) return out; // zero symbol

    const std::size_t n = raw.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (!std::isfinite(raw[k].real()) || !std::isfinite(raw[k].imag()))
            throw Error(ErrorCode::BadInput, "zeta entry " + std::to_string(k + 1) + " is not finite");
    }

    // Zeros are permitted only as the final entry of an even-length sequence
    // (the canonical sigma_N = 0 storage of the odd pattern).
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(raw[k]) == 0.0) {
            const bool canonical_tail = (k + 1 == n) && (n % 2 == 0);
            if (!canonical_tail) {
                throw Error(ErrorCode::ZeroEntry,
                            "zeta entry " + std::to_string(k + 1) + " has zero modulus");
            }
        }
    }

    const std::size_t nonzero = (std::abs(raw[n - 1]) == 0.0) ? n - 1 : n;
    for (std::size_t k = 0; k + 1 < nonzero; ++k) {
        const double a = std::abs(raw[k]);
        const double b = std::abs(raw[k + 1]);
        if (!(b < a * (1.0 - margin))) {
            std::ostringstream msg;
            msg << "moduli |zeta_" << (k + 1) << "| = " << a << " and |zeta_" << (k + 2)
                << "| = " << b << " violate the strict decrease margin " << margin;
            throw Error(ErrorCode::InterlacingViolation, msg.str());
        }
    }

    out.entries_ = raw;
    if (n % 2 == 1) out.entries_.push_back(Complex{0.0, 0.0});
    out.odd_ = std::abs(out.entries_.back()) == 0.0;
    return out;
}

ZetaSequence validate_zeta(const std::vector<Complex>& raw, double margin) {
    return ZetaSequence::validate(raw, margin);
}

} // namespace hankelspec
