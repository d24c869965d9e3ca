#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hankelspec/symbol.hpp"
#include "hankelspec/weights.hpp"
#include "hankelspec/zeta.hpp"

namespace hankelspec {

// Relative pole margin: evaluation points within this distance of 1/rho_j^2
// (resp. 1/sigma_j^2) are rejected as NearPole.
inline constexpr double kPoleMargin = 1e-8;

// J(x) = prod_j (1 - sigma_j^2 x) / (1 - rho_j^2 x)
double j_product(const ZetaSequence& z, double x);

// J(x) = 1 + x sum_j nu_j^2 rho_j^2 / (1 - x rho_j^2)
double j_partial_fraction(const ZetaSequence& z, double x);
double j_partial_fraction(const ZetaSequence& z, const WeightTable& w, double x);

// J(x) = ((I - x Gamma Gamma*)^{-1} e_0 | e_0) at the given section size.
// The imaginary part of the solution component must vanish (the resolvent of
// a selfadjoint operator at real x); its failure or a singular system raises
// SingularSystem / ToleranceExceeded.
double j_resolvent(const SymbolCoefficients& c, double x, std::size_t size);

struct InverseJValue {
    double value = 0.0;      // 1/J(x) = 1 - x (C + sum kappa_j^2 / (1 - x sigma_j^2))
    double c_constant = 0.0; // 0 for even data; (sum nu_j^2/rho_j^2)^{-1} for odd
};

InverseJValue inverse_j(const ZetaSequence& z, double x);
InverseJValue inverse_j(const ZetaSequence& z, const WeightTable& w, double x);

// Residual of the trace identity
//   sum_j (rho_j^2/(1-rho_j^2 x) - sigma_j^2/(1-sigma_j^2 x)) = J'(x)/J(x)
// with J' from the derivative of the partial-fraction form,
// J'(x) = sum_j nu_j^2 rho_j^2 / (1 - x rho_j^2)^2, and J from the product
// form — two routes through independent data (weights vs raw moduli).
double trace_logderiv_check(const ZetaSequence& z, double x);
double trace_logderiv_check(const ZetaSequence& z, const WeightTable& w, double x);

// |J'_analytic - central difference of j_product| / scale; the loose
// cross-check of the derivative route.
double j_derivative_fd_residual(const ZetaSequence& z, double x, double step = 1e-6);

// One grid sample for the CSV export.
struct GenFunSample {
    double x = 0.0;
    double j_product = 0.0;
    double j_partial_fraction = 0.0;
    std::optional<double> j_resolvent;
    double inv_j = 0.0;
    double c_constant = 0.0;
    double product_inverse_residual = 0.0; // |J * (1/J) - 1|
    double trace_residual = 0.0;
};

// Uniform grid over [x_min, x_max]; points within the pole margin are skipped.
// The resolvent column is filled when a symbol is supplied.
std::vector<GenFunSample> genfun_grid(const ZetaSequence& z, const SymbolCoefficients* c,
                                      double x_min, double x_max, std::size_t points,
                                      std::size_t size);

} // namespace hankelspec
