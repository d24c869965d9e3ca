#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "hankelspec/symbol.hpp"
#include "hankelspec/zeta.hpp"

namespace hankelspec {

// Finite sections of the Hankel matrix Gamma_{np} = c_{n+p} and its shift
// Gamma~_{np} = c_{n+p+1}; both complex symmetric.
struct HankelPair {
    Eigen::MatrixXcd gamma;
    Eigen::MatrixXcd gamma_shift;
    std::size_t truncation_size = 0;
};

HankelPair build_hankel_pair(const SymbolCoefficients& c, std::size_t size);

// Phase-fixed eigensystem of the antilinear pair (H_u, K_u) represented by
// (Gamma, Gamma~).  For each retained eigenpair (rho^2, v) of Gamma Gamma*,
// the vector w = Gamma conj(v) is collinear with v, w = chi v, |chi| = rho;
// e_j = e^{i arg(chi)/2} v fixes the phase so that Gamma conj(e_j) = rho_j e_j
// (e_j unique up to sign).  Angles:
//   phi_j   = arg (1|e_j)^2,  (1|e_j)  = conj(e_j(0))
//   theta_j = arg (u|f_j)^2,  (u|f_j)  = sum_n c_n conj(f_j(n))
struct PhaseFixedEigensystem {
    std::vector<double> rho, phi;
    std::vector<double> sigma, theta;
    Eigen::MatrixXcd e_vectors; // columns e_j
    Eigen::MatrixXcd f_vectors; // columns f_j
    std::size_t truncation_size = 0;
};

struct EigensystemOptions {
    double gap_tol = 1e-6;       // relative gap below which spectra are non-generic
    double retention = 1e-12;    // singular values below retention*rho_1 are zeros
    double phase_tol = 1e-8;     // collinearity defect bound, relative to rho_1
    double pairing_tol = 1e-13;  // |(1|e_j)|, |(u|f_j)| below this are vanishing
};

// Throws NonGeneric / PhaseInstability / VanishingPairing.
PhaseFixedEigensystem phase_fixed_eigensystem(const HankelPair& h, const SymbolCoefficients& c,
                                              const EigensystemOptions& opts = {});
PhaseFixedEigensystem phase_fixed_eigensystem(const HankelPair& h, const SymbolCoefficients& c,
                                              double gap_tol);

struct ForwardOptions {
    double margin = 1e-10;     // interlacing margin of the output validation
    double gap_tol = 1e-6;
    double retention = 1e-12;
    double phase_tol = 1e-8;
    double pairing_tol = 1e-13;
    double stab_tol = 1e-10;   // relative movement of retained singular values
    std::size_t initial_size = 0;   // 0: max(32, 4 * expected rank)
    std::size_t max_size = 4096;
    std::size_t expected_rank = 0;  // 0: ceil(effective length / 2)
};

// The spectral map: zeta_{2j-1} = rho_j e^{-i phi_j}, zeta_{2j} = sigma_j e^{-i theta_j},
// evaluated on finite sections whose size doubles until retained singular
// values stabilize.  Once the section size reaches the coefficient support the
// values are exact (all further rows and columns vanish), so the loop stops.
// Throws NonGeneric / NoConvergence.
ZetaSequence forward_map(const SymbolCoefficients& c, const ForwardOptions& opts = {});

} // namespace hankelspec
