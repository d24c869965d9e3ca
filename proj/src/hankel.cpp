#include "hankelspec/hankel.hpp"

#include <cmath>
#include <sstream>

#include "hankelspec/linalg.hpp"

namespace hankelspec {

HankelPair build_hankel_pair(const SymbolCoefficients& c, std::size_t size) {
    if (size < 1) throw Error(ErrorCode::BadInput, "hankel section size must be >= 1");
    HankelPair h;
    h.truncation_size = size;
    h.gamma = Eigen::MatrixXcd::Zero(size, size);
    h.gamma_shift = Eigen::MatrixXcd::Zero(size, size);
    for (std::size_t n = 0; n < size; ++n) {
        for (std::size_t p = 0; p < size; ++p) {
            h.gamma(n, p) = c.at(n + p);
            h.gamma_shift(n, p) = c.at(n + p + 1);
        }
    }
    return h;
}

namespace {

struct RetainedSpectrum {
    std::vector<double> values; // descending singular values above retention
};

RetainedSpectrum retained(const Eigen::VectorXd& eigvals_desc, double floor_sq) {
    RetainedSpectrum r;
    for (Eigen::Index i = 0; i < eigvals_desc.size(); ++i) {
        const double ev = std::max(eigvals_desc(i), 0.0);
        if (ev <= floor_sq) break;
        r.values.push_back(std::sqrt(ev));
    }
    return r;
}

void check_gaps(const std::vector<double>& vals, double gap_tol, const char* which) {
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        if (vals[i + 1] > vals[i] * (1.0 - gap_tol)) {
            std::ostringstream msg;
            msg << which << " singular values " << vals[i] << " and " << vals[i + 1]
                << " are degenerate at relative gap tolerance " << gap_tol;
            throw Error(ErrorCode::NonGeneric, msg.str());
        }
    }
}

void check_interlacing(const std::vector<double>& rho, const std::vector<double>& sigma,
                       double gap_tol) {
    if (!(sigma.size() == rho.size() || sigma.size() + 1 == rho.size())) {
        std::ostringstream msg;
        msg << "retained counts rank(H) = " << rho.size() << ", rank(K) = " << sigma.size()
            << " do not fit a rank pattern";
        throw Error(ErrorCode::NonGeneric, msg.str());
    }
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        if (sigma[j] > rho[j] * (1.0 - gap_tol))
            throw Error(ErrorCode::NonGeneric, "sigma_" + std::to_string(j + 1) +
                                                   " fails to interlace below rho_" +
                                                   std::to_string(j + 1));
        if (j + 1 < rho.size() && rho[j + 1] > sigma[j] * (1.0 - gap_tol))
            throw Error(ErrorCode::NonGeneric, "rho_" + std::to_string(j + 2) +
                                                   " fails to interlace below sigma_" +
                                                   std::to_string(j + 1));
    }
}

// Phase-fix one antilinear eigenvector: returns (e, chi) with e = e^{i arg(chi)/2} v.
std::pair<Eigen::VectorXcd, std::complex<double>> fix_phase(const Eigen::MatrixXcd& gamma,
                                                            const Eigen::VectorXcd& v,
                                                            double rho, double rho_1,
                                                            double phase_tol) {
    const Eigen::VectorXcd w = gamma * v.conjugate();
    const std::complex<double> chi = v.dot(w); // sum conj(v_i) w_i
    const double defect = (w - chi * v).norm();
    if (defect > phase_tol * rho_1) {
        std::ostringstream msg;
        msg << "collinearity defect " << defect << " at singular value " << rho
            << " exceeds " << phase_tol * rho_1;
        throw Error(ErrorCode::PhaseInstability, msg.str());
    }
    const std::complex<double> half_phase = std::polar(1.0, std::arg(chi) / 2.0);
    return {half_phase * v, chi};
}

} // namespace

PhaseFixedEigensystem phase_fixed_eigensystem(const HankelPair& h, const SymbolCoefficients& c,
                                              double gap_tol) {
    EigensystemOptions opts;
    opts.gap_tol = gap_tol;
    return phase_fixed_eigensystem(h, c, opts);
}

PhaseFixedEigensystem phase_fixed_eigensystem(const HankelPair& h, const SymbolCoefficients& c,
                                              const EigensystemOptions& opts) {
    PhaseFixedEigensystem sys;
    sys.truncation_size = h.truncation_size;

    const HermitianEigen eig_h = hermitian_eigen_desc(h.gamma * h.gamma.adjoint());
    const HermitianEigen eig_k = hermitian_eigen_desc(h.gamma_shift * h.gamma_shift.adjoint());

    const double rho_1 = eig_h.values.size() > 0 ? std::sqrt(std::max(eig_h.values(0), 0.0)) : 0.0;
    if (rho_1 == 0.0) return sys; // zero symbol

    const double floor_sq = std::max(std::pow(opts.retention * rho_1, 2),
                                     psd_noise_floor(rho_1 * rho_1, h.gamma.rows()));
    const RetainedSpectrum rh = retained(eig_h.values, floor_sq);
    const RetainedSpectrum rk = retained(eig_k.values, floor_sq);

    check_gaps(rh.values, opts.gap_tol, "H");
    check_gaps(rk.values, opts.gap_tol, "K");
    check_interlacing(rh.values, rk.values, opts.gap_tol);

    const std::size_t nr = rh.values.size();
    const std::size_t nk = rk.values.size();
    sys.rho = rh.values;
    sys.sigma = rk.values;
    sys.phi.resize(nr);
    sys.theta.resize(nk);
    sys.e_vectors.resize(h.gamma.rows(), nr);
    sys.f_vectors.resize(h.gamma.rows(), nk);

    for (std::size_t j = 0; j < nr; ++j) {
        auto [e, chi] = fix_phase(h.gamma, eig_h.vectors.col(j), sys.rho[j], rho_1, opts.phase_tol);
        sys.e_vectors.col(j) = e;
        const std::complex<double> pairing = std::conj(e(0)); // (1|e_j)
        if (std::abs(pairing) < opts.pairing_tol)
            throw Error(ErrorCode::VanishingPairing,
                        "(1|e_" + std::to_string(j + 1) + ") vanishes; angle phi undefined");
        sys.phi[j] = wrap_angle(2.0 * std::arg(pairing));
    }

    for (std::size_t j = 0; j < nk; ++j) {
        auto [f, chi] = fix_phase(h.gamma_shift, eig_k.vectors.col(j), sys.sigma[j], rho_1,
                                  opts.phase_tol);
        sys.f_vectors.col(j) = f;
        std::complex<double> pairing = 0.0; // (u|f_j)
        const std::size_t upto = std::min<std::size_t>(c.size(), f.size());
        for (std::size_t p = 0; p < upto; ++p) pairing += c.coeffs[p] * std::conj(f(p));
        if (std::abs(pairing) < opts.pairing_tol * rho_1)
            throw Error(ErrorCode::VanishingPairing,
                        "(u|f_" + std::to_string(j + 1) + ") vanishes; angle theta undefined");
        sys.theta[j] = wrap_angle(2.0 * std::arg(pairing));
    }

    return sys;
}

namespace {

// Retained singular values of both sections at the given size, values only.
std::pair<RetainedSpectrum, RetainedSpectrum> section_spectra(const SymbolCoefficients& c,
                                                              std::size_t size,
                                                              double retention) {
    const HankelPair h = build_hankel_pair(c, size);
    const Eigen::VectorXd vh = hermitian_eigenvalues_desc(h.gamma * h.gamma.adjoint());
    const Eigen::VectorXd vk =
        hermitian_eigenvalues_desc(h.gamma_shift * h.gamma_shift.adjoint());
    const double rho_1_sq = std::max(vh(0), 0.0);
    const double floor_sq = std::max(retention * retention * rho_1_sq,
                                     psd_noise_floor(rho_1_sq, h.gamma.rows()));
    return {retained(vh, floor_sq), retained(vk, floor_sq)};
}

bool spectra_stable(const RetainedSpectrum& a, const RetainedSpectrum& b, double tol) {
    if (a.values.size() != b.values.size()) return false;
    const double scale = a.values.empty() ? 0.0 : a.values[0];
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (std::abs(a.values[i] - b.values[i]) > tol * scale) return false;
    return true;
}

} // namespace

ZetaSequence forward_map(const SymbolCoefficients& c, const ForwardOptions& opts) {
    const std::size_t len = c.effective_length();
    if (len == 0) return ZetaSequence{}; // zero symbol

    // Without a rank hint the ladder starts at the floor size and climbs.
    const std::size_t hinted_rank = opts.expected_rank > 0 ? opts.expected_rank : 8;
    std::size_t size = opts.initial_size > 0 ? opts.initial_size
                                             : std::max<std::size_t>(32, 4 * hinted_rank);
    // At size >= len the section carries the whole coefficient support and the
    // singular values are exact; no point starting beyond that.
    size = std::min(size, std::max<std::size_t>(len, 2));
    if (size > opts.max_size)
        throw Error(ErrorCode::NoConvergence,
                    "section size " + std::to_string(size) + " already exceeds the cap " +
                        std::to_string(opts.max_size));

    std::size_t final_size = 0;
    if (size >= len) {
        final_size = size;
    } else {
        auto [ph, pk] = section_spectra(c, size, opts.retention);
        while (true) {
            std::size_t next = std::min(2 * size, std::max<std::size_t>(len, 2));
            if (next > opts.max_size)
                throw Error(ErrorCode::NoConvergence,
                            "singular values did not stabilize below section size " +
                                std::to_string(opts.max_size));
            auto [nh, nk] = section_spectra(c, next, opts.retention);
            const bool exact = next >= len;
            if (exact ||
                (spectra_stable(ph, nh, opts.stab_tol) && spectra_stable(pk, nk, opts.stab_tol))) {
                final_size = next;
                break;
            }
            size = next;
            ph = std::move(nh);
            pk = std::move(nk);
        }
    }

    EigensystemOptions eopts;
    eopts.gap_tol = opts.gap_tol;
    eopts.retention = opts.retention;
    eopts.phase_tol = opts.phase_tol;
    eopts.pairing_tol = opts.pairing_tol;
    const PhaseFixedEigensystem sys =
        phase_fixed_eigensystem(build_hankel_pair(c, final_size), c, eopts);

    std::vector<Complex> zeta;
    zeta.reserve(sys.rho.size() + sys.sigma.size());
    for (std::size_t j = 0; j < sys.rho.size(); ++j) {
        zeta.push_back(std::polar(sys.rho[j], -sys.phi[j]));
        if (j < sys.sigma.size()) zeta.push_back(std::polar(sys.sigma[j], -sys.theta[j]));
    }
    return validate_zeta(zeta, opts.margin);
}

} // namespace hankelspec
