#include "hankelspec/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iostream>

#include "hankelspec/genfun.hpp"
#include "hankelspec/hankel.hpp"
#include "hankelspec/identities.hpp"
#include "hankelspec/inverse.hpp"
#include "hankelspec/io.hpp"
#include "hankelspec/kernel.hpp"
#include "hankelspec/rational.hpp"

namespace hankelspec {

namespace {

using io::json;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ToleranceExceeded:
        case ErrorCode::TruncationTooShort:
            return 2;
        default:
            return 1;
    }
}

struct Options {
    std::string in_path;
    std::string out_path;
    std::string csv_path;
    std::string symbol_path; // genfun: optional explicit symbol document
    double tol = 1e-8;
    std::size_t nmax = 128;
    std::size_t size = 0; // 0: per-command default
    bool no_early_stop = false;
    double xmin = -5.0;
    double xmax = -0.01;
    std::size_t points = 32;
    std::size_t samples = 512;
    bool assume_sum_div = false;
    bool assume_sup_div = false;
    bool classify_only = false;
    bool verify = false;
};

void write_forward_csv(const std::string& path, const ZetaSequence& z) {
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < z.pair_count(); ++j)
        rows.push_back({static_cast<double>(j + 1), z.rho(j), z.phi(j), z.sigma(j), z.theta(j)});
    io::save_csv_file(path, {"j", "rho", "phi", "sigma", "theta"}, rows);
}

void write_symbol_csv(const std::string& path, const SymbolCoefficients& c) {
    std::vector<std::vector<double>> rows;
    for (std::size_t n = 0; n < c.size(); ++n)
        rows.push_back({static_cast<double>(n), c.coeffs[n].real(), c.coeffs[n].imag(),
                        std::abs(c.coeffs[n])});
    io::save_csv_file(path, {"n", "re", "im", "abs"}, rows);
}

// Relative mismatch of two zeta vectors, per entry.
double zeta_mismatch(const ZetaSequence& a, const ZetaSequence& b) {
    if (a.entries().size() != b.entries().size()) return HUGE_VAL;
    double worst = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        const double scale = std::max(std::abs(a.entries()[k]), 1e-300);
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]) / scale);
    }
    return worst;
}

// Mismatch of coefficient vectors, relative to the larger max magnitude.
double symbol_mismatch(const SymbolCoefficients& a, const SymbolCoefficients& b) {
    const std::size_t n = std::max(a.size(), b.size());
    const double scale = std::max({a.max_abs(), b.max_abs(), 1e-300});
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(a.at(k) - b.at(k)));
    return worst / scale;
}

int cmd_forward(const Options& o) {
    const SymbolCoefficients c = io::read_symbol_document(io::load_json_file(o.in_path));
    ForwardOptions opts;
    if (o.size > 0) opts.initial_size = o.size;
    const ZetaSequence z = forward_map(c, opts);
    if (!o.out_path.empty()) io::save_json_file(o.out_path, io::write_zeta_document(z));
    if (!o.csv_path.empty()) write_forward_csv(o.csv_path, z);
    return 0;
}

int cmd_inverse(const Options& o) {
    const ZetaSequence z = validate_zeta(io::read_zeta_document(io::load_json_file(o.in_path)));
    ReconstructOptions opts;
    opts.early_stop = !o.no_early_stop;
    const SymbolCoefficients c = reconstruct(z, o.nmax, opts);
    if (!o.out_path.empty()) io::save_json_file(o.out_path, io::write_symbol_document(c));
    if (!o.csv_path.empty()) write_symbol_csv(o.csv_path, c);
    return 0;
}

int cmd_roundtrip(const Options& o) {
    const json doc = io::load_json_file(o.in_path);
    // tail-complete reconstruction: the decay stop trims once coefficients
    // fall below 1e-14 * rho_1 for good; --nmax caps the length
    ReconstructOptions ropts;
    json report;
    double residual = 0.0;
    if (doc.contains("zeta")) {
        const ZetaSequence z = validate_zeta(io::read_zeta_document(doc));
        const SymbolCoefficients c = reconstruct(z, o.nmax, ropts);
        ForwardOptions fopts;
        fopts.expected_rank = z.pair_count();
        residual = zeta_mismatch(z, forward_map(c, fopts));
        report["direction"] = "zeta->symbol->zeta";
    } else {
        const SymbolCoefficients c = io::read_symbol_document(doc);
        const ZetaSequence z = forward_map(c, {});
        const std::size_t upto = std::max<std::size_t>(c.effective_length(), 1) - 1;
        residual = symbol_mismatch(c, reconstruct(z, upto, ropts));
        report["direction"] = "symbol->zeta->symbol";
    }
    report["residual"] = residual;
    report["tol"] = o.tol;
    report["pass"] = residual <= o.tol;
    if (!o.out_path.empty()) io::save_json_file(o.out_path, report);
    std::cout << report.dump(2) << "\n";
    return residual <= o.tol ? 0 : 2;
}

int cmd_kernel(const Options& o) {
    const ZetaSequence z = validate_zeta(io::read_zeta_document(io::load_json_file(o.in_path)));

    json advisory;
    if (o.assume_sum_div || o.assume_sup_div) {
        const KernelCase asymptotic = classify_asymptotic(o.assume_sum_div, o.assume_sup_div);
        advisory = json{{"asymptotic_case", to_string(asymptotic)},
                        {"assumed_sum_divergent", o.assume_sum_div},
                        {"assumed_sup_divergent", o.assume_sup_div}};
        if (asymptotic == KernelCase::TrivialKernel && !o.classify_only)
            throw Error(ErrorCode::TrivialKernelCase,
                        "asserted asymptotics make the kernel trivial; no generator exists "
                        "(rerun with --classify-only)");
    }

    KernelReport rep = o.classify_only ? classify_kernel(z) : inner_generator(z, o.nmax);
    json doc = io::write_kernel_report(rep);
    if (!advisory.is_null()) doc["advisory"] = advisory;

    if (rep.has_generator && o.verify) {
        const SymbolCoefficients c =
            reconstruct(z, std::max({o.nmax, 2 * o.size, std::size_t{1024}}), ReconstructOptions{});
        const std::size_t section = o.size > 0 ? o.size : 64;
        const GeneratorVerification v = verify_generator(c, rep, o.samples, section, o.tol);
        doc["verification"] = json{{"max_modulus_deviation", v.max_modulus_deviation},
                                   {"tail_estimate", v.tail_estimate},
                                   {"phi_annihilation", v.phi_annihilation},
                                   {"phi_shifted_annihilation", v.phi_shifted_annihilation},
                                   {"psi_shifted_annihilation", v.psi_shifted_annihilation}};
    }

    if (!o.out_path.empty()) io::save_json_file(o.out_path, doc);
    if (!o.csv_path.empty() && rep.has_generator) {
        const std::vector<Complex> phi = rep.phi_coeffs();
        std::vector<std::vector<double>> rows;
        for (std::size_t s = 0; s < o.samples; ++s) {
            const double t = 2.0 * M_PI * static_cast<double>(s) / static_cast<double>(o.samples);
            Complex val = 0.0;
            Complex pw = 1.0;
            const Complex w = std::polar(1.0, t);
            for (const Complex& coef : phi) {
                val += coef * pw;
                pw *= w;
            }
            rows.push_back({t, std::abs(val)});
        }
        io::save_csv_file(o.csv_path, {"t", "abs_phi"}, rows);
    }
    return 0;
}

int cmd_identities(const Options& o) {
    const ZetaSequence z = validate_zeta(io::read_zeta_document(io::load_json_file(o.in_path)));
    IdentityReport rep;
    int code = 0;
    try {
        rep = identity_report(z, o.tol);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ToleranceExceeded) throw;
        rep = identity_report(z, HUGE_VAL); // re-evaluate to report the rows anyway
        code = 2;
        std::cerr << io::error_document(to_string(e.code()), e.what()).dump() << "\n";
    }
    if (!o.out_path.empty()) io::save_json_file(o.out_path, io::write_identity_report(rep));
    std::cout << "max residual " << rep.max_residual << " (boundary "
              << rep.max_boundary_residual << ")\n";
    return code;
}

int cmd_genfun(const Options& o) {
    const json doc = io::load_json_file(o.in_path);

    // accepts spectral data, a symbol document, or both: the missing side is
    // derived through the map
    ZetaSequence z;
    SymbolCoefficients c;
    bool have_symbol = false;
    if (doc.contains("zeta")) {
        z = validate_zeta(io::read_zeta_document(doc));
    } else {
        c = io::read_symbol_document(doc);
        have_symbol = true;
        z = forward_map(c, {});
    }
    if (!o.symbol_path.empty()) {
        c = io::read_symbol_document(io::load_json_file(o.symbol_path));
        have_symbol = true;
    }
    if (!have_symbol) c = reconstruct(z, std::max<std::size_t>(o.nmax, 1024), ReconstructOptions{});
    const std::size_t section = o.size > 0 ? o.size : std::max<std::size_t>(c.size(), 2);
    const auto grid = genfun_grid(z, &c, o.xmin, o.xmax, o.points, section);

    std::vector<std::vector<double>> rows;
    for (const auto& s : grid)
        rows.push_back({s.x, s.j_product, s.j_partial_fraction,
                        s.j_resolvent.value_or(std::nan("")), s.inv_j, s.c_constant,
                        s.product_inverse_residual, s.trace_residual});
    const std::vector<std::string> header = {"x",     "j_product", "j_partial_fraction",
                                             "j_resolvent", "inv_j",     "c_constant",
                                             "jinvj_residual", "trace_residual"};
    if (!o.csv_path.empty()) io::save_csv_file(o.csv_path, header, rows);
    if (!o.out_path.empty()) {
        io::save_csv_file(o.out_path, header, rows);
    } else if (o.csv_path.empty()) {
        throw Error(ErrorCode::BadInput, "genfun needs --out or --csv for the grid");
    }
    return 0;
}

int cmd_rank(const Options& o) {
    const json doc = io::load_json_file(o.in_path);
    SymbolCoefficients c;
    if (doc.contains("coefficients")) {
        c = io::read_symbol_document(doc);
    } else {
        const io::RationalDocument r = io::read_rational_document(doc);
        c = expand_rational(r.numer, r.denom, o.nmax);
    }
    const RankReport rep = kronecker_ranks(c, o.tol);
    const json out = io::write_rank_report(rep);
    if (!o.out_path.empty()) io::save_json_file(o.out_path, out);
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int run_command(int argc, const char* const* argv) {
    CLI::App app{"spectral analysis toolkit for compact Hankel operator pairs"};
    app.require_subcommand(1);

    Options o;
    std::vector<std::pair<CLI::App*, double>> tol_defaults;
    std::vector<std::pair<CLI::App*, std::size_t>> nmax_defaults;
    auto add_common = [&](CLI::App* cmd, double default_tol, std::size_t default_nmax = 128) {
        cmd->add_option("--in", o.in_path, "input JSON document")->required();
        cmd->add_option("--out", o.out_path, "output path");
        cmd->add_option("--csv", o.csv_path, "CSV export path");
        cmd->add_option("--tol", o.tol, "tolerance");
        cmd->add_option("--nmax", o.nmax, "coefficient / generator degree cutoff");
        cmd->add_option("--size", o.size, "Hankel section size");
        tol_defaults.emplace_back(cmd, default_tol);
        nmax_defaults.emplace_back(cmd, default_nmax);
    };

    CLI::App* forward = app.add_subcommand("forward", "symbol coefficients -> spectral data");
    add_common(forward, 1e-8);

    CLI::App* inverse = app.add_subcommand("inverse", "spectral data -> symbol coefficients");
    add_common(inverse, 1e-8);
    inverse->add_flag("--no-early-stop", o.no_early_stop, "emit all nmax+1 coefficients");

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "invert then re-map, report residual");
    add_common(roundtrip, 1e-8, 4096);

    CLI::App* kernel = app.add_subcommand("kernel", "kernel classification and inner generator");
    add_common(kernel, 1e-6);
    kernel->add_option("--samples", o.samples, "circle sample count");
    kernel->add_flag("--classify-only", o.classify_only, "skip the generator");
    kernel->add_flag("--verify", o.verify, "verify inner-ness and annihilation");
    kernel->add_flag("--assume-sum-divergent", o.assume_sum_div,
                     "assert sum (1 - sigma^2/rho^2) = infinity");
    kernel->add_flag("--assume-sup-divergent", o.assume_sup_div,
                     "assert sup_N p_N = infinity");

    CLI::App* identities = app.add_subcommand("identities", "evaluate the identity suite");
    add_common(identities, 1e-9);

    CLI::App* genfun = app.add_subcommand("genfun", "generating function grid");
    add_common(genfun, 1e-8);
    genfun->add_option("--symbol", o.symbol_path, "symbol JSON for the resolvent form");
    genfun->add_option("--xmin", o.xmin, "grid start");
    genfun->add_option("--xmax", o.xmax, "grid end");
    genfun->add_option("--points", o.points, "grid point count");

    CLI::App* rank = app.add_subcommand("rank", "Kronecker ranks of a symbol");
    add_common(rank, 1e-10);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << io::error_document("BadInput", e.what()).dump() << "\n";
        return 1;
    }

    for (const auto& [cmd, tol] : tol_defaults)
        if (cmd->parsed() && cmd->get_option("--tol")->count() == 0) o.tol = tol;
    for (const auto& [cmd, nmax] : nmax_defaults)
        if (cmd->parsed() && cmd->get_option("--nmax")->count() == 0) o.nmax = nmax;

    try {
        if (forward->parsed()) return cmd_forward(o);
        if (inverse->parsed()) return cmd_inverse(o);
        if (roundtrip->parsed()) return cmd_roundtrip(o);
        if (kernel->parsed()) return cmd_kernel(o);
        if (identities->parsed()) return cmd_identities(o);
        if (genfun->parsed()) return cmd_genfun(o);
        if (rank->parsed()) return cmd_rank(o);
    } catch (const Error& e) {
        std::cerr << io::error_document(to_string(e.code()), e.what()).dump() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << io::error_document("Internal", e.what()).dump() << "\n";
        return 1;
    }
    return 1;
}

} // namespace hankelspec
