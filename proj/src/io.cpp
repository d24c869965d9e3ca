#include "hankelspec/io.hpp"

#include <cstdio>
#include <fstream>

#include "hankelspec/errors.hpp"

namespace hankelspec {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InterlacingViolation: return "InterlacingViolation";
        case ErrorCode::ZeroEntry: return "ZeroEntry";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ZeroSigma: return "ZeroSigma";
        case ErrorCode::ToleranceExceeded: return "ToleranceExceeded";
        case ErrorCode::NonGeneric: return "NonGeneric";
        case ErrorCode::PhaseInstability: return "PhaseInstability";
        case ErrorCode::VanishingPairing: return "VanishingPairing";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::DenominatorRootInDisc: return "DenominatorRootInDisc";
        case ErrorCode::NormalizationError: return "NormalizationError";
        case ErrorCode::Inconclusive: return "Inconclusive";
        case ErrorCode::NearPole: return "NearPole";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::TrivialKernelCase: return "TrivialKernelCase";
        case ErrorCode::TruncationTooShort: return "TruncationTooShort";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

} // namespace hankelspec

namespace hankelspec::io {

json complex_list_to_json(const std::vector<Complex>& v) {
    json arr = json::array();
    for (const Complex& z : v) arr.push_back(json::array({z.real(), z.imag()}));
    return arr;
}

std::vector<Complex> complex_list_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw Error(ErrorCode::BadInput, what + " must be an array");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& entry : j) {
        if (entry.is_number()) {
            out.emplace_back(entry.get<double>(), 0.0);
        } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() &&
                   entry[1].is_number()) {
            out.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        } else {
            throw Error(ErrorCode::BadInput,
                        what + " entries must be numbers or [re, im] pairs");
        }
    }
    return out;
}

std::vector<Complex> read_zeta_document(const json& doc) {
    if (!doc.contains("zeta"))
        throw Error(ErrorCode::BadInput, "spectral document lacks a \"zeta\" field");
    return complex_list_from_json(doc["zeta"], "zeta");
}

json write_zeta_document(const ZetaSequence& z) {
    return json{{"zeta", complex_list_to_json(z.entries())}};
}

SymbolCoefficients read_symbol_document(const json& doc) {
    if (!doc.contains("coefficients"))
        throw Error(ErrorCode::BadInput, "symbol document lacks a \"coefficients\" field");
    return SymbolCoefficients{complex_list_from_json(doc["coefficients"], "coefficients")};
}

json write_symbol_document(const SymbolCoefficients& c) {
    return json{{"coefficients", complex_list_to_json(c.coeffs)}};
}

RationalDocument read_rational_document(const json& doc) {
    if (!doc.contains("numer") || !doc.contains("denom"))
        throw Error(ErrorCode::BadInput, "rational document needs \"numer\" and \"denom\"");
    return {complex_list_from_json(doc["numer"], "numer"),
            complex_list_from_json(doc["denom"], "denom")};
}

json write_identity_report(const IdentityReport& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
        rows.push_back(json{{"identity", r.identity},
                            {"m", r.m},
                            {"p", r.p},
                            {"residual", r.residual},
                            {"boundary", r.boundary}});
    }
    return json{{"rows", rows},
                {"max_residual", rep.max_residual},
                {"max_boundary_residual", rep.max_boundary_residual},
                {"c_constant", rep.c_constant},
                {"sum_nu_sq", rep.sum_nu_sq},
                {"sum_kappa_sq", rep.sum_kappa_sq}};
}

json write_kernel_report(const KernelReport& rep) {
    json doc{{"case", to_string(rep.case_tag)},
             {"normalization", rep.normalization},
             {"kernel_relation", rep.kernel_relation},
             {"criteria",
              json{{"sum_nu_sq", rep.sum_nu_sq},
                   {"sum_nu_sq_over_rho_sq", rep.sum_nu_sq_over_rho_sq},
                   {"p_seq", rep.p_seq},
                   {"ratio_gap_partial_sums", rep.ratio_gap_partial_sums},
                   {"note", "triviality conditions involve genuine limits; finite data "
                            "reports trends only"}}}};
    if (rep.has_generator) {
        doc["generator"] = json{{"z_shifted", rep.generator_is_shifted},
                                {"coefficients", complex_list_to_json(rep.generator_coeffs)}};
    }
    return doc;
}

json write_rank_report(const RankReport& rep) {
    const char* pattern = rep.pattern == RankPattern::EvenV2N       ? "V(2N)"
                          : rep.pattern == RankPattern::OddV2N1     ? "V(2N-1)"
                                                                    : "not-finite-rank";
    return json{{"rank_h", rep.rank_h},
                {"rank_k", rep.rank_k},
                {"pattern", pattern},
                {"sizes_checked", rep.sizes_checked}};
}

json error_document(const std::string& code, const std::string& message, const json& context) {
    return json{{"code", code}, {"message", message}, {"context", context}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BadInput, "cannot open input file " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::BadInput, "invalid JSON in " + path + ": " + e.what());
    }
    return doc;
}

void save_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::BadInput, "cannot open output file " + path);
    out << doc.dump(2) << "\n";
}

void save_csv_file(const std::string& path, const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::BadInput, "cannot open output file " + path);
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    char buf[32];
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            out << (i ? "," : "") << buf;
        }
        out << "\n";
    }
}

} // namespace hankelspec::io
