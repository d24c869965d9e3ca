#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hankelspec/genfun.hpp"
#include "hankelspec/identities.hpp"
#include "hankelspec/kernel.hpp"
#include "hankelspec/rational.hpp"
#include "hankelspec/symbol.hpp"
#include "hankelspec/zeta.hpp"

namespace hankelspec::io {

using nlohmann::json;

// Documents carry complex numbers as [re, im] pairs of binary64 values; bare
// reals are accepted on input.
json complex_list_to_json(const std::vector<Complex>& v);
std::vector<Complex> complex_list_from_json(const json& j, const std::string& what);

// {"zeta": [[re,im], ...]} — raw entries; validation is the caller's job.
std::vector<Complex> read_zeta_document(const json& doc);
json write_zeta_document(const ZetaSequence& z);

// {"coefficients": [[re,im], ...]}
SymbolCoefficients read_symbol_document(const json& doc);
json write_symbol_document(const SymbolCoefficients& c);

// {"numer": [...], "denom": [...]}
struct RationalDocument {
    std::vector<Complex> numer;
    std::vector<Complex> denom;
};
RationalDocument read_rational_document(const json& doc);

json write_identity_report(const IdentityReport& rep);
json write_kernel_report(const KernelReport& rep);
json write_rank_report(const RankReport& rep);

// {"code": ..., "message": ..., "context": {...}}
json error_document(const std::string& code, const std::string& message,
                    const json& context = json::object());

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& doc);
void save_csv_file(const std::string& path, const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows);

} // namespace hankelspec::io
