#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "hodgemod/biseries.hpp"
#include "hodgemod/unipoly.hpp"

namespace hodgemod {

/// Canonical term array: [{"p": i, "q": j, "value": "<decimal>"}, ...]
/// sorted by (p+q, p). Coefficients always travel as decimal strings;
/// Hodge numbers outgrow native JSON numbers for modest genus.
nlohmann::ordered_json terms_to_json(const BiSeries& s);

/// Rebuilds a series from a term array; throws Error on malformed input
/// (bad types, zero or unparsable coefficients, exponents beyond the cap).
BiSeries biseries_from_json(const nlohmann::json& arr, int cap);

std::vector<std::string> coefficients_to_strings(const std::vector<Int>& coeffs);
std::vector<Int> coefficients_from_strings(const std::vector<std::string>& strs);

/// One memo entry on disk: a header identifying the key plus the term
/// array of the cached series.
void write_series_cache_file(const std::filesystem::path& path, int n, long long d_residue,
                             int g, int cap, const BiSeries& value);

/// Returns the cached series only if the file parses and its header matches
/// the requested key exactly; any mismatch or corruption yields nullopt.
std::optional<BiSeries> read_series_cache_file(const std::filesystem::path& path, int n,
                                               long long d_residue, int g, int cap);

}  // namespace hodgemod
