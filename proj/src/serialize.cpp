#include "hodgemod/serialize.hpp"

#include <fstream>

#include "hodgemod/errors.hpp"

namespace hodgemod {

namespace {

constexpr const char* kCacheFormatVersion = "1";

}  // namespace

nlohmann::ordered_json terms_to_json(const BiSeries& s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& t : s.terms()) {
        nlohmann::ordered_json entry;
        entry["p"] = t.i;
        entry["q"] = t.j;
        entry["value"] = int_to_string(t.c);
        arr.push_back(std::move(entry));
    }
    return arr;
}

BiSeries biseries_from_json(const nlohmann::json& arr, int cap) {
    if (!arr.is_array()) throw Error("term list must be a JSON array");
    std::vector<BiSeries::Term> terms;
    terms.reserve(arr.size());
    for (const auto& entry : arr) {
        if (!entry.is_object() || !entry.contains("p") || !entry.contains("q") ||
            !entry.contains("value")) {
            throw Error("term entry must have p, q, value");
        }
        if (!entry["p"].is_number_integer() || !entry["q"].is_number_integer() ||
            !entry["value"].is_string()) {
            throw Error("term entry has wrong field types");
        }
        Int c = int_from_string(entry["value"].get<std::string>());
        if (c == 0) throw Error("term entry stores a zero coefficient");
        terms.push_back({entry["p"].get<int>(), entry["q"].get<int>(), std::move(c)});
    }
    return BiSeries::from_terms(std::move(terms), cap);
}

std::vector<std::string> coefficients_to_strings(const std::vector<Int>& coeffs) {
    std::vector<std::string> out;
    out.reserve(coeffs.size());
    for (const Int& c : coeffs) out.push_back(int_to_string(c));
    return out;
}

std::vector<Int> coefficients_from_strings(const std::vector<std::string>& strs) {
    std::vector<Int> out;
    out.reserve(strs.size());
    for (const std::string& s : strs) out.push_back(int_from_string(s));
    return out;
}

void write_series_cache_file(const std::filesystem::path& path, int n, long long d_residue,
                             int g, int cap, const BiSeries& value) {
    nlohmann::ordered_json doc;
    doc["format_version"] = kCacheFormatVersion;
    doc["n"] = n;
    doc["d_residue"] = d_residue;
    doc["g"] = g;
    doc["cap"] = cap;
    doc["terms"] = terms_to_json(value);

    // write-then-rename so a torn write never leaves a half file behind
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open cache file for writing: " + tmp.string());
        out << doc.dump(2) << "\n";
        if (!out) throw Error("cache write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::optional<BiSeries> read_series_cache_file(const std::filesystem::path& path, int n,
                                               long long d_residue, int g, int cap) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    try {
        const nlohmann::json doc = nlohmann::json::parse(in);
        if (!doc.is_object()) return std::nullopt;
        if (doc.value("format_version", std::string()) != kCacheFormatVersion) return std::nullopt;
        if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int>() != n) {
            return std::nullopt;
        }
        if (!doc.contains("d_residue") || !doc["d_residue"].is_number_integer() ||
            doc["d_residue"].get<long long>() != d_residue) {
            return std::nullopt;
        }
        if (!doc.contains("g") || !doc["g"].is_number_integer() || doc["g"].get<int>() != g) {
            return std::nullopt;
        }
        if (!doc.contains("cap") || !doc["cap"].is_number_integer() ||
            doc["cap"].get<int>() != cap) {
            return std::nullopt;
        }
        if (!doc.contains("terms")) return std::nullopt;
        return biseries_from_json(doc["terms"], cap);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace hodgemod
