#pragma once

#include <string>
#include <vector>

#include "hodgemod/moduli.hpp"

namespace hodgemod {

enum class OutputFormat { json, text, latex };

/// Which fields a rendering carries: the whole report, or just the chi
/// polynomial / Betti list (the chi and betti subcommands).
enum class DocumentView { all, chi_only, betti_only };

/// Serialization-ready form of a HodgeReport. Coefficients are decimal
/// strings so arbitrarily large Hodge numbers survive JSON untouched.
struct OutputDocument {
    std::string schema_version = "1";
    int n = 0;
    long long d = 0;
    int g = 0;
    Variant variant = Variant::full;
    int dim_complex = 0;
    std::vector<HodgeTerm> hodge_terms;
    std::vector<Int> betti;
    std::vector<Int> chi_coeffs;  // dense, index = power of t
    Int euler;
    Int signature;
    int cap_used = 0;

    bool operator==(const OutputDocument&) const = default;
};

OutputDocument make_document(const HodgeReport& rep);

/// Byte-stable: canonical key order, canonical term order, fixed layout.
std::string render_json(const OutputDocument& doc, DocumentView view = DocumentView::all);
std::string render_text(const OutputDocument& doc, DocumentView view = DocumentView::all);
std::string render_latex(const OutputDocument& doc, DocumentView view = DocumentView::all);
std::string render(const OutputDocument& doc, OutputFormat format,
                   DocumentView view = DocumentView::all);

/// Inverse of render_json for full documents; throws Error on malformed
/// input.
OutputDocument parse_document_json(const std::string& text);

/// Rebuilds the exact HodgeReport a document was made from.
HodgeReport to_report(const OutputDocument& doc);

}  // namespace hodgemod
