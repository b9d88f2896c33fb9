#include "hodgemod/document.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "hodgemod/errors.hpp"
#include "hodgemod/serialize.hpp"

namespace hodgemod {

namespace {

std::string latex_polynomial(const std::vector<Int>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        const Int& c = coeffs[e];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) os << mag.str();
        if (e >= 1) {
            os << "t";
            if (e >= 2) os << "^{" << e << "}";
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string betti_bracket_list(const std::vector<Int>& betti) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < betti.size(); ++k) {
        if (k > 0) os << ", ";
        os << betti[k].str();
    }
    os << "]";
    return os.str();
}

}  // namespace

OutputDocument make_document(const HodgeReport& rep) {
    OutputDocument doc;
    doc.n = rep.n;
    doc.d = rep.d;
    doc.g = rep.g;
    doc.variant = rep.variant;
    doc.dim_complex = rep.dim_complex;
    doc.hodge_terms = rep.hodge_terms;
    doc.betti = rep.betti;
    doc.chi_coeffs = rep.chi.coefficients_upto(rep.chi.degree() < 0 ? -1 : rep.chi.degree());
    doc.euler = rep.euler;
    doc.signature = rep.signature;
    doc.cap_used = rep.cap_used;
    return doc;
}

std::string render_json(const OutputDocument& doc, DocumentView view) {
    nlohmann::ordered_json j;
    j["schema_version"] = doc.schema_version;
    j["query"] = {{"n", doc.n}, {"d", doc.d}, {"g", doc.g}, {"variant", variant_name(doc.variant)}};
    if (view == DocumentView::all) j["dim_complex"] = doc.dim_complex;
    if (view == DocumentView::all) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& t : doc.hodge_terms) {
            terms.push_back({{"p", t.p}, {"q", t.q}, {"value", int_to_string(t.h)}});
        }
        j["hodge_terms"] = std::move(terms);
    }
    if (view == DocumentView::all || view == DocumentView::betti_only) {
        j["betti"] = coefficients_to_strings(doc.betti);
    }
    if (view == DocumentView::all || view == DocumentView::chi_only) {
        j["chi_coeffs"] = coefficients_to_strings(doc.chi_coeffs);
    }
    if (view == DocumentView::all) {
        j["euler"] = doc.euler.convert_to<long long>();
        j["signature"] = doc.signature.convert_to<long long>();
    }
    j["cap_used"] = doc.cap_used;
    return j.dump(2) + "\n";
}

std::string render_text(const OutputDocument& doc, DocumentView view) {
    std::ostringstream os;
    if (view == DocumentView::all) {
        for (const auto& t : doc.hodge_terms) {
            os << "h[" << t.p << "][" << t.q << "] = " << t.h.str() << "\n";
        }
    }
    if (view == DocumentView::all || view == DocumentView::betti_only) {
        os << "betti = " << betti_bracket_list(doc.betti) << "\n";
    }
    if (view == DocumentView::all || view == DocumentView::chi_only) {
        os << "chi = " << UniPoly::from_coefficients(doc.chi_coeffs).str() << "\n";
    }
    return os.str();
}

std::string render_latex(const OutputDocument& doc, DocumentView view) {
    std::ostringstream os;
    if (view == DocumentView::all) {
        // Hodge diamond: row j = p + q, column offset p - q.
        const int dim = doc.dim_complex;
        std::map<std::pair<int, int>, const Int*> lookup;
        for (const auto& t : doc.hodge_terms) lookup[{t.p, t.q}] = &t.h;
        os << "% Hodge diamond of the " << variant_name(doc.variant) << " space, n=" << doc.n
           << ", d=" << doc.d << ", g=" << doc.g << "\n";
        os << "\\begin{tabular}{" << std::string(static_cast<std::size_t>(2 * dim + 1), 'c')
           << "}\n";
        for (int j = 0; j <= 2 * dim; ++j) {
            for (int col = 0; col <= 2 * dim; ++col) {
                if (col > 0) os << " & ";
                // column col holds (p, q) with p - q = col - dim, p + q = j
                const int twice_p = j + col - dim;
                if (twice_p >= 0 && twice_p % 2 == 0) {
                    const int p = twice_p / 2;
                    const int q = j - p;
                    auto it = (q >= 0) ? lookup.find({p, q}) : lookup.end();
                    if (it != lookup.end()) os << "$" << it->second->str() << "$";
                }
            }
            os << " \\\\\n";
        }
        os << "\\end{tabular}\n";
    }
    if (view == DocumentView::all || view == DocumentView::betti_only) {
        os << "% Betti numbers b_0 .. b_{2N}\n";
        os << "$[" << [&] {
            std::ostringstream row;
            for (std::size_t k = 0; k < doc.betti.size(); ++k) {
                if (k > 0) row << ",\\, ";
                row << doc.betti[k].str();
            }
            return row.str();
        }() << "]$\n";
    }
    if (view == DocumentView::all || view == DocumentView::chi_only) {
        os << "$\\chi(t) = " << latex_polynomial(doc.chi_coeffs) << "$\n";
    }
    return os.str();
}

std::string render(const OutputDocument& doc, OutputFormat format, DocumentView view) {
    switch (format) {
        case OutputFormat::json:
            return render_json(doc, view);
        case OutputFormat::text:
            return render_text(doc, view);
        case OutputFormat::latex:
            return render_latex(doc, view);
    }
    throw Error("unknown output format");
}

OutputDocument parse_document_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("document parse failed: ") + e.what());
    }
    if (!j.is_object()) throw Error("document must be a JSON object");

    OutputDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != "1") throw Error("unsupported schema_version");
    const auto& q = j.at("query");
    doc.n = q.at("n").get<int>();
    doc.d = q.at("d").get<long long>();
    doc.g = q.at("g").get<int>();
    auto variant = variant_from_name(q.at("variant").get<std::string>());
    if (!variant) throw Error("unknown variant in document");
    doc.variant = *variant;
    doc.dim_complex = j.at("dim_complex").get<int>();
    for (const auto& entry : j.at("hodge_terms")) {
        doc.hodge_terms.push_back({entry.at("p").get<int>(), entry.at("q").get<int>(),
                                   int_from_string(entry.at("value").get<std::string>())});
    }
    doc.betti = coefficients_from_strings(j.at("betti").get<std::vector<std::string>>());
    doc.chi_coeffs = coefficients_from_strings(j.at("chi_coeffs").get<std::vector<std::string>>());
    doc.euler = Int(j.at("euler").get<long long>());
    doc.signature = Int(j.at("signature").get<long long>());
    doc.cap_used = j.at("cap_used").get<int>();
    return doc;
}

HodgeReport to_report(const OutputDocument& doc) {
    HodgeReport rep;
    rep.n = doc.n;
    rep.d = doc.d;
    rep.g = doc.g;
    rep.variant = doc.variant;
    rep.dim_complex = doc.dim_complex;
    rep.hodge_terms = doc.hodge_terms;
    rep.betti = doc.betti;
    rep.chi = UniPoly::from_coefficients(doc.chi_coeffs);
    rep.euler = doc.euler;
    rep.signature = doc.signature;
    rep.cap_used = doc.cap_used;
    return rep;
}

}  // namespace hodgemod
