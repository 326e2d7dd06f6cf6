#include "mzv/records.hpp"

#include <sstream>
#include <stdexcept>

namespace mzv {

Json poly_to_json(const ZetaPoly& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        out.push_back({{"coeff", c.to_fraction_string()}, {"zetas", m.args()}});
    }
    return out;
}

ZetaPoly poly_from_json(const Json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("poly_from_json: expected an array of terms");
    }
    ZetaPoly out;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("zetas") || !term["coeff"].is_string() ||
            !term["zetas"].is_array()) {
            throw std::invalid_argument("poly_from_json: term needs string 'coeff' and array 'zetas'");
        }
        std::vector<int> args;
        for (const auto& s : term["zetas"]) {
            if (!s.is_number_integer()) {
                throw std::invalid_argument("poly_from_json: zeta arguments must be integers");
            }
            args.push_back(s.get<int>());
        }
        out.add_term(ZetaMonomial(std::move(args)), Rational::parse(term["coeff"].get<std::string>()));
    }
    return out;
}

Json combination_to_json(const MzvCombination& c) {
    Json out = Json::array();
    for (const auto& t : c.terms()) {
        out.push_back({{"coeff", t.coefficient.to_fraction_string()}, {"index", t.index.parts()}});
    }
    return out;
}

MzvCombination combination_from_json(const Json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("combination_from_json: expected an array");
    }
    MzvCombination out;
    for (const auto& t : j) {
        out.add(Rational::parse(t.at("coeff").get<std::string>()), MzvIndex(t.at("index").get<std::vector<int>>()));
    }
    return out;
}

std::string decimal_string(const HighPrec& x) { return x.to_string(x.decimal_digits()); }

Json OutputRecord::to_json() const {
    Json j;
    j["kind"] = kind;
    j["payload"] = payload;
    j["metadata"] = metadata;
    return j;
}

OutputRecord OutputRecord::from_json(const Json& j) {
    OutputRecord r;
    r.kind = j.at("kind").get<std::string>();
    r.payload = j.at("payload");
    r.metadata = j.at("metadata");
    return r;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "text") {
        return OutputFormat::text;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "latex") {
        return OutputFormat::latex;
    }
    throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::string index_text(const Json& parts, bool latex) {
    MzvIndex idx(parts.get<std::vector<int>>());
    return latex ? idx.to_latex() : idx.to_string();
}

std::string poly_text(const Json& terms, bool latex) {
    ZetaPoly p = poly_from_json(terms);
    return latex ? p.to_latex() : p.to_string();
}

std::string str(const Json& j) { return j.get<std::string>(); }

void render_reduction(std::ostream& os, const Json& p, bool latex) {
    if (latex) {
        os << "\\[ " << index_text(p["index"], true) << " = " << poly_text(p["terms"], true) << " \\]\n";
        os << "\\[ \\approx " << str(p["numeric"]) << " \\]\n";
        return;
    }
    os << index_text(p["index"], false) << " = " << poly_text(p["terms"], false) << "\n";
    os << "method: " << str(p["method"]) << (p["normalized"].get<bool>() ? " (even zetas normalized)" : "") << "\n";
    os << "weight: " << p["weight"].get<int>() << "\n";
    os << "numeric: " << str(p["numeric"]) << "\n";
}

void render_triangle(std::ostream& os, const Json& p, bool latex) {
    int n = p["n"].get<int>();
    MzvCombination comb = combination_from_json(p["combination"]);
    if (latex) {
        os << "\\[ I_{" << n << "} = " << comb.to_latex() << " \\]\n";
        os << "\\[ I_{" << n << "} = " << poly_text(p["reduced"], true) << " = " << poly_text(p["terms"], true)
           << " = " << poly_text(p["compact"], true) << " \\]\n";
        os << "\\[ I_{" << n << "} \\approx " << str(p["numeric"]) << " \\]\n";
        return;
    }
    os << "I_" << n << " = " << comb.to_string() << "\n";
    os << "reduced: " << poly_text(p["reduced"], false) << "\n";
    os << "normalized: " << poly_text(p["terms"], false) << "\n";
    os << "compact: " << poly_text(p["compact"], false) << "\n";
    os << "weight: " << p["weight"].get<int>() << "\n";
    os << "numeric: " << str(p["numeric"]) << "\n";
}

void render_integral(std::ostream& os, const Json& p, bool latex) {
    int n = p["n"].get<int>();
    if (latex) {
        os << "\\[ I_{" << n << "} \\approx " << str(p["numeric"]) << " \\quad (\\pm " << str(p["error_estimate"])
           << ") \\]\n";
        os << "\\[ " << poly_text(p["terms"], true) << " = " << str(p["reference"]) << " \\]\n";
        os << "\\[ |\\Delta| = " << str(p["difference"]) << " \\]\n";
        return;
    }
    os << "I_" << n << " (" << str(p["method"]) << ") = " << str(p["numeric"]) << "\n";
    os << "error estimate: " << str(p["error_estimate"]) << "\n";
    os << "levels: " << p["levels_used"].get<int>() << "\n";
    os << "reference: " << poly_text(p["terms"], false) << " = " << str(p["reference"]) << "\n";
    os << "difference: " << str(p["difference"]) << "\n";
}

void render_eval(std::ostream& os, const Json& p, bool latex) {
    if (latex) {
        os << "\\[ " << index_text(p["index"], true) << " \\approx " << str(p["numeric"]) << " \\quad (\\text{tail} \\le "
           << str(p["error_estimate"]) << ") \\]\n";
        os << "\\[ " << poly_text(p["terms"], true) << " = " << str(p["reference"]) << " \\]\n";
        return;
    }
    os << index_text(p["index"], false) << " partial sum (N=" << p["sum_limit"].get<long>()
       << ") = " << str(p["numeric"]) << "\n";
    os << "tail bound: " << str(p["error_estimate"]) << "\n";
    os << "reduction: " << poly_text(p["terms"], false) << " = " << str(p["reference"]) << "\n";
    os << "difference: " << str(p["difference"]) << "\n";
}

void render_verify(std::ostream& os, const Json& p, bool latex) {
    if (latex) {
        os << "\\begin{tabular}{lll}\n";
        for (const auto& c : p["checks"]) {
            os << "\\verb|" << str(c["name"]) << "| & " << (c["passed"].get<bool>() ? "pass" : "FAIL") << " & "
               << (c["flagged"].get<bool>() ? "flagged" : "") << " \\\\\n";
        }
        os << "\\end{tabular}\n";
        return;
    }
    for (const auto& c : p["checks"]) {
        os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << str(c["name"]);
        if (c["flagged"].get<bool>()) {
            os << " [flagged]";
        }
        os << "  " << str(c["detail"]) << "\n";
    }
    const auto& s = p["summary"];
    os << s["total"].get<int>() << " checks, " << s["failed"].get<int>() << " failed, " << s["flagged"].get<int>()
       << " flagged\n";
}

}  // namespace

std::string render(const OutputRecord& record, OutputFormat format) {
    if (format == OutputFormat::json) {
        return record.to_json().dump(2) + "\n";
    }
    const bool latex = format == OutputFormat::latex;
    std::ostringstream os;
    if (latex) {
        os << "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n";
    }
    const Json& p = record.payload;
    if (record.kind == "reduction") {
        render_reduction(os, p, latex);
    } else if (record.kind == "triangle") {
        render_triangle(os, p, latex);
    } else if (record.kind == "integral") {
        render_integral(os, p, latex);
    } else if (record.kind == "eval") {
        render_eval(os, p, latex);
    } else if (record.kind == "verify-report") {
        render_verify(os, p, latex);
    } else {
        throw std::invalid_argument("render: unknown record kind '" + record.kind + "'");
    }
    if (latex) {
        os << "\\end{document}\n";
    }
    return os.str();
}

}  // namespace mzv
