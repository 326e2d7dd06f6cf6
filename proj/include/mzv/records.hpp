#pragma once

#include <string>

#include <json.hpp>

#include "mzv/highprec.hpp"
#include "mzv/mzv_index.hpp"
#include "mzv/zeta_ring.hpp"

namespace mzv {

using Json = nlohmann::ordered_json;

/// [{"coeff": "p/q", "zetas": [s1, s2, ...]}, ...], zetas descending, terms
/// in ascending monomial order.
Json poly_to_json(const ZetaPoly& p);

/// Inverse of poly_to_json. Accepts "p/q" or "p" coefficients. Throws
/// std::invalid_argument on malformed input.
ZetaPoly poly_from_json(const Json& j);

/// [{"coeff": "p/q", "index": [s1, ..., sl]}, ...]
Json combination_to_json(const MzvCombination& c);
MzvCombination combination_from_json(const Json& j);

/// Full-precision decimal string (all digits the value's precision holds).
std::string decimal_string(const HighPrec& x);

/// One command result. `kind` is one of reduction, triangle, eval,
/// integral, verify-report. Rendering to text or LaTeX works from the same
/// payload, so all formats carry the same mathematical content.
struct OutputRecord {
    std::string kind;
    Json payload = Json::object();
    Json metadata = Json::object();

    Json to_json() const;
    static OutputRecord from_json(const Json& j);
};

enum class OutputFormat { text, json, latex };

OutputFormat parse_format(const std::string& name);

std::string render(const OutputRecord& record, OutputFormat format);

}  // namespace mzv
