#include <doctest.h>

#include "mzv/commands.hpp"
#include "mzv/kolbig.hpp"
#include "mzv/records.hpp"
#include "support.hpp"

using mzv::Json;
using mzv::Rational;
using mzv::ZetaPoly;

namespace {

void check_schema_core(const Json& j) {
    REQUIRE(j.contains("kind"));
    REQUIRE(j.contains("payload"));
    REQUIRE(j.contains("metadata"));
    const Json& p = j["payload"];
    CHECK(p["weight"].is_number_integer());
    CHECK(p["numeric"].is_string());
    CHECK(p["error_estimate"].is_string());
    REQUIRE(p["terms"].is_array());
    for (const auto& t : p["terms"]) {
        CHECK(t["coeff"].is_string());
        CHECK(t["coeff"].get<std::string>().find('/') != std::string::npos);
        CHECK(t["zetas"].is_array());
    }
    CHECK(j["metadata"]["precision"].is_number_integer());
    CHECK(j["metadata"]["method"].is_string());
    CHECK(j["metadata"]["elapsed_ms"].is_number());
}

}  // namespace

TEST_SUITE("records") {

TEST_CASE("polynomial serialization shape") {
    ZetaPoly p = 36 * ZetaPoly::zeta(5) - 12 * ZetaPoly::zeta(2) * ZetaPoly::zeta(3);
    Json j = mzv::poly_to_json(p);
    REQUIRE(j.size() == 2);
    // Ascending monomial order: same weight, so [3,2] < [5].
    CHECK(j[0]["coeff"] == "-12/1");
    CHECK(j[0]["zetas"] == Json::array({3, 2}));
    CHECK(j[1]["coeff"] == "36/1");
    CHECK(j[1]["zetas"] == Json::array({5}));
}

TEST_CASE("polynomial JSON round trip") {
    auto rng = testing::make_rng(50);
    for (int i = 0; i < testing::kPropertyCases; ++i) {
        ZetaPoly p = testing::random_poly(rng, 6);
        Json j = mzv::poly_to_json(p);
        ZetaPoly back = mzv::poly_from_json(Json::parse(j.dump()));
        CAPTURE(p.to_string());
        CHECK(back == p);
    }
}

TEST_CASE("malformed polynomial JSON is rejected") {
    CHECK_THROWS_AS(mzv::poly_from_json(Json::object()), std::invalid_argument);
    CHECK_THROWS_AS(mzv::poly_from_json(Json::parse(R"([{"coeff": 2, "zetas": [2]}])")), std::invalid_argument);
    CHECK_THROWS_AS(mzv::poly_from_json(Json::parse(R"([{"coeff": "1/2", "zetas": [1]}])")),
                    std::invalid_argument);
    CHECK_THROWS_AS(mzv::poly_from_json(Json::parse(R"([{"coeff": "1/0", "zetas": [2]}])")),
                    std::invalid_argument);
}

TEST_CASE("combination JSON round trip") {
    for (int n = 0; n <= 8; ++n) {
        auto c = mzv::theorem1_combination(n);
        auto back = mzv::combination_from_json(Json::parse(mzv::combination_to_json(c).dump()));
        REQUIRE(back.size() == c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(back.terms()[i].coefficient == c.terms()[i].coefficient);
            CHECK(back.terms()[i].index == c.terms()[i].index);
        }
    }
}

TEST_CASE("output records round trip and follow the schema") {
    mzv::EvalContext ctx(35, 2000);
    std::vector<mzv::OutputRecord> records{
        mzv::cmd_reduce(3, 1, mzv::ReduceMethod::kolbig, true, ctx),
        mzv::cmd_reduce(4, 2, mzv::ReduceMethod::genfunc, false, ctx),
        mzv::cmd_triangle(3, ctx),
        mzv::cmd_integrate(1, mzv::IntegrationMethod::semi, ctx),
        mzv::cmd_integrate(2, mzv::IntegrationMethod::two_d, ctx),
        mzv::cmd_eval(2, 1, ctx),
    };
    for (const auto& r : records) {
        Json j = r.to_json();
        CAPTURE(r.kind);
        check_schema_core(j);
        auto back = mzv::OutputRecord::from_json(Json::parse(j.dump()));
        CHECK(back.to_json() == j);
        // Reals are kept as full-precision decimal strings.
        mzv::HighPrec v(j["payload"]["numeric"].get<std::string>(), ctx.bits());
        CHECK(v.is_finite());
    }
}

TEST_CASE("reduction payload content") {
    mzv::EvalContext ctx(35);
    auto r = mzv::cmd_reduce(3, 1, mzv::ReduceMethod::kolbig, true, ctx);
    CHECK(r.kind == "reduction");
    CHECK(mzv::poly_from_json(r.payload["terms"]) == Rational(1, 10) * ZetaPoly::zeta(2) * ZetaPoly::zeta(2));
    CHECK(r.payload["index"] == Json::array({3, 1}));
    CHECK(r.payload["normalized"] == true);
    mzv::HighPrec v(r.payload["numeric"].get<std::string>(), ctx.bits());
    CHECK(testing::abs_diff(v, ctx.zeta(4) / 4L) <= 1e-33);
    CHECK_THROWS_AS(mzv::cmd_reduce(1, 0, mzv::ReduceMethod::kolbig, false, ctx), std::invalid_argument);
    CHECK_THROWS_AS(mzv::cmd_reduce(8, 5, mzv::ReduceMethod::genfunc, false, ctx), std::invalid_argument);
}

TEST_CASE("text and JSON carry the same content") {
    mzv::EvalContext ctx(35);
    auto r = mzv::cmd_triangle(2, ctx);
    std::string text = mzv::render(r, mzv::OutputFormat::text);
    CHECK(text.find("2·zeta(4) + 2·zeta(3,1) + 2·zeta(2,1,1)") != std::string::npos);
    CHECK(text.find("(9/2)·zeta(4)") != std::string::npos);
    CHECK(text.find("(9/5)·zeta(2)^2") != std::string::npos);
    CHECK(text.find(r.payload["numeric"].get<std::string>()) != std::string::npos);
    std::string latex = mzv::render(r, mzv::OutputFormat::latex);
    CHECK(latex.find("\\documentclass{article}") == 0);
    CHECK(latex.find("\\frac{9}{2} \\zeta(4)") != std::string::npos);
    CHECK(latex.find("\\end{document}") != std::string::npos);
}

TEST_CASE("format names") {
    CHECK(mzv::parse_format("json") == mzv::OutputFormat::json);
    CHECK(mzv::parse_format("latex") == mzv::OutputFormat::latex);
    CHECK_THROWS_AS(mzv::parse_format("xml"), std::invalid_argument);
}

}  // TEST_SUITE
