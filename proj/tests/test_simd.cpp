#include <doctest.h>

#include <cmath>
#include <vector>

#include "mzv/simd/kernels.hpp"
#include "support.hpp"

namespace simd = mzv::simd;

namespace {

std::vector<double> random_positive(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> exponent(-300.0, 300.0);
    std::uniform_real_distribution<double> mantissa(1.0, 10.0);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = mantissa(rng) * std::pow(10.0, exponent(rng));
    }
    return v;
}

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("scalar kernels are always available") {
    CHECK(simd::isa_supported(simd::Isa::scalar));
    CHECK(std::string(simd::isa_name(simd::Isa::scalar)) == "scalar");
    CHECK(std::string(simd::isa_name(simd::Isa::avx2)) == "avx2");
    CHECK(simd::isa_supported(simd::detect_isa()));
}

TEST_CASE("active variant can be switched") {
    simd::Isa before = simd::active_isa();
    simd::set_active_isa(simd::Isa::scalar);
    CHECK(simd::active_isa() == simd::Isa::scalar);
    if (simd::isa_supported(simd::Isa::avx2)) {
        simd::set_active_isa(simd::Isa::avx2);
        CHECK(simd::active_isa() == simd::Isa::avx2);
    } else {
        CHECK_THROWS_AS(simd::set_active_isa(simd::Isa::avx2), std::invalid_argument);
    }
    simd::set_active_isa(before);
}

TEST_CASE("scalar log matches std::log") {
    auto rng = testing::make_rng(40);
    auto in = random_positive(rng, 1000);
    std::vector<double> out(in.size());
    simd::log_array(simd::Isa::scalar, in, out);
    for (std::size_t i = 0; i < in.size(); ++i) {
        CHECK(out[i] == std::log(in[i]));
    }
}

TEST_CASE("vector log matches the scalar reference") {
    if (!simd::isa_supported(simd::Isa::avx2)) {
        MESSAGE("avx2 unavailable, equivalence not exercised");
        return;
    }
    auto rng = testing::make_rng(41);
    for (int i = 0; i < testing::kPropertyCases; ++i) {
        std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 0, 37));  // odd sizes exercise the tail
        auto in = random_positive(rng, n);
        in.push_back(1.0);
        in.push_back(1.0 + 1e-15);
        in.push_back(0.5);
        std::vector<double> a(in.size());
        std::vector<double> b(in.size());
        simd::log_array(simd::Isa::scalar, in, a);
        simd::log_array(simd::Isa::avx2, in, b);
        for (std::size_t j = 0; j < in.size(); ++j) {
            CAPTURE(in[j]);
            CHECK(std::abs(a[j] - b[j]) <= 4e-16 * std::max(1.0, std::abs(a[j])));
        }
    }
}

TEST_CASE("inner triangle sums agree across variants") {
    if (!simd::isa_supported(simd::Isa::avx2)) {
        MESSAGE("avx2 unavailable, equivalence not exercised");
        return;
    }
    auto rng = testing::make_rng(42);
    std::uniform_real_distribution<double> unit(1e-6, 1.0 - 1e-6);
    for (int i = 0; i < testing::kPropertyCases; ++i) {
        std::size_t len = static_cast<std::size_t>(testing::uniform(rng, 1, 300));
        std::vector<double> offsets(len);
        std::vector<double> weights(len);
        for (std::size_t j = 0; j < len; ++j) {
            offsets[j] = unit(rng);
            weights[j] = unit(rng);
        }
        double outer = unit(rng);
        double outer_c = 1.0 - outer;
        double nlo = -std::log(outer);
        int n = static_cast<int>(testing::uniform(rng, 0, 6));
        double a = simd::triangle_inner_sum(simd::Isa::scalar, offsets, weights, outer, outer_c, nlo, n);
        double b = simd::triangle_inner_sum(simd::Isa::avx2, offsets, weights, outer, outer_c, nlo, n);
        CAPTURE(i);
        CHECK(std::abs(a - b) <= 1e-13 * std::abs(a));
    }
}

TEST_CASE("inner sum matches a direct evaluation") {
    std::vector<double> offsets{0.1, 0.5, 0.9};
    std::vector<double> weights{0.2, 0.3, 0.5};
    double outer = 0.7;
    double expected = 0.0;
    for (std::size_t j = 0; j < offsets.size(); ++j) {
        double y = (1.0 - outer) + outer * offsets[j];
        expected += weights[j] * std::pow(-std::log(outer) - std::log(y), 3) / y;
    }
    for (auto isa : {simd::Isa::scalar, simd::Isa::avx2}) {
        if (!simd::isa_supported(isa)) {
            continue;
        }
        double got = simd::triangle_inner_sum(isa, offsets, weights, outer, 1.0 - outer, -std::log(outer), 3);
        CHECK(got == doctest::Approx(expected).epsilon(1e-14));
    }
}

}  // TEST_SUITE
