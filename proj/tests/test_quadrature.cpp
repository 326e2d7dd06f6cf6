#include <doctest.h>

#include "mzv/kolbig.hpp"
#include "mzv/quadrature.hpp"
#include "support.hpp"

using mzv::EvalContext;
using mzv::HighPrec;
using mzv::Rational;

TEST_SUITE("quadrature") {

TEST_CASE("de_quad examples") {
    EvalContext ctx(35);
    HighPrec target = mzv::default_target(ctx);
    auto one = mzv::de_quad([&](const HighPrec&, const HighPrec&) { return HighPrec(1L, ctx.bits()); }, target, ctx);
    CHECK(testing::abs_diff(one.value, HighPrec(1L, ctx.bits())) <= 1e-30);

    auto moment = mzv::de_quad(
        [](const HighPrec& x, const HighPrec&) {
            HighPrec l = -log(x);
            return l * l * l * x * x;
        },
        target, ctx);
    CHECK(testing::abs_diff(moment.value, HighPrec(Rational(6, 81), ctx.bits())) <= 1e-25);

    auto z2 = mzv::de_quad([](const HighPrec& x, const HighPrec& xc) { return -log(x) / xc; }, target, ctx);
    CHECK(testing::abs_diff(z2.value, ctx.zeta(2)) <= 1e-25);
    CHECK(z2.levels_used >= 3);
    CHECK(z2.est_error < target);
}

TEST_CASE("moment identity for exponents up to 5") {
    EvalContext ctx(35);
    for (int n1 = 0; n1 <= 5; ++n1) {
        for (int l = 0; l <= 5; ++l) {
            auto q = mzv::moment_numeric(n1, l, ctx);
            mzv::BigInt denom = 1;
            for (int i = 0; i <= l; ++i) {
                denom *= n1 + 1;
            }
            Rational exact(mzv::factorial(l), denom);
            CAPTURE(n1);
            CAPTURE(l);
            CHECK(testing::abs_diff(q.value, HighPrec(exact, ctx.bits())) <= 1e-25);
        }
    }
}

TEST_CASE("non-convergence is reported") {
    EvalContext ctx(35);
    // 1/sqrt(x(1-x)) -> pi, but asking for 1e-200 at 35 digits cannot converge.
    auto f = [](const HighPrec& x, const HighPrec& xc) { return HighPrec(1L, x.precision()) / sqrt(x * xc); };
    try {
        (void)mzv::de_quad(f, mzv::pow10(-200, ctx.bits()), ctx, 4);
        FAIL("expected QuadratureError");
    } catch (const mzv::QuadratureError& e) {
        CHECK(e.kind() == mzv::QuadratureError::Kind::non_convergence);
        CHECK(e.last().levels_used == 5);  // levels 0..4
        CHECK(testing::abs_diff(e.last().value, mzv::pi(ctx.bits())) < 1e-10);
    }
}

TEST_CASE("non-finite integrand is reported") {
    EvalContext ctx(35);
    auto f = [](const HighPrec& x, const HighPrec&) {
        HighPrec out(x.precision());
        mpfr_set_nan(out.get());
        return out;
    };
    try {
        (void)mzv::de_quad(f, mzv::default_target(ctx), ctx);
        FAIL("expected QuadratureError");
    } catch (const mzv::QuadratureError& e) {
        CHECK(e.kind() == mzv::QuadratureError::Kind::non_finite);
    }
}

TEST_CASE("log-power integral examples") {
    EvalContext ctx(35);
    CHECK(testing::abs_diff(mzv::lemma1_numeric(0, 1, ctx).value, ctx.zeta(2)) <= 1e-25);
    CHECK(testing::abs_diff(mzv::lemma1_numeric(1, 1, ctx).value, ctx.zeta(3)) <= 1e-25);
    CHECK(testing::abs_diff(mzv::lemma1_numeric(1, 2, ctx).value, ctx.zeta(4) / 2L) <= 1e-25);
    CHECK_THROWS_AS(mzv::lemma1_numeric(1, 0, ctx), std::invalid_argument);
    CHECK_THROWS_AS(mzv::lemma1_numeric(-1, 1, ctx), std::invalid_argument);
}

TEST_CASE("log-power integrals match the exact composition sum") {
    EvalContext ctx(35);
    for (int l = 1; l <= 7; ++l) {
        for (int k = 0; k + l <= 7; ++k) {
            auto q = mzv::lemma1_numeric(k, l, ctx);
            HighPrec exact = mzv::eval_poly(mzv::kolbig_integral(k, l), ctx);
            CAPTURE(k);
            CAPTURE(l);
            CHECK(testing::abs_diff(q.value, exact) <= 1e-25);
        }
    }
}

TEST_CASE("single-integral triangle route") {
    EvalContext ctx(35);
    CHECK(testing::abs_diff(mzv::triangle_semi(0, ctx).value, ctx.zeta(2)) <= 1e-25);
    CHECK(testing::abs_diff(mzv::triangle_semi(1, ctx).value, ctx.zeta(3) * 2L) <= 1e-25);
    for (int n = 0; n <= 6; ++n) {
        auto q = mzv::triangle_semi(n, ctx);
        HighPrec exact = mzv::eval_poly(mzv::reduce_triangle(n), ctx);
        CAPTURE(n);
        CHECK(testing::abs_diff(q.value, exact) <= 1e-25);
        CHECK(abs(q.value - exact) <= q.est_error + ctx.tolerance(30));
    }
}

TEST_CASE("iterated double-integral route") {
    EvalContext ctx(35);
    CHECK(testing::abs_diff(mzv::triangle_2d(0, ctx).value, ctx.zeta(2)) <= 1e-8);
    HighPrec i2 = ctx.zeta(4) * 9L / 2L;
    CHECK(testing::abs_diff(mzv::triangle_2d(2, ctx).value, i2) <= 1e-6);
    for (int n = 0; n <= 4; ++n) {
        auto q = mzv::triangle_2d(n, ctx);
        HighPrec exact = mzv::eval_poly(mzv::reduce_triangle(n), ctx);
        CAPTURE(n);
        CHECK(testing::abs_diff(q.value, exact) <= 1e-6);
    }
}

TEST_CASE("both routes agree within their error estimates") {
    EvalContext ctx(35);
    for (int n = 0; n <= 4; ++n) {
        auto semi = mzv::triangle_semi(n, ctx);
        auto twod = mzv::triangle_2d(n, ctx);
        CAPTURE(n);
        CHECK(abs(semi.value - twod.value) <= semi.est_error + twod.est_error);
    }
}

TEST_CASE("swapping the coordinates changes the 2d result by less than its estimate") {
    EvalContext ctx(35);
    for (int n = 0; n <= 4; ++n) {
        auto xy = mzv::triangle_2d(n, ctx, 1e-6, mzv::Orientation::xy);
        auto yx = mzv::triangle_2d(n, ctx, 1e-6, mzv::Orientation::yx);
        CAPTURE(n);
        CHECK(abs(xy.value - yx.value) <= max(xy.est_error, yx.est_error));
    }
}

}  // TEST_SUITE
