#include <doctest.h>

#include "mzv/exact.hpp"
#include "mzv/mzv_index.hpp"

using mzv::MzvIndex;
using mzv::Rational;

TEST_SUITE("mzv") {

TEST_CASE("index validation") {
    CHECK_NOTHROW(MzvIndex({2}));
    CHECK_NOTHROW(MzvIndex({3, 1, 2}));
    CHECK_THROWS_AS(MzvIndex({}), std::invalid_argument);
    CHECK_THROWS_AS(MzvIndex({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(MzvIndex({3, 0}), std::invalid_argument);
    MzvIndex idx({3, 1, 2});
    CHECK(idx.weight() == 6);
    CHECK(idx.depth() == 3);
    CHECK_FALSE(idx.in_family());
    CHECK(idx.to_string() == "zeta(3,1,2)");
    CHECK(idx.to_latex() == "\\zeta(3,1,2)");
}

TEST_CASE("family_index examples") {
    CHECK(mzv::family_index(2, 0).parts() == std::vector<int>{2});
    CHECK(mzv::family_index(3, 1).parts() == std::vector<int>{3, 1});
    CHECK(mzv::family_index(2, 2).parts() == std::vector<int>{2, 1, 1});
    CHECK_THROWS_AS(mzv::family_index(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(mzv::family_index(2, -1), std::invalid_argument);
    MzvIndex f = mzv::family_index(5, 3);
    CHECK(f.in_family());
    CHECK(f.family_head() == 5);
    CHECK(f.family_ones() == 3);
}

TEST_CASE("dual_family examples") {
    CHECK(mzv::dual_family(2, 1) == MzvIndex({3}));
    CHECK(mzv::dual_family(3, 1) == MzvIndex({3, 1}));
    CHECK(mzv::dual_family(2, 2) == MzvIndex({4}));
    CHECK(mzv::dual_family(2, 0) == MzvIndex({2}));
}

TEST_CASE("theorem1_combination examples") {
    auto c0 = mzv::theorem1_combination(0);
    REQUIRE(c0.size() == 1);
    CHECK(c0.terms()[0].coefficient == Rational(1));
    CHECK(c0.terms()[0].index == MzvIndex({2}));

    auto c1 = mzv::theorem1_combination(1);
    REQUIRE(c1.size() == 2);
    CHECK(c1.terms()[0].index == MzvIndex({3}));
    CHECK(c1.terms()[1].index == MzvIndex({2, 1}));

    auto c2 = mzv::theorem1_combination(2);
    REQUIRE(c2.size() == 3);
    CHECK(c2.terms()[0].index == MzvIndex({4}));
    CHECK(c2.terms()[1].index == MzvIndex({3, 1}));
    CHECK(c2.terms()[2].index == MzvIndex({2, 1, 1}));
    for (const auto& t : c2.terms()) {
        CHECK(t.coefficient == Rational(2));
    }
    CHECK(c2.to_string() == "2·zeta(4) + 2·zeta(3,1) + 2·zeta(2,1,1)");
}

TEST_CASE("family weights and duality for n <= 20") {
    for (int n = 0; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(mzv::family_index(n - k + 2, k).weight() == n + 2);
            CHECK(mzv::dual_family(n - k + 2, k).weight() == n + 2);
        }
    }
}

TEST_CASE("dual_family is an involution") {
    for (int m = 2; m <= 22; ++m) {
        for (int k = 0; k <= 20; ++k) {
            MzvIndex d = mzv::dual_family(m, k);
            REQUIRE(d.in_family());
            CHECK(mzv::dual_family(d.family_head(), d.family_ones()) == mzv::family_index(m, k));
        }
    }
}

TEST_CASE("theorem1_combination shape") {
    for (int n = 0; n <= 20; ++n) {
        auto c = mzv::theorem1_combination(n);
        REQUIRE(c.size() == static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n; ++k) {
            const auto& t = c.terms()[static_cast<std::size_t>(k)];
            CHECK(t.coefficient == Rational(mzv::factorial(n)));
            CHECK(t.index == mzv::family_index(n - k + 2, k));
        }
    }
}

}  // TEST_SUITE
