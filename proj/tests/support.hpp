#pragma once

#include <random>
#include <vector>

#include "mzv/exact.hpp"
#include "mzv/highprec.hpp"
#include "mzv/zeta_ring.hpp"

namespace testing {

constexpr int kPropertyCases = 200;

// Fixed seeds keep every run identical; failures print the case number.
inline std::mt19937_64 make_rng(std::uint64_t salt) { return std::mt19937_64(0x6d7a76ULL * 1000003ULL + salt); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline mzv::Rational random_rational(std::mt19937_64& rng, long bound = 50) {
    long num = uniform(rng, -bound, bound);
    long den = uniform(rng, 1, bound);
    return mzv::Rational(num, den);
}

// Random zeta monomial of exactly the given weight (weight 0 gives the unit).
inline mzv::ZetaMonomial random_monomial_of_weight(std::mt19937_64& rng, int weight) {
    std::vector<int> args;
    int left = weight;
    while (left >= 2) {
        int s = static_cast<int>(uniform(rng, 2, left));
        if (left - s == 1) {
            s = left;  // a leftover 1 cannot be a zeta argument
        }
        args.push_back(s);
        left -= s;
    }
    return mzv::ZetaMonomial(std::move(args));
}

// Homogeneous polynomial of the given weight (>= 2) with up to `terms` terms.
inline mzv::ZetaPoly random_homogeneous(std::mt19937_64& rng, int weight, int terms = 4) {
    mzv::ZetaPoly p;
    int count = static_cast<int>(uniform(rng, 1, terms));
    for (int i = 0; i < count; ++i) {
        p.add_term(random_monomial_of_weight(rng, weight), random_rational(rng, 20));
    }
    return p;
}

// Mixed-weight polynomial with small arguments, unit term allowed.
inline mzv::ZetaPoly random_poly(std::mt19937_64& rng, int terms = 4) {
    mzv::ZetaPoly p;
    int count = static_cast<int>(uniform(rng, 0, terms));
    for (int i = 0; i < count; ++i) {
        int w = static_cast<int>(uniform(rng, 0, 8));
        if (w == 1) {
            w = 0;
        }
        p.add_term(random_monomial_of_weight(rng, w), random_rational(rng, 20));
    }
    return p;
}

inline double abs_diff(const mzv::HighPrec& a, const mzv::HighPrec& b) { return abs(a - b).to_double(); }

}  // namespace testing
