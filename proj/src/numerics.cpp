#include "mzv/numerics.hpp"

#include <cmath>
#include <string>

#include "mzv/exact.hpp"

namespace mzv {

EvalContext::EvalContext(int digits, long sum_limit)
    : digits_(digits), bits_(bits_for_digits(digits)), sum_limit_(sum_limit), cache_(std::make_shared<Cache>()) {
    if (digits < 15) {
        throw std::invalid_argument("EvalContext: precision must be at least 15 digits");
    }
    if (sum_limit < 1) {
        throw std::invalid_argument("EvalContext: sum limit must be positive");
    }
}

HighPrec EvalContext::zeta(int s) const {
    if (s < 2) {
        throw std::invalid_argument("zeta: s must be >= 2, got " + std::to_string(s));
    }
    std::lock_guard lock(cache_->mu);
    auto it = cache_->values.find(s);
    if (it == cache_->values.end()) {
        HighPrec v = zeta_euler_maclaurin(s, digits_).value;
        mpfr_prec_round(v.get(), bits_, MPFR_RNDN);
        it = cache_->values.emplace(s, std::move(v)).first;
    }
    return it->second;
}

EulerMaclaurinResult zeta_euler_maclaurin(int s, int digits) {
    if (s < 2) {
        throw std::invalid_argument("zeta_euler_maclaurin: s must be >= 2");
    }
    const mpfr_prec_t bits = bits_for_digits(digits, 48);
    const HighPrec target = pow10(-(digits + 4), bits);
    long cutoff = std::max(10L, static_cast<long>(std::ceil(1.5 * digits)));
    for (;;) {
        HighPrec sum(bits);
        for (long n = 1; n < cutoff; ++n) {
            sum += pow(HighPrec(n, bits), -s);
        }
        const HighPrec M(cutoff, bits);
        const HighPrec m_pow = pow(M, -s);
        // integral and endpoint half-weight
        sum += m_pow * M / static_cast<long>(s - 1);
        sum += m_pow / 2L;

        // rising = s(s+1)...(s+2j-2); m_term = M^{-s-2j+1}
        HighPrec rising(static_cast<long>(s), bits);
        HighPrec m_term = m_pow / M;
        const HighPrec inv_m2 = HighPrec(1L, bits) / (M * M);
        HighPrec previous(bits);
        bool first = true;
        for (int j = 1;; ++j) {
            HighPrec term = HighPrec(bernoulli(2 * j) / Rational(factorial(2 * j)), bits) * rising * m_term;
            HighPrec mag = abs(term);
            if (mag < target) {
                return {std::move(sum), std::move(mag), cutoff, j - 1};
            }
            if (!first && mag > previous) {
                break;
            }
            sum += term;
            previous = std::move(mag);
            first = false;
            rising *= static_cast<long>(s + 2 * j - 1);
            rising *= static_cast<long>(s + 2 * j);
            m_term *= inv_m2;
        }
        cutoff *= 2;
    }
}

HighPrec zeta_numeric(int s, const EvalContext& ctx) { return ctx.zeta(s); }

HighPrec eval_poly(const ZetaPoly& p, const EvalContext& ctx) {
    HighPrec sum(ctx.bits());
    for (const auto& [m, c] : p.terms()) {
        HighPrec term(c, ctx.bits());
        for (int s : m.args()) {
            term *= ctx.zeta(s);
        }
        sum += term;
    }
    return sum;
}

NestedSum mzv_nested_sum(int m, int k, long N, const EvalContext& ctx) {
    if (m < 2) {
        throw std::invalid_argument("mzv_nested_sum: m must be >= 2 (the series diverges otherwise)");
    }
    if (k < 0) {
        throw std::invalid_argument("mzv_nested_sum: k must be >= 0");
    }
    if (N < k + 2) {
        throw std::invalid_argument("mzv_nested_sum: need N >= k+2");
    }
    const mpfr_prec_t bits = ctx.bits();
    const HighPrec one(1L, bits);
    const HighPrec zero(bits);

    // Same recurrence as nested_sum_dp, kept inline to reuse the final
    // e_j(N+1) values for the tail bound.
    std::vector<HighPrec> e(static_cast<std::size_t>(k) + 1, zero);
    e[0] = one;
    HighPrec sum(bits);
    for (long n = 1; n <= N; ++n) {
        HighPrec inv = one / n;
        if (n > k) {
            sum += e[k] * pow(inv, m);
        }
        for (int j = k; j >= 1; --j) {
            e[j] += e[j - 1] * inv;
        }
    }

    const HighPrec bigN(N, bits);
    const HighPrec integral_scale = pow(bigN, 1 - m);
    const HighPrec peak_scale = pow(bigN, -m);
    HighPrec tail(bits);
    HighPrec j_factorial = one;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) {
            j_factorial *= static_cast<long>(j);
        }
        HighPrec integral = integral_scale / pow(HighPrec(static_cast<long>(m - 1), bits), j + 1);
        HighPrec ratio = HighPrec(Rational(j, m), bits);
        HighPrec peak = j == 0 ? peak_scale : pow(ratio, j) * exp(HighPrec(static_cast<long>(-j), bits)) * peak_scale;
        tail += e[k - j] * (integral + peak / j_factorial);
    }
    // outward margin for rounding in the bound itself
    tail += tail * pow10(-20, bits);
    return {std::move(sum), std::move(tail)};
}

}  // namespace mzv
