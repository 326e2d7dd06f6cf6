#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "mzv/highprec.hpp"
#include "mzv/zeta_ring.hpp"

namespace mzv {

/// Precision and truncation settings shared by every numeric routine, plus a
/// cache of zeta(s) values. Copies share the cache.
class EvalContext {
public:
    static constexpr int kDefaultDigits = 35;
    static constexpr long kDefaultSumLimit = 100000;

    /// Throws std::invalid_argument for digits < 15 or sum_limit < 1.
    explicit EvalContext(int digits = kDefaultDigits, long sum_limit = kDefaultSumLimit);

    int digits() const { return digits_; }
    mpfr_prec_t bits() const { return bits_; }
    long sum_limit() const { return sum_limit_; }

    /// zeta(s) accurate to 10^-(digits-2); each s is computed at most once.
    HighPrec zeta(int s) const;

    /// 10^-e at working precision.
    HighPrec tolerance(int e) const { return pow10(-e, bits_); }

private:
    struct Cache {
        std::mutex mu;
        std::map<int, HighPrec> values;
    };

    int digits_;
    mpfr_prec_t bits_;
    long sum_limit_;
    std::shared_ptr<Cache> cache_;
};

struct EulerMaclaurinResult {
    HighPrec value;
    /// Magnitude of the first omitted correction term, which bounds the
    /// remainder for f(x) = x^-s.
    HighPrec error_bound;
    long cutoff;
    int order;
};

/// zeta(s) for integer s >= 2 by Euler-Maclaurin summation: the direct sum
/// below `cutoff` M, the integral and half-term at M, and Bernoulli
/// corrections B_2j/(2j)! · s(s+1)...(s+2j-2) · M^{-s-2j+1} until the next
/// term drops below 10^-(digits+4). M starts at 1.5·digits and is doubled if
/// the correction series stops decreasing first.
EulerMaclaurinResult zeta_euler_maclaurin(int s, int digits);

/// Cached zeta(s) from the context. Throws std::invalid_argument for s < 2.
HighPrec zeta_numeric(int s, const EvalContext& ctx);

/// sum coeff · prod zeta(s_i) at context precision.
HighPrec eval_poly(const ZetaPoly& p, const EvalContext& ctx);

struct NestedSum {
    HighPrec value;
    HighPrec tail_bound;
};

/// Partial sum sum_{n=1}^{N} e_k(n)/n^m of zeta(m, {1}_k), where e_k(n) is
/// the degree-k elementary symmetric function of 1, 1/2, ..., 1/(n-1), kept
/// up to date with e_j(n+1) = e_j(n) + e_{j-1}(n)/n.
///
/// The tail bound splits e_k(n), n > N, as sum_j e_{k-j}(N+1) · e_j(1/(N+1),
/// ..., 1/(n-1)) with the second factor at most ln(n/N)^j/j!. Summing
/// ln(n/N)^j n^-m over n > N is at most the integral N^{1-m} j!/(m-1)^{j+1}
/// plus the peak value (j/m)^j e^-j N^-m, giving
///   tail <= sum_j e_{k-j}(N+1) [N^{1-m}/(m-1)^{j+1} + (j/m)^j e^-j N^-m / j!].
///
/// Requires m >= 2, k >= 0 and N >= k+2.
NestedSum mzv_nested_sum(int m, int k, long N, const EvalContext& ctx);

/// Elementary-symmetric recurrence over any field-like scalar; `one` fixes
/// the precision for HighPrec and is Rational(1) for exact evaluation.
template <class Scalar>
Scalar nested_sum_dp(int m, int k, long N, const Scalar& one) {
    Scalar zero = one - one;
    std::vector<Scalar> e(static_cast<std::size_t>(k) + 1, zero);
    e[0] = one;
    Scalar sum = zero;
    for (long n = 1; n <= N; ++n) {
        Scalar inv = one / n;
        if (n > k) {
            Scalar invm = inv;
            for (int i = 1; i < m; ++i) {
                invm *= inv;
            }
            sum += e[k] * invm;
        }
        for (int j = k; j >= 1; --j) {
            e[j] += e[j - 1] * inv;
        }
    }
    return sum;
}

namespace detail {

template <class Scalar>
Scalar nested_loops(int depth, long upper, int m, int k, const Scalar& one) {
    Scalar sum = one - one;
    // depth 0 picks n_1 <= upper, deeper levels pick n_{d+1} < n_d.
    for (long n = k - depth + 1; n <= upper; ++n) {
        Scalar inv = one / n;
        Scalar factor = inv;
        if (depth == 0) {
            for (int i = 1; i < m; ++i) {
                factor *= inv;
            }
        }
        if (depth == k) {
            sum += factor;
        } else {
            sum += factor * nested_loops(depth + 1, n - 1, m, k, one);
        }
    }
    return sum;
}

}  // namespace detail

/// Literal (k+1)-fold loop over N >= n_1 > n_2 > ... > n_{k+1} >= 1 of
/// 1/(n_1^m n_2 ... n_{k+1}). Costs O(N^{k+1}); reference only.
template <class Scalar>
Scalar nested_sum_brute_force(int m, int k, long N, const Scalar& one) {
    return detail::nested_loops(0, N, m, k, one);
}

}  // namespace mzv
