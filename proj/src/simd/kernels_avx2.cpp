// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace mzv::simd::avx2 {

namespace {

// Cephes-style natural log for positive normal doubles: split x = m·2^e with
// m in [sqrt(1/2), sqrt(2)), then log(1+f) = f - f^2/2 + f^3 P(f)/Q(f) and
// e·ln2 added in two parts.
inline __m256d log_pd(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
    const __m256i half_bits = _mm256_set1_epi64x(0x3FE0000000000000LL);
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), half_bits));

    // biased exponent -> double via the 2^52 trick
    const __m256i exp_field = _mm256_srli_epi64(bits, 52);
    const __m256d two52 = _mm256_set1_pd(4503599627370496.0);
    __m256d e = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(exp_field, _mm256_castpd_si256(two52))), two52);
    e = _mm256_sub_pd(e, _mm256_set1_pd(1022.0));

    const __m256d sqrth = _mm256_set1_pd(0.70710678118654752440);
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d below = _mm256_cmp_pd(m, sqrth, _CMP_LT_OQ);
    e = _mm256_sub_pd(e, _mm256_and_pd(below, one));
    m = _mm256_add_pd(m, _mm256_and_pd(below, m));
    __m256d f = _mm256_sub_pd(m, one);

    __m256d p = _mm256_set1_pd(1.01875663804580931796E-4);
    p = _mm256_fmadd_pd(p, f, _mm256_set1_pd(4.97494994976747001425E-1));
    p = _mm256_fmadd_pd(p, f, _mm256_set1_pd(4.70579119878881725854E0));
    p = _mm256_fmadd_pd(p, f, _mm256_set1_pd(1.44989225341610930846E1));
    p = _mm256_fmadd_pd(p, f, _mm256_set1_pd(1.79368678507819816313E1));
    p = _mm256_fmadd_pd(p, f, _mm256_set1_pd(7.70838733755885391666E0));

    __m256d q = _mm256_add_pd(f, _mm256_set1_pd(1.12873587189167450590E1));
    q = _mm256_fmadd_pd(q, f, _mm256_set1_pd(4.52279145837532221105E1));
    q = _mm256_fmadd_pd(q, f, _mm256_set1_pd(8.29875266912776603211E1));
    q = _mm256_fmadd_pd(q, f, _mm256_set1_pd(7.11544750618563894466E1));
    q = _mm256_fmadd_pd(q, f, _mm256_set1_pd(2.31251620126765340583E1));

    __m256d z = _mm256_mul_pd(f, f);
    __m256d y = _mm256_mul_pd(f, _mm256_div_pd(_mm256_mul_pd(z, p), q));
    y = _mm256_fnmadd_pd(e, _mm256_set1_pd(2.121944400546905827679E-4), y);
    y = _mm256_fnmadd_pd(z, _mm256_set1_pd(0.5), y);
    __m256d r = _mm256_add_pd(f, y);
    return _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), r);
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

}  // namespace

double triangle_inner_sum(const double* offsets, const double* weights, std::size_t count, double outer,
                          double outer_c, double neg_log_outer, int n) {
    const __m256d vouter = _mm256_set1_pd(outer);
    const __m256d vouter_c = _mm256_set1_pd(outer_c);
    const __m256d vneg_log = _mm256_set1_pd(neg_log_outer);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256d y = _mm256_fmadd_pd(vouter, _mm256_loadu_pd(offsets + i), vouter_c);
        __m256d L = _mm256_sub_pd(vneg_log, log_pd(y));
        __m256d p = _mm256_set1_pd(1.0);
        for (int e = 0; e < n; ++e) {
            p = _mm256_mul_pd(p, L);
        }
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(weights + i), _mm256_div_pd(p, y), acc);
    }
    double sum = hsum(acc);
    for (; i < count; ++i) {
        double y = outer_c + outer * offsets[i];
        double L = neg_log_outer - std::log(y);
        double p = 1.0;
        for (int e = 0; e < n; ++e) {
            p *= L;
        }
        sum += weights[i] * p / y;
    }
    return sum;
}

void log_array(const double* in, double* out, std::size_t count) {
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        _mm256_storeu_pd(out + i, log_pd(_mm256_loadu_pd(in + i)));
    }
    for (; i < count; ++i) {
        out[i] = std::log(in[i]);
    }
}

}  // namespace mzv::simd::avx2
