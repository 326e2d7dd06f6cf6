#include "mzv/highprec.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace mzv {

HighPrec::HighPrec(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

HighPrec::HighPrec(long value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

HighPrec::HighPrec(double value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, value, MPFR_RNDN);
}

HighPrec::HighPrec(const Rational& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

HighPrec::HighPrec(const BigInt& value, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

HighPrec::HighPrec(const std::string& decimal, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    if (decimal.empty() || mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("HighPrec: cannot parse '" + decimal + "'");
    }
}

HighPrec::HighPrec(const HighPrec& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HighPrec::HighPrec(HighPrec&& o) noexcept {
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
}

HighPrec& HighPrec::operator=(const HighPrec& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

HighPrec& HighPrec::operator=(HighPrec&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

HighPrec::~HighPrec() { mpfr_clear(v_); }

void HighPrec::promote(const HighPrec& o) {
    if (o.precision() > precision()) {
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    }
}

HighPrec& HighPrec::operator+=(const HighPrec& o) {
    promote(o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HighPrec& HighPrec::operator-=(const HighPrec& o) {
    promote(o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HighPrec& HighPrec::operator*=(const HighPrec& o) {
    promote(o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HighPrec& HighPrec::operator/=(const HighPrec& o) {
    promote(o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

HighPrec& HighPrec::operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

HighPrec& HighPrec::operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}

HighPrec operator-(HighPrec a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
}

std::partial_ordering operator<=>(const HighPrec& a, const HighPrec& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) {
        return std::partial_ordering::unordered;
    }
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::string HighPrec::to_string(int digits) const {
    if (digits < 1) {
        digits = 1;
    }
    char* raw = nullptr;
    if (mpfr_asprintf(&raw, "%.*Re", digits - 1, v_) < 0) {
        throw std::runtime_error("HighPrec: formatting failed");
    }
    std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
    return std::string(raw);
}

int HighPrec::decimal_digits() const {
    return static_cast<int>(std::floor(static_cast<double>(precision()) * std::log10(2.0)));
}

namespace {

template <class Fn>
HighPrec apply(const HighPrec& x, Fn fn) {
    HighPrec r(x.precision());
    fn(r.get(), x.get(), MPFR_RNDN);
    return r;
}

}  // namespace

HighPrec abs(const HighPrec& x) { return apply(x, mpfr_abs); }
HighPrec log(const HighPrec& x) { return apply(x, mpfr_log); }
HighPrec log1p(const HighPrec& x) { return apply(x, mpfr_log1p); }
HighPrec exp(const HighPrec& x) { return apply(x, mpfr_exp); }
HighPrec sinh(const HighPrec& x) { return apply(x, mpfr_sinh); }
HighPrec cosh(const HighPrec& x) { return apply(x, mpfr_cosh); }
HighPrec sqrt(const HighPrec& x) { return apply(x, mpfr_sqrt); }

HighPrec pow(const HighPrec& x, long e) {
    HighPrec r(x.precision());
    mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

HighPrec max(const HighPrec& a, const HighPrec& b) { return a < b ? b : a; }

HighPrec pi(mpfr_prec_t bits) {
    HighPrec r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

HighPrec pow10(long e, mpfr_prec_t bits) {
    HighPrec r(bits);
    HighPrec ten(10L, bits);
    mpfr_pow_si(r.get(), ten.get(), e, MPFR_RNDN);
    return r;
}

mpfr_prec_t bits_for_digits(int digits, int guard_bits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * std::log2(10.0))) + guard_bits;
}

}  // namespace mzv
