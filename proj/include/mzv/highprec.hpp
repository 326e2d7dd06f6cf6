#pragma once

#include <compare>
#include <ostream>
#include <string>

#include <mpfr.h>

#include "mzv/exact.hpp"

namespace mzv {

/// Owning MPFR real. Binary operations round to the larger of the operand
/// precisions (round-to-nearest), so every value carries its own precision.
class HighPrec {
public:
    explicit HighPrec(mpfr_prec_t bits = 128);
    HighPrec(long value, mpfr_prec_t bits);
    HighPrec(double value, mpfr_prec_t bits);
    HighPrec(const Rational& value, mpfr_prec_t bits);
    HighPrec(const BigInt& value, mpfr_prec_t bits);
    /// Parses a decimal string; throws std::invalid_argument on failure.
    HighPrec(const std::string& decimal, mpfr_prec_t bits);

    HighPrec(const HighPrec& o);
    HighPrec(HighPrec&& o) noexcept;
    HighPrec& operator=(const HighPrec& o);
    HighPrec& operator=(HighPrec&& o) noexcept;
    ~HighPrec();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Scientific notation with `digits` significant digits, e.g.
    /// "1.2020569031595942853997381615114499907650e+00".
    std::string to_string(int digits) const;
    /// Significant decimal digits this precision supports.
    int decimal_digits() const;

    HighPrec& operator+=(const HighPrec& o);
    HighPrec& operator-=(const HighPrec& o);
    HighPrec& operator*=(const HighPrec& o);
    HighPrec& operator/=(const HighPrec& o);
    HighPrec& operator*=(long o);
    HighPrec& operator/=(long o);

    friend HighPrec operator+(HighPrec a, const HighPrec& b) { return a += b; }
    friend HighPrec operator-(HighPrec a, const HighPrec& b) { return a -= b; }
    friend HighPrec operator*(HighPrec a, const HighPrec& b) { return a *= b; }
    friend HighPrec operator/(HighPrec a, const HighPrec& b) { return a /= b; }
    friend HighPrec operator*(HighPrec a, long b) { return a *= b; }
    friend HighPrec operator/(HighPrec a, long b) { return a /= b; }
    friend HighPrec operator-(HighPrec a);

    friend bool operator==(const HighPrec& a, const HighPrec& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const HighPrec& a, const HighPrec& b);

    friend std::ostream& operator<<(std::ostream& os, const HighPrec& x) {
        return os << x.to_string(x.decimal_digits());
    }

private:
    void promote(const HighPrec& o);

    mpfr_t v_;
};

HighPrec abs(const HighPrec& x);
HighPrec log(const HighPrec& x);
HighPrec log1p(const HighPrec& x);
HighPrec exp(const HighPrec& x);
HighPrec sinh(const HighPrec& x);
HighPrec cosh(const HighPrec& x);
HighPrec sqrt(const HighPrec& x);
HighPrec pow(const HighPrec& x, long e);
HighPrec max(const HighPrec& a, const HighPrec& b);
HighPrec pi(mpfr_prec_t bits);
/// 10^e at the given precision.
HighPrec pow10(long e, mpfr_prec_t bits);

/// Binary precision needed for `digits` decimal digits plus guard bits.
mpfr_prec_t bits_for_digits(int digits, int guard_bits = 16);

}  // namespace mzv
