#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzv/exact.hpp"

namespace mzv {

/// Formal product zeta(s_1)...zeta(s_p), every s_i >= 2. Arguments are kept
/// sorted in descending order; the empty product is the unit monomial.
class ZetaMonomial {
public:
    ZetaMonomial() = default;
    /// Accepts arguments in any order. Throws std::invalid_argument if any
    /// argument is below 2.
    explicit ZetaMonomial(std::vector<int> args);
    ZetaMonomial(std::initializer_list<int> args) : ZetaMonomial(std::vector<int>(args)) {}

    const std::vector<int>& args() const { return args_; }
    int weight() const { return weight_; }
    bool is_unit() const { return args_.empty(); }

    friend ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b);

    friend bool operator==(const ZetaMonomial& a, const ZetaMonomial& b) { return a.args_ == b.args_; }
    /// Orders by weight, then lexicographically on the descending arg list.
    friend std::strong_ordering operator<=>(const ZetaMonomial& a, const ZetaMonomial& b);

private:
    std::vector<int> args_;
    int weight_ = 0;
};

/// Rational-linear combination of zeta monomials. No stored coefficient is
/// ever zero, so two polynomials are equal iff their term maps are equal.
class ZetaPoly {
public:
    using TermMap = std::map<ZetaMonomial, Rational>;

    ZetaPoly() = default;
    ZetaPoly(const Rational& c) { add_term(ZetaMonomial{}, c); }  // NOLINT(google-explicit-constructor)
    ZetaPoly(const ZetaMonomial& m, const Rational& c = Rational(1)) { add_term(m, c); }

    /// The generator zeta(s) as a polynomial.
    static ZetaPoly zeta(int s) { return ZetaPoly(ZetaMonomial{s}); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of m, zero if absent.
    Rational coefficient(const ZetaMonomial& m) const;

    void add_term(const ZetaMonomial& m, const Rational& c);

    ZetaPoly& operator+=(const ZetaPoly& o);
    ZetaPoly& operator-=(const ZetaPoly& o);
    ZetaPoly& operator*=(const Rational& c);

    friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }
    friend ZetaPoly operator-(ZetaPoly a, const ZetaPoly& b) { return a -= b; }
    friend ZetaPoly operator-(ZetaPoly a) { return a *= Rational(-1); }
    friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
    friend ZetaPoly operator*(ZetaPoly a, const Rational& c) { return a *= c; }
    friend ZetaPoly operator*(const Rational& c, ZetaPoly a) { return a *= c; }

    friend bool operator==(const ZetaPoly& a, const ZetaPoly& b) { return a.terms_ == b.terms_; }

    /// Plain-text rendering, e.g. "36·zeta(5) - 12·zeta(2)·zeta(3)". Terms
    /// appear in descending monomial order; factors inside a monomial in
    /// ascending order.
    std::string to_string() const;
    /// LaTeX rendering, e.g. "36\zeta(5) - 12\zeta(2)\zeta(3)".
    std::string to_latex() const;

private:
    TermMap terms_;
};

ZetaPoly poly_add(const ZetaPoly& a, const ZetaPoly& b);
ZetaPoly poly_mul(const ZetaPoly& a, const ZetaPoly& b);
ZetaPoly poly_pow(const ZetaPoly& a, int e);

/// zeta(2n)/zeta(2)^n as an exact rational, n >= 1.
Rational even_zeta_ratio(int n);

/// Rewrites every zeta(2n), n >= 2, as even_zeta_ratio(n)·zeta(2)^n and
/// recollects. Odd generators and zeta(2) are left alone.
ZetaPoly normalize_even(const ZetaPoly& p);

/// Display form: after normalize_even, folds every zeta(2)^j factor with
/// j >= 2 back into zeta(2j)/even_zeta_ratio(j), e.g. (9/5)zeta(2)^2 becomes
/// (9/2)zeta(4). normalize_even(compact_even(p)) == normalize_even(p).
ZetaPoly compact_even(const ZetaPoly& p);

/// Common weight of a nonzero polynomial, or std::nullopt when the terms
/// have different weights. Throws std::domain_error on the zero polynomial.
std::optional<int> weight_of(const ZetaPoly& p);

}  // namespace mzv
