#pragma once

#include <map>
#include <utility>

#include "mzv/zeta_ring.hpp"

namespace mzv {

/// Bivariate power series in x, y with zeta-polynomial coefficients,
/// truncated at total degree `cap`. Zero coefficients are never stored.
class BiSeries {
public:
    using Exponent = std::pair<int, int>;

    explicit BiSeries(int cap);

    int cap() const { return cap_; }
    const std::map<Exponent, ZetaPoly>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i y^j; zero when absent or beyond the cap.
    ZetaPoly coefficient(int i, int j) const;
    /// Adds c to the x^i y^j coefficient. Terms with i+j > cap are dropped.
    void add(int i, int j, const ZetaPoly& c);

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator*=(const Rational& c);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

    static BiSeries one(int cap);

private:
    int cap_;
    std::map<Exponent, ZetaPoly> coeffs_;
};

/// S(x,y) = sum_{n=2}^{W} zeta(n) (x^n + y^n - (x+y)^n)/n, truncated at W.
BiSeries log_series(int W);

/// exp(s) truncated at s.cap(), by Horner accumulation of sum s^j/j!.
/// Throws std::invalid_argument if s has a constant or linear term.
BiSeries series_exp(const BiSeries& s);

/// Coefficient of x^{k+1} y^{l+1} in 1 - exp(log_series(W)), which is
/// zeta(l+2, {1}_k). Requires k+l+2 <= W. The series for each W is computed
/// once and cached.
ZetaPoly gf_coefficient(int k, int l, int W);

}  // namespace mzv
