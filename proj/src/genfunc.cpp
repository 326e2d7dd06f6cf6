#include "mzv/genfunc.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "mzv/exact.hpp"

namespace mzv {

BiSeries::BiSeries(int cap) : cap_(cap) {
    if (cap < 0) {
        throw std::invalid_argument("BiSeries: negative cap");
    }
}

ZetaPoly BiSeries::coefficient(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? ZetaPoly{} : it->second;
}

void BiSeries::add(int i, int j, const ZetaPoly& c) {
    if (i < 0 || j < 0) {
        throw std::invalid_argument("BiSeries: negative exponent");
    }
    if (i + j > cap_ || c.is_zero()) {
        return;
    }
    auto [it, inserted] = coeffs_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    }
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    for (const auto& [e, c] : o.coeffs_) {
        add(e.first, e.second, c);
    }
    return *this;
}

BiSeries& BiSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, poly] : coeffs_) {
        poly *= c;
    }
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.cap_, b.cap_));
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            int i = ea.first + eb.first;
            int j = ea.second + eb.second;
            if (i + j <= r.cap_) {
                r.add(i, j, ca * cb);
            }
        }
    }
    return r;
}

BiSeries BiSeries::one(int cap) {
    BiSeries r(cap);
    r.add(0, 0, ZetaPoly(Rational(1)));
    return r;
}

BiSeries log_series(int W) {
    if (W < 2) {
        throw std::invalid_argument("log_series: W must be >= 2");
    }
    BiSeries s(W);
    for (int n = 2; n <= W; ++n) {
        ZetaPoly zn = ZetaPoly::zeta(n) * Rational(BigInt(1), BigInt(n));
        // x^n and y^n cancel against the end terms of (x+y)^n.
        for (int i = 1; i < n; ++i) {
            s.add(i, n - i, zn * Rational(-binomial(n, i)));
        }
    }
    return s;
}

BiSeries series_exp(const BiSeries& s) {
    for (const auto& [e, c] : s.coeffs()) {
        if (e.first + e.second < 2) {
            throw std::invalid_argument("series_exp: argument must start at total degree 2");
        }
    }
    const int cap = s.cap();
    BiSeries acc = BiSeries::one(cap);
    for (int j = cap / 2; j >= 1; --j) {
        BiSeries next = s * acc;
        next *= Rational(BigInt(1), BigInt(j));
        next += BiSeries::one(cap);
        acc = std::move(next);
    }
    return acc;
}

ZetaPoly gf_coefficient(int k, int l, int W) {
    if (k < 0 || l < 0) {
        throw std::invalid_argument("gf_coefficient: k and l must be >= 0");
    }
    if (k + l + 2 > W) {
        throw std::invalid_argument("gf_coefficient: weight " + std::to_string(k + l + 2) +
                                    " exceeds series cap " + std::to_string(W));
    }
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const BiSeries>> cache;
    std::shared_ptr<const BiSeries> series;
    {
        std::lock_guard lock(mu);
        auto& slot = cache[W];
        if (!slot) {
            slot = std::make_shared<const BiSeries>(series_exp(log_series(W)));
        }
        series = slot;
    }
    return -series->coefficient(k + 1, l + 1);
}

}  // namespace mzv
