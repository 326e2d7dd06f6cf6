#include "mzv/exact.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace mzv {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (s.empty()) {
            throw std::invalid_argument("Rational::parse: empty integer");
        }
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) {
            throw std::invalid_argument("Rational::parse: sign without digits");
        }
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw std::invalid_argument("Rational::parse: bad digit in '" + std::string(s) + "'");
            }
        }
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return BigInt(digits, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    auto den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_str();
}

std::string Rational::to_fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt binomial(long n, long k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be nonnegative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: n must be nonnegative");
    }
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace {

struct BernoulliTable {
    std::mutex mu;
    std::vector<Rational> values{Rational(1)};
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

}  // namespace

Rational bernoulli(long n) {
    if (n < 0) {
        throw std::invalid_argument("bernoulli: n must be nonnegative");
    }
    auto& table = bernoulli_table();
    std::lock_guard lock(table.mu);
    auto& b = table.values;
    for (long m = static_cast<long>(b.size()); m <= n; ++m) {
        // (m+1) B_m = -sum_{j<m} C(m+1, j) B_j
        Rational acc;
        for (long j = 0; j < m; ++j) {
            if (!b[j].is_zero()) {
                acc += Rational(binomial(m + 1, j)) * b[j];
            }
        }
        b.push_back(-acc / Rational(m + 1));
    }
    return b[n];
}

}  // namespace mzv
