#include "mzv/zeta_ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mzv {

ZetaMonomial::ZetaMonomial(std::vector<int> args) : args_(std::move(args)) {
    for (int s : args_) {
        if (s < 2) {
            throw std::invalid_argument("ZetaMonomial: argument " + std::to_string(s) + " is below 2");
        }
    }
    std::sort(args_.begin(), args_.end(), std::greater<>());
    weight_ = std::accumulate(args_.begin(), args_.end(), 0);
}

ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b) {
    ZetaMonomial r;
    r.args_.resize(a.args_.size() + b.args_.size());
    std::merge(a.args_.begin(), a.args_.end(), b.args_.begin(), b.args_.end(), r.args_.begin(),
               std::greater<>());
    r.weight_ = a.weight_ + b.weight_;
    return r;
}

std::strong_ordering operator<=>(const ZetaMonomial& a, const ZetaMonomial& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(), b.args_.begin(),
                                                  b.args_.end());
}

Rational ZetaPoly::coefficient(const ZetaMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ZetaPoly::add_term(const ZetaMonomial& m, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

ZetaPoly& ZetaPoly::operator-=(const ZetaPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

ZetaPoly& ZetaPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
    ZetaPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

namespace {

// Ascending factors grouped into powers: {3,2,2} -> [(2,2),(3,1)].
std::vector<std::pair<int, int>> grouped_factors(const ZetaMonomial& m) {
    std::vector<std::pair<int, int>> out;
    for (auto it = m.args().rbegin(); it != m.args().rend(); ++it) {
        if (!out.empty() && out.back().first == *it) {
            ++out.back().second;
        } else {
            out.emplace_back(*it, 1);
        }
    }
    return out;
}

template <class CoeffFn, class MonoFn>
std::string render(const ZetaPoly& p, CoeffFn coeff_text, MonoFn mono_text, const char* joiner) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_unit()) {
            os << coeff_text(mag, true);
            continue;
        }
        if (mag != Rational(1)) {
            os << coeff_text(mag, false) << joiner;
        }
        os << mono_text(m);
    }
    return os.str();
}

}  // namespace

std::string ZetaPoly::to_string() const {
    auto coeff = [](const Rational& c, bool standalone) {
        if (c.is_integer() || standalone) {
            return c.to_string();
        }
        return "(" + c.to_string() + ")";
    };
    auto mono = [](const ZetaMonomial& m) {
        std::string out;
        for (auto [s, e] : grouped_factors(m)) {
            if (!out.empty()) {
                out += "·";
            }
            out += "zeta(" + std::to_string(s) + ")";
            if (e > 1) {
                out += "^" + std::to_string(e);
            }
        }
        return out;
    };
    return render(*this, coeff, mono, "·");
}

std::string ZetaPoly::to_latex() const {
    auto coeff = [](const Rational& c, bool) {
        if (c.is_integer()) {
            return c.to_string();
        }
        return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
    };
    auto mono = [](const ZetaMonomial& m) {
        std::string out;
        for (auto [s, e] : grouped_factors(m)) {
            out += "\\zeta(" + std::to_string(s) + ")";
            if (e > 1) {
                out += "^{" + std::to_string(e) + "}";
            }
        }
        return out;
    };
    return render(*this, coeff, mono, " ");
}

ZetaPoly poly_add(const ZetaPoly& a, const ZetaPoly& b) { return a + b; }

ZetaPoly poly_mul(const ZetaPoly& a, const ZetaPoly& b) { return a * b; }

ZetaPoly poly_pow(const ZetaPoly& a, int e) {
    if (e < 0) {
        throw std::invalid_argument("poly_pow: negative exponent");
    }
    ZetaPoly r(Rational(1));
    for (int i = 0; i < e; ++i) {
        r = r * a;
    }
    return r;
}

Rational even_zeta_ratio(int n) {
    if (n < 1) {
        throw std::invalid_argument("even_zeta_ratio: n must be >= 1");
    }
    // (-1)^{n+1} B_{2n} 2^{2n} 6^n / (2 (2n)!)
    BigInt scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 24, static_cast<unsigned long>(n));
    Rational r = bernoulli(2 * n) * Rational(scale) / Rational(BigInt(2) * factorial(2 * n));
    return n % 2 == 0 ? -r : r;
}

ZetaPoly normalize_even(const ZetaPoly& p) {
    ZetaPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> kept;
        Rational factor = c;
        int zeta2_power = 0;
        for (int s : m.args()) {
            if (s % 2 == 0) {
                zeta2_power += s / 2;
                if (s > 2) {
                    factor *= even_zeta_ratio(s / 2);
                }
            } else {
                kept.push_back(s);
            }
        }
        kept.insert(kept.end(), zeta2_power, 2);
        out.add_term(ZetaMonomial(std::move(kept)), factor);
    }
    return out;
}

ZetaPoly compact_even(const ZetaPoly& p) {
    ZetaPoly out;
    const ZetaPoly normalized = normalize_even(p);
    for (const auto& [m, c] : normalized.terms()) {
        std::vector<int> args = m.args();
        auto twos = std::count(args.begin(), args.end(), 2);
        if (twos < 2) {
            out.add_term(m, c);
            continue;
        }
        std::erase(args, 2);
        args.push_back(static_cast<int>(2 * twos));
        out.add_term(ZetaMonomial(std::move(args)), c / even_zeta_ratio(static_cast<int>(twos)));
    }
    return out;
}

std::optional<int> weight_of(const ZetaPoly& p) {
    if (p.is_zero()) {
        throw std::domain_error("weight_of: zero polynomial has no weight");
    }
    int w = p.terms().begin()->first.weight();
    for (const auto& [m, c] : p.terms()) {
        if (m.weight() != w) {
            return std::nullopt;
        }
    }
    return w;
}

}  // namespace mzv
