#include "mzv/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <vector>

#include "mzv/exact.hpp"
#include "mzv/simd/kernels.hpp"

namespace mzv {

namespace {

// Nodes of one refinement level. Level 0 holds t = 0, 1, 2, ...; level j > 0
// holds the odd multiples of 2^-j. Every t > 0 node stands for the pair
// (x, xc) and its mirror (xc, x).
struct HpLevel {
    std::vector<HighPrec> x, xc, w;
    bool has_center = false;
};

class HpTable {
public:
    explicit HpTable(mpfr_prec_t bits) : bits_(bits) {
        // weights fall below 2^-2bits by t_max
        double scale = (2.0 * static_cast<double>(bits) * std::numbers::ln2 + 20.0) / std::numbers::pi;
        t_max_ = std::asinh(scale);
    }

    const HpLevel& level(int j) {
        std::lock_guard lock(mu_);
        while (static_cast<int>(levels_.size()) <= j) {
            levels_.push_back(std::make_unique<HpLevel>(build(static_cast<int>(levels_.size()))));
        }
        return *levels_[j];
    }

private:
    HpLevel build(int j) const {
        HpLevel lv;
        const HighPrec half_pi = pi(bits_) / 2L;
        const HighPrec one(1L, bits_);
        const double h = std::ldexp(1.0, -j);
        const long count = static_cast<long>(std::floor(t_max_ / h));
        for (long i = 0; i <= count; ++i) {
            if (j > 0 && i % 2 == 0) {
                continue;
            }
            if (i == 0) {
                lv.has_center = true;
                lv.x.emplace_back(HighPrec(0.5, bits_));
                lv.xc.emplace_back(HighPrec(0.5, bits_));
                lv.w.emplace_back(half_pi / 2L);
                continue;
            }
            // t = i·2^-j exactly representable
            HighPrec t(std::ldexp(static_cast<double>(i), -j), bits_);
            HighPrec u = half_pi * sinh(t);
            HighPrec e = exp(-(u * 2L));
            HighPrec denom = one + e;
            lv.x.push_back(one / denom);
            lv.xc.push_back(e / denom);
            // dx/dt = pi cosh t · e / (1+e)^2
            lv.w.push_back(half_pi * 2L * cosh(t) * e / (denom * denom));
        }
        return lv;
    }

    mpfr_prec_t bits_;
    double t_max_;
    std::mutex mu_;
    std::vector<std::unique_ptr<HpLevel>> levels_;
};

HpTable& hp_table(mpfr_prec_t bits) {
    static std::mutex mu;
    static std::map<mpfr_prec_t, std::unique_ptr<HpTable>> tables;
    std::lock_guard lock(mu);
    auto& slot = tables[bits];
    if (!slot) {
        slot = std::make_unique<HpTable>(bits);
    }
    return *slot;
}

// -ln(x), evaluated from whichever of x, 1-x keeps relative accuracy.
HighPrec neg_log(const HighPrec& x, const HighPrec& xc) {
    if (xc.to_double() >= 0.5) {
        return -log(x);
    }
    return -log1p(-xc);
}

void check_finite(const HighPrec& v, const HighPrec& x, const QuadResult& last) {
    if (!v.is_finite()) {
        throw QuadratureError(QuadratureError::Kind::non_finite,
                              "de_quad: integrand is not finite at x = " + x.to_string(20), last);
    }
}

}  // namespace

HighPrec default_target(const EvalContext& ctx) { return ctx.tolerance(ctx.digits() - 10); }

QuadResult de_quad(const Integrand& f, const HighPrec& target, const EvalContext& ctx, int max_level) {
    const mpfr_prec_t bits = ctx.bits();
    auto& table = hp_table(bits);
    QuadResult result{HighPrec(bits), HighPrec(bits), 0};
    HighPrec sum(bits);
    for (int j = 0; j <= max_level; ++j) {
        const HpLevel& lv = table.level(j);
        HighPrec partial(bits);
        for (std::size_t i = 0; i < lv.x.size(); ++i) {
            bool center = lv.has_center && i == 0;
            HighPrec v = f(lv.x[i], lv.xc[i]);
            check_finite(v, lv.x[i], result);
            if (!center) {
                HighPrec mirror = f(lv.xc[i], lv.x[i]);
                check_finite(mirror, lv.xc[i], result);
                v += mirror;
            }
            partial += v * lv.w[i];
        }
        HighPrec next = j == 0 ? partial : sum / 2L + partial / (1L << j);
        result.est_error = abs(next - sum);
        result.value = next;
        result.levels_used = j + 1;
        sum = std::move(next);
        if (j >= 2 && result.est_error < target) {
            return result;
        }
    }
    throw QuadratureError(QuadratureError::Kind::non_convergence,
                          "de_quad: no convergence within " + std::to_string(max_level + 1) +
                              " levels (last difference " + result.est_error.to_string(6) + ")",
                          result);
}

QuadResult moment_numeric(int n1, int l, const EvalContext& ctx) {
    if (n1 < 0 || l < 0) {
        throw std::invalid_argument("moment_numeric: exponents must be >= 0");
    }
    return de_quad(
        [n1, l](const HighPrec& x, const HighPrec& xc) { return pow(x, n1) * pow(neg_log(x, xc), l); },
        default_target(ctx), ctx);
}

namespace {

QuadResult log_integral_with_target(int k, int l, const HighPrec& target, const EvalContext& ctx) {
    return de_quad(
        [k, l](const HighPrec& x, const HighPrec& xc) {
            return pow(neg_log(xc, x), k) / xc * pow(neg_log(x, xc), l);
        },
        target, ctx);
}

}  // namespace

QuadResult lemma1_numeric(int k, int l, const EvalContext& ctx) {
    if (k < 0) {
        throw std::invalid_argument("lemma1_numeric: k must be >= 0");
    }
    if (l < 1) {
        throw std::invalid_argument("lemma1_numeric: l must be >= 1 (the integral diverges for l = 0)");
    }
    return log_integral_with_target(k, l, default_target(ctx), ctx);
}

QuadResult triangle_semi(int n, const EvalContext& ctx) {
    if (n < 0) {
        throw std::invalid_argument("triangle_semi: n must be >= 0");
    }
    const mpfr_prec_t bits = ctx.bits();
    const HighPrec target = default_target(ctx);
    QuadResult total{HighPrec(bits), HighPrec(bits), 0};
    // Fixed k order keeps the summation deterministic.
    for (int k = 0; k <= n; ++k) {
        Rational coeff = Rational(binomial(n, k)) / Rational(n - k + 1);
        HighPrec c(coeff, bits);
        QuadResult part = log_integral_with_target(k, n - k + 1, target / (c * static_cast<long>(n + 1)), ctx);
        total.value += c * part.value;
        total.est_error += c * part.est_error;
        total.levels_used = std::max(total.levels_used, part.levels_used);
    }
    return total;
}

namespace {

// Inner nodes reach 1-u ~ 1e-101, far below the smallest outer 1-x
// (~1e-30), so the inner integrand's step at 1-u ~ 1-x is always resolved.
// Outer truncation drops a region worth about 1e-22.
constexpr double kInnerTmax = 5.0;
constexpr double kOuterTmax = 3.8;

// Double-precision node table, mirrored pairs already expanded so the
// kernels can stream over flat arrays.
struct F64Level {
    std::vector<double> x, xc, w;
};

class F64Table {
public:
    explicit F64Table(double t_max) : t_max_(t_max) {}

    const F64Level& level(int j) {
        std::lock_guard lock(mu_);
        while (static_cast<int>(levels_.size()) <= j) {
            levels_.push_back(std::make_unique<F64Level>(build(static_cast<int>(levels_.size()))));
        }
        return *levels_[j];
    }

private:
    F64Level build(int j) const {
        F64Level lv;
        const double h = std::ldexp(1.0, -j);
        const long count = static_cast<long>(std::floor(t_max_ / h));
        for (long i = 0; i <= count; ++i) {
            if (j > 0 && i % 2 == 0) {
                continue;
            }
            double t = static_cast<double>(i) * h;
            double u = std::numbers::pi / 2 * std::sinh(t);
            double e = std::exp(-2 * u);
            double x = 1 / (1 + e);
            double xc = e / (1 + e);
            double w = std::numbers::pi * std::cosh(t) * e / ((1 + e) * (1 + e));
            lv.x.push_back(x);
            lv.xc.push_back(xc);
            lv.w.push_back(w);
            if (i != 0) {
                lv.x.push_back(xc);
                lv.xc.push_back(x);
                lv.w.push_back(w);
            }
        }
        return lv;
    }

    double t_max_;
    std::mutex mu_;
    std::vector<std::unique_ptr<F64Level>> levels_;
};

F64Table& inner_table() {
    static F64Table table(kInnerTmax);
    return table;
}

F64Table& outer_table() {
    static F64Table table(kOuterTmax);
    return table;
}

struct InnerResult {
    double value;
    double error;
};

InnerResult inner_integral(double outer, double outer_c, int n, double tol, Orientation orientation,
                           int max_level) {
    auto& table = inner_table();
    double neg_log_outer = outer_c >= 0.5 ? -std::log(outer) : -std::log1p(-outer_c);
    double sum = 0.0;
    double diff = 0.0;
    for (int j = 0; j <= max_level; ++j) {
        const F64Level& lv = table.level(j);
        // xy: y = outer_c + outer·(1-u); yx: x = outer_c + outer·u. The
        // node set is symmetric, so both cover the same points in a
        // different order.
        const auto& offsets = orientation == Orientation::xy ? lv.xc : lv.x;
        double partial = simd::triangle_inner_sum(offsets, lv.w, outer, outer_c, neg_log_outer, n);
        double next = j == 0 ? partial : sum / 2 + std::ldexp(partial, -j);
        diff = std::fabs(next - sum);
        sum = next;
        if (j >= 2 && diff <= std::max(tol, 1e-13 * std::fabs(sum))) {
            return {sum, diff};
        }
    }
    throw QuadratureError(QuadratureError::Kind::non_convergence,
                          "triangle_2d: inner integral did not converge at outer node " + std::to_string(outer),
                          QuadResult{HighPrec(sum, 64), HighPrec(diff, 64), max_level + 1});
}

}  // namespace

QuadResult triangle_2d(int n, const EvalContext& ctx, double target, Orientation orientation) {
    if (n < 0) {
        throw std::invalid_argument("triangle_2d: n must be >= 0");
    }
    if (!(target > 0)) {
        throw std::invalid_argument("triangle_2d: target must be positive");
    }
    const double inner_tol = target / 10;
    auto& table = outer_table();
    double sum = 0.0;
    double diff = 0.0;
    for (int j = 0; j <= kDefaultMaxLevel; ++j) {
        const F64Level& lv = table.level(j);
        double partial = 0.0;
        for (std::size_t i = 0; i < lv.x.size(); ++i) {
            InnerResult inner = inner_integral(lv.x[i], lv.xc[i], n, inner_tol, orientation, kDefaultMaxLevel);
            if (!std::isfinite(inner.value)) {
                throw QuadratureError(QuadratureError::Kind::non_finite,
                                      "triangle_2d: non-finite inner integral",
                                      QuadResult{HighPrec(sum, ctx.bits()), HighPrec(diff, ctx.bits()), j});
            }
            partial += lv.w[i] * inner.value;
        }
        double next = j == 0 ? partial : sum / 2 + std::ldexp(partial, -j);
        diff = std::fabs(next - sum);
        sum = next;
        if (j >= 2 && diff < target) {
            return {HighPrec(sum, ctx.bits()), HighPrec(diff + inner_tol, ctx.bits()), j + 1};
        }
    }
    throw QuadratureError(QuadratureError::Kind::non_convergence, "triangle_2d: outer integral did not converge",
                          QuadResult{HighPrec(sum, ctx.bits()), HighPrec(diff, ctx.bits()), kDefaultMaxLevel + 1});
}

}  // namespace mzv
