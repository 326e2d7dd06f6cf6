#include "mzv/commands.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>

#include "mzv/genfunc.hpp"
#include "mzv/kolbig.hpp"
#include "mzv/mzv_index.hpp"
#include "mzv/quadrature.hpp"

namespace mzv {

ReduceMethod parse_reduce_method(const std::string& name) {
    if (name == "kolbig") {
        return ReduceMethod::kolbig;
    }
    if (name == "genfunc") {
        return ReduceMethod::genfunc;
    }
    throw std::invalid_argument("unknown reduction method '" + name + "'");
}

IntegrationMethod parse_integration_method(const std::string& name) {
    if (name == "semi") {
        return IntegrationMethod::semi;
    }
    if (name == "2d") {
        return IntegrationMethod::two_d;
    }
    throw std::invalid_argument("unknown integration method '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

Json metadata(const EvalContext& ctx, const std::string& method, Clock::time_point start) {
    Json m;
    m["precision"] = ctx.digits();
    m["method"] = method;
    m["elapsed_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return m;
}

// Accuracy of eval_poly: cached zetas are good to 10^-(D-2) relative.
HighPrec eval_error(const HighPrec& value, const EvalContext& ctx) {
    return ctx.tolerance(ctx.digits() - 2) * max(HighPrec(1L, ctx.bits()), abs(value));
}

}  // namespace

OutputRecord cmd_reduce(int m, int k, ReduceMethod method, bool normalize, const EvalContext& ctx,
                        int series_cap) {
    auto start = Clock::now();
    MzvIndex index = family_index(m, k);
    ZetaPoly p;
    if (method == ReduceMethod::kolbig) {
        p = reduce_family(m, k);
    } else {
        if (m + k > series_cap) {
            throw std::invalid_argument("weight " + std::to_string(m + k) + " exceeds the series cap " +
                                        std::to_string(series_cap) + " (raise --max-weight)");
        }
        p = gf_coefficient(k, m - 2, std::max(series_cap, 2));
    }
    if (normalize) {
        p = normalize_even(p);
    }
    HighPrec value = eval_poly(p, ctx);
    OutputRecord r{"reduction"};
    r.payload["index"] = index.parts();
    r.payload["method"] = method == ReduceMethod::kolbig ? "kolbig" : "genfunc";
    r.payload["normalized"] = normalize;
    r.payload["weight"] = index.weight();
    r.payload["terms"] = poly_to_json(p);
    r.payload["numeric"] = decimal_string(value);
    r.payload["error_estimate"] = eval_error(value, ctx).to_string(3);
    r.metadata = metadata(ctx, r.payload["method"].get<std::string>(), start);
    return r;
}

OutputRecord cmd_triangle(int n, const EvalContext& ctx) {
    if (n < 0) {
        throw std::invalid_argument("triangle: n must be >= 0");
    }
    auto start = Clock::now();
    ZetaPoly reduced = reduce_triangle(n);
    ZetaPoly normalized = normalize_even(reduced);
    HighPrec value = eval_poly(reduced, ctx);
    OutputRecord r{"triangle"};
    r.payload["n"] = n;
    r.payload["weight"] = n + 2;
    r.payload["combination"] = combination_to_json(theorem1_combination(n));
    r.payload["reduced"] = poly_to_json(reduced);
    r.payload["terms"] = poly_to_json(normalized);
    r.payload["compact"] = poly_to_json(compact_even(normalized));
    r.payload["numeric"] = decimal_string(value);
    r.payload["error_estimate"] = eval_error(value, ctx).to_string(3);
    r.metadata = metadata(ctx, "kolbig", start);
    return r;
}

OutputRecord cmd_integrate(int n, IntegrationMethod method, const EvalContext& ctx) {
    if (n < 0) {
        throw std::invalid_argument("integrate: n must be >= 0");
    }
    auto start = Clock::now();
    QuadResult q = method == IntegrationMethod::semi ? triangle_semi(n, ctx) : triangle_2d(n, ctx);
    ZetaPoly reduced = normalize_even(reduce_triangle(n));
    HighPrec reference = eval_poly(reduced, ctx);
    HighPrec diff = abs(q.value - reference);
    OutputRecord r{"integral"};
    r.payload["n"] = n;
    r.payload["method"] = method == IntegrationMethod::semi ? "semi" : "2d";
    r.payload["weight"] = n + 2;
    r.payload["terms"] = poly_to_json(reduced);
    // 2d values are doubles; print only the digits they carry.
    r.payload["numeric"] = method == IntegrationMethod::semi ? decimal_string(q.value) : q.value.to_string(17);
    r.payload["error_estimate"] = q.est_error.to_string(3);
    r.payload["levels_used"] = q.levels_used;
    r.payload["reference"] = decimal_string(reference);
    r.payload["difference"] = diff.to_string(3);
    r.metadata = metadata(ctx, r.payload["method"].get<std::string>(), start);
    return r;
}

OutputRecord cmd_eval(int m, int k, const EvalContext& ctx) {
    auto start = Clock::now();
    MzvIndex index = family_index(m, k);
    NestedSum s = mzv_nested_sum(m, k, ctx.sum_limit(), ctx);
    ZetaPoly reduced = reduce_family(m, k);
    HighPrec reference = eval_poly(reduced, ctx);
    OutputRecord r{"eval"};
    r.payload["index"] = index.parts();
    r.payload["weight"] = index.weight();
    r.payload["sum_limit"] = ctx.sum_limit();
    r.payload["terms"] = poly_to_json(reduced);
    r.payload["numeric"] = decimal_string(s.value);
    r.payload["error_estimate"] = s.tail_bound.to_string(6);
    r.payload["reference"] = decimal_string(reference);
    r.payload["difference"] = abs(reference - s.value).to_string(6);
    r.metadata = metadata(ctx, "nested-sum", start);
    r.metadata["sum_limit"] = ctx.sum_limit();
    return r;
}

bool VerifyReport::all_passed() const { return failed() == 0; }

int VerifyReport::failed() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

// The I_0..I_4 values as printed in the source table.
ZetaPoly tabulated_triangle(int n) {
    using Z = ZetaPoly;
    switch (n) {
        case 0:
            return Z::zeta(2);
        case 1:
            return Z::zeta(3) * Rational(2);
        case 2:
            return Z::zeta(4) * Rational(9, 2);
        case 3:
            return Z::zeta(5) * Rational(36) - Z::zeta(2) * Z::zeta(3) * Rational(12);
        case 4:
            return Z::zeta(6) * Rational(237, 2) - Z::zeta(3) * Z::zeta(3) * Rational(48);
        default:
            throw std::out_of_range("tabulated_triangle: only n <= 4 is tabulated");
    }
}

std::string mk(const char* family, int a, const char* an, int b, const char* bn) {
    return std::string(family) + "/" + an + "=" + std::to_string(a) + "," + bn + "=" + std::to_string(b);
}

class Verifier {
public:
    explicit Verifier(const VerifyOptions& o)
        : opts_(o), ctx_(o.digits, o.sum_limit), tol_(ctx_.tolerance(o.digits - 10)) {}

    VerifyReport run() {
        const int W = opts_.max_weight;
        for (int w = 2; w <= W; ++w) {
            for (int m = 2; m <= w; ++m) {
                cross_oracle(m, w - m);
                duality(m, w - m);
            }
        }
        for (int n = 0; n <= std::min(4, W - 2); ++n) {
            table(n);
        }
        closed_forms();
        for (int k = 0; k + 1 <= std::min(7, W - 1); ++k) {
            for (int l = 1; k + l <= std::min(7, W - 1); ++l) {
                log_integral(k, l);
            }
        }
        for (int n = 0; n <= std::min(6, W - 2); ++n) {
            triangle(n);
        }
        for (int w = 2; w <= std::min(7, W); ++w) {
            for (int m = 2; m <= w; ++m) {
                nested(m, w - m);
            }
        }
        std::stable_sort(report_.checks.begin(), report_.checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
        report_.max_weight = W;
        return std::move(report_);
    }

private:
    bool fault(const std::string& name) {
        if (!faulted_ && opts_.inject_fault && name.starts_with(*opts_.inject_fault)) {
            faulted_ = true;
            return true;
        }
        return false;
    }

    void perturb(const std::string& name, ZetaPoly& p) {
        if (fault(name)) {
            ZetaMonomial first = p.is_zero() ? ZetaMonomial{2} : p.terms().begin()->first;
            p.add_term(first, Rational(1, 1000));
        }
    }

    void perturb(const std::string& name, HighPrec& x) {
        if (fault(name)) {
            x += HighPrec(1e-10, x.precision());
        }
    }

    void add(std::string name, bool passed, std::string detail, bool flagged = false) {
        report_.checks.push_back({std::move(name), passed, flagged, std::move(detail)});
    }

    void exact(const std::string& name, ZetaPoly lhs, const ZetaPoly& rhs, const std::string& what) {
        perturb(name, lhs);
        bool ok = normalize_even(lhs) == normalize_even(rhs);
        add(name, ok, ok ? what : what + " differs: " + normalize_even(lhs).to_string() + " vs " +
                                      normalize_even(rhs).to_string());
    }

    void numeric(const std::string& name, HighPrec value, const HighPrec& reference, const HighPrec& tol) {
        perturb(name, value);
        HighPrec diff = abs(value - reference);
        bool ok = diff <= tol;
        add(name, ok, "|diff| = " + diff.to_string(3) + " (tol " + tol.to_string(3) + ")");
    }

    void cross_oracle(int m, int k) {
        std::string name = mk("cross_oracle", m, "m", k, "k");
        ZetaPoly kolbig = reduce_family(m, k);
        perturb(name, kolbig);
        ZetaPoly gf = gf_coefficient(k, m - 2, std::max(opts_.max_weight, 2));
        if (normalize_even(kolbig) == normalize_even(gf)) {
            add(name, true, "exact after normalization");
            return;
        }
        EvalContext wide(40);
        HighPrec diff = abs(eval_poly(kolbig, wide) - eval_poly(gf, wide));
        bool ok = diff <= wide.tolerance(35);
        add(name, ok, "formal mismatch; 40-digit |diff| = " + diff.to_string(3), true);
    }

    void duality(int m, int k) {
        exact(mk("duality", m, "m", k, "k"), reduce_family(m, k), reduce_family(k + 2, m - 2),
              "zeta(m,{1}_k) = zeta(k+2,{1}_{m-2})");
    }

    void table(int n) {
        exact("table/I_" + std::to_string(n), reduce_triangle(n), tabulated_triangle(n), "matches tabulated value");
    }

    void closed_forms() {
        const int W = opts_.max_weight;
        if (W >= 3) {
            std::string name = "closed_form/zeta(2,1)";
            ZetaPoly lhs = reduce_family(2, 1);
            perturb(name, lhs);
            bool ok = lhs == ZetaPoly::zeta(3);
            add(name, ok, ok ? "= zeta(3) exactly" : "got " + lhs.to_string());
        }
        if (W >= 4) {
            exact("closed_form/zeta(3,1)", reduce_family(3, 1), ZetaPoly::zeta(4) * Rational(1, 4), "= zeta(4)/4");
            exact("closed_form/zeta(2,1,1)", reduce_family(2, 2), ZetaPoly::zeta(4), "= zeta(4)");
        }
    }

    void log_integral(int k, int l) {
        std::string name = mk("log_integral", k, "k", l, "l");
        try {
            QuadResult q = lemma1_numeric(k, l, ctx_);
            Rational scale(factorial(k) * factorial(l));
            numeric(name, q.value, HighPrec(scale, ctx_.bits()) * eval_poly(reduce_family(l + 1, k), ctx_), tol_);
        } catch (const QuadratureError& e) {
            add(name, false, e.what());
        }
    }

    void triangle(int n) {
        HighPrec reference = eval_poly(reduce_triangle(n), ctx_);
        std::string semi_name = "triangle_semi/n=" + std::to_string(n);
        std::optional<QuadResult> semi;
        try {
            semi = triangle_semi(n, ctx_);
            numeric(semi_name, semi->value, reference, tol_);
        } catch (const QuadratureError& e) {
            add(semi_name, false, e.what());
        }
        if (n > 4) {
            return;
        }
        std::string name = "triangle_2d/n=" + std::to_string(n);
        try {
            QuadResult q = triangle_2d(n, ctx_);
            numeric(name, q.value, reference, HighPrec(1e-6, ctx_.bits()));
            if (semi) {
                numeric("triangle_routes/n=" + std::to_string(n), q.value, semi->value, q.est_error + semi->est_error);
            }
        } catch (const QuadratureError& e) {
            add(name, false, e.what());
        }
    }

    void nested(int m, int k) {
        std::string name = mk("nested_sum", m, "m", k, "k");
        if (opts_.sum_limit < k + 2) {
            add(name, false, "sum limit below k+2");
            return;
        }
        NestedSum s = mzv_nested_sum(m, k, opts_.sum_limit, ctx_);
        numeric(name, s.value, eval_poly(reduce_family(m, k), ctx_), s.tail_bound);
    }

    VerifyOptions opts_;
    EvalContext ctx_;
    HighPrec tol_;
    bool faulted_ = false;
    VerifyReport report_;
};

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.max_weight < 2) {
        throw std::invalid_argument("verify: max weight must be >= 2");
    }
    if (options.max_weight > 14) {
        throw std::invalid_argument("verify: max weight above 14 is not supported");
    }
    return Verifier(options).run();
}

OutputRecord cmd_verify(const VerifyOptions& options) {
    auto start = Clock::now();
    VerifyReport report = run_verification(options);
    OutputRecord r{"verify-report"};
    r.payload["max_weight"] = report.max_weight;
    r.payload["passed"] = report.all_passed();
    Json checks = Json::array();
    int flagged = 0;
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"flagged", c.flagged}, {"detail", c.detail}});
        flagged += c.flagged ? 1 : 0;
    }
    r.payload["checks"] = std::move(checks);
    r.payload["summary"] = {{"total", static_cast<int>(report.checks.size())}, {"failed", report.failed()},
                            {"flagged", flagged}};
    r.metadata = metadata(EvalContext(options.digits, options.sum_limit), "cross-verification", start);
    r.metadata["sum_limit"] = options.sum_limit;
    return r;
}

}  // namespace mzv
