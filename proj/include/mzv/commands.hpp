#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mzv/numerics.hpp"
#include "mzv/records.hpp"

namespace mzv {

enum class ReduceMethod { kolbig, genfunc };
enum class IntegrationMethod { semi, two_d };

ReduceMethod parse_reduce_method(const std::string& name);
IntegrationMethod parse_integration_method(const std::string& name);

/// zeta(m, {1}_k) as an exact polynomial plus its value. The genfunc method
/// requires m+k <= series_cap.
OutputRecord cmd_reduce(int m, int k, ReduceMethod method, bool normalize, const EvalContext& ctx,
                        int series_cap = 10);

/// The MZV combination n! sum_k zeta(n-k+2, {1}_k) for I_n, its reduction
/// (raw, normalized, compact) and numeric value.
OutputRecord cmd_triangle(int n, const EvalContext& ctx);

/// Numeric I_n by quadrature, compared with the value of its reduction.
/// Propagates QuadratureError.
OutputRecord cmd_integrate(int n, IntegrationMethod method, const EvalContext& ctx);

/// Nested-sum partial value of zeta(m, {1}_k) with N = ctx.sum_limit() and
/// its tail bound, compared with the reduction.
OutputRecord cmd_eval(int m, int k, const EvalContext& ctx);

struct VerifyOptions {
    int max_weight = 10;
    int digits = EvalContext::kDefaultDigits;
    long sum_limit = EvalContext::kDefaultSumLimit;
    /// Perturbs the input of the first check whose name starts with this
    /// prefix; used to exercise the failure path.
    std::optional<std::string> inject_fault;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Set when an exact comparison failed and the numeric fallback decided.
    bool flagged = false;
    std::string detail;
};

struct VerifyReport {
    int max_weight = 0;
    std::vector<CheckResult> checks;  // sorted by name

    bool all_passed() const;
    int failed() const;
};

/// Cross-checks for every family member up to max_weight: Kolbig against
/// the generating function (after normalize_even, with a 40-digit numeric
/// fallback), duality, the I_0..I_4 table, closed forms, log-power
/// integrals, both triangle quadratures and nested sums. Numeric checks are
/// limited to the sizes where they are cheap (log-power integrals
/// k+l <= 7, triangle n <= 6 semi / n <= 4 2d, nested sums m+k <= 7).
VerifyReport run_verification(const VerifyOptions& options);

OutputRecord cmd_verify(const VerifyOptions& options);

}  // namespace mzv
