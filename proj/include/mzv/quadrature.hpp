#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "mzv/highprec.hpp"
#include "mzv/numerics.hpp"

namespace mzv {

struct QuadResult {
    HighPrec value;
    /// |S_j - S_{j-1}| for the last two refinement levels (summed over parts
    /// for composite results).
    HighPrec est_error;
    int levels_used = 0;
};

/// Raised when refinement hits the level cap or the integrand returns a
/// non-finite value. Carries the last estimate when one exists.
class QuadratureError : public std::runtime_error {
public:
    enum class Kind { non_convergence, non_finite };

    QuadratureError(Kind kind, const std::string& what, QuadResult last)
        : std::runtime_error(what), kind_(kind), last_(std::move(last)) {}

    Kind kind() const { return kind_; }
    const QuadResult& last() const { return last_; }

private:
    Kind kind_;
    QuadResult last_;
};

/// Integrand on (0,1), called with both x and 1-x so that log factors near
/// either endpoint keep full relative accuracy.
using Integrand = std::function<HighPrec(const HighPrec& x, const HighPrec& one_minus_x)>;

constexpr int kDefaultMaxLevel = 12;

/// Tanh-sinh quadrature on (0,1): x = (1 + tanh(pi/2 sinh t))/2, trapezoid
/// step halved per level (h = 2^-level) until two successive levels differ
/// by less than `target`. At least three levels are always computed. Node
/// tables are cached per precision.
QuadResult de_quad(const Integrand& f, const HighPrec& target, const EvalContext& ctx,
                   int max_level = kDefaultMaxLevel);

/// Default 1D target 10^-(digits-10), i.e. 1e-25 at 35 digits.
HighPrec default_target(const EvalContext& ctx);

/// int_0^1 x^n1 (-ln x)^l dx; exact value l!/(n1+1)^{l+1}.
QuadResult moment_numeric(int n1, int l, const EvalContext& ctx);

/// int_0^1 (-ln(1-x))^k/(1-x) · (-ln x)^l dx. Rejects l < 1 and k < 0.
QuadResult lemma1_numeric(int k, int l, const EvalContext& ctx);

/// Triangle integral through its single-integral form
///   sum_k C(n,k)/(n-k+1) int_0^1 (-ln(1-x))^k/(1-x) · (-ln x)^{n-k+1} dx.
QuadResult triangle_semi(int n, const EvalContext& ctx);

enum class Orientation { xy, yx };

/// Triangle integral as a fully numeric iterated integral in double
/// precision: outer tanh-sinh over one coordinate, inner tanh-sinh over the
/// other on (1-outer, 1). `Orientation::yx` swaps which coordinate is
/// outer. Inner tolerance is target/10.
QuadResult triangle_2d(int n, const EvalContext& ctx, double target = 1e-6,
                       Orientation orientation = Orientation::xy);

}  // namespace mzv
