#pragma once

#include <span>

// Double-precision inner loops of the iterated triangle quadrature. Each
// kernel has a portable scalar reference and, on x86-64, an AVX2+FMA
// variant chosen at runtime. Results agree to rounding (the AVX2 variant
// uses its own vectorized log and a different summation order).

namespace mzv::simd {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);

/// True if this build contains the variant and the CPU can run it.
bool isa_supported(Isa isa);

/// Best supported variant. MZV_SIMD=scalar in the environment forces the
/// scalar reference.
Isa detect_isa();

/// Variant used by the overloads without an explicit Isa. Defaults to
/// detect_isa(); set_active_isa throws std::invalid_argument for an
/// unsupported variant.
Isa active_isa();
void set_active_isa(Isa isa);

/// sum_i w_i · (neg_log_outer - ln y_i)^n / y_i with
/// y_i = outer_c + outer · offsets_i, where outer_c = 1 - outer and
/// neg_log_outer = -ln(outer). All y_i must be positive normal doubles.
/// This is the inner trapezoid sum of the triangle integrand after the
/// substitution y = 1 - outer·u (offsets hold 1 - u).
double triangle_inner_sum(Isa isa, std::span<const double> offsets, std::span<const double> weights,
                          double outer, double outer_c, double neg_log_outer, int n);
double triangle_inner_sum(std::span<const double> offsets, std::span<const double> weights, double outer,
                          double outer_c, double neg_log_outer, int n);

/// out[i] = ln(in[i]) for positive normal inputs.
void log_array(Isa isa, std::span<const double> in, std::span<double> out);

}  // namespace mzv::simd
