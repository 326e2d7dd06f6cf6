#pragma once

#include <cstddef>

namespace mzv::simd {

namespace scalar {
double triangle_inner_sum(const double* offsets, const double* weights, std::size_t count, double outer,
                          double outer_c, double neg_log_outer, int n);
void log_array(const double* in, double* out, std::size_t count);
}  // namespace scalar

#if defined(MZV_HAVE_AVX2)
namespace avx2 {
double triangle_inner_sum(const double* offsets, const double* weights, std::size_t count, double outer,
                          double outer_c, double neg_log_outer, int n);
void log_array(const double* in, double* out, std::size_t count);
}  // namespace avx2
#endif

}  // namespace mzv::simd
