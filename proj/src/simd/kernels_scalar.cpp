#include <cmath>

#include "kernels_impl.hpp"

namespace mzv::simd::scalar {

double triangle_inner_sum(const double* offsets, const double* weights, std::size_t count, double outer,
                          double outer_c, double neg_log_outer, int n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        double y = outer_c + outer * offsets[i];
        double L = neg_log_outer - std::log(y);
        double p = 1.0;
        for (int e = 0; e < n; ++e) {
            p *= L;
        }
        sum += weights[i] * p / y;
    }
    return sum;
}

void log_array(const double* in, double* out, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = std::log(in[i]);
    }
}

}  // namespace mzv::simd::scalar
