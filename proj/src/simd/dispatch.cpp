#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"
#include "mzv/simd/kernels.hpp"

namespace mzv::simd {

namespace {

bool cpu_has_avx2() {
#if defined(MZV_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::atomic<int>& active_slot() {
    static std::atomic<int> slot{static_cast<int>(detect_isa())};
    return slot;
}

void check_sizes(std::size_t a, std::size_t b) {
    if (a != b) {
        throw std::invalid_argument("simd kernel: span sizes differ");
    }
}

}  // namespace

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
            return cpu_has_avx2();
    }
    return false;
}

Isa detect_isa() {
    if (const char* forced = std::getenv("MZV_SIMD"); forced && std::strcmp(forced, "scalar") == 0) {
        return Isa::scalar;
    }
    return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

Isa active_isa() { return static_cast<Isa>(active_slot().load(std::memory_order_relaxed)); }

void set_active_isa(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::invalid_argument(std::string("set_active_isa: ") + isa_name(isa) + " not supported here");
    }
    active_slot().store(static_cast<int>(isa), std::memory_order_relaxed);
}

double triangle_inner_sum(Isa isa, std::span<const double> offsets, std::span<const double> weights,
                          double outer, double outer_c, double neg_log_outer, int n) {
    check_sizes(offsets.size(), weights.size());
#if defined(MZV_HAVE_AVX2)
    if (isa == Isa::avx2) {
        return avx2::triangle_inner_sum(offsets.data(), weights.data(), offsets.size(), outer, outer_c,
                                        neg_log_outer, n);
    }
#endif
    (void)isa;
    return scalar::triangle_inner_sum(offsets.data(), weights.data(), offsets.size(), outer, outer_c,
                                      neg_log_outer, n);
}

double triangle_inner_sum(std::span<const double> offsets, std::span<const double> weights, double outer,
                          double outer_c, double neg_log_outer, int n) {
    return triangle_inner_sum(active_isa(), offsets, weights, outer, outer_c, neg_log_outer, n);
}

void log_array(Isa isa, std::span<const double> in, std::span<double> out) {
    check_sizes(in.size(), out.size());
#if defined(MZV_HAVE_AVX2)
    if (isa == Isa::avx2) {
        avx2::log_array(in.data(), out.data(), in.size());
        return;
    }
#endif
    (void)isa;
    scalar::log_array(in.data(), out.data(), in.size());
}

}  // namespace mzv::simd
