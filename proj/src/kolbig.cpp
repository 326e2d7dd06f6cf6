#include "mzv/kolbig.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace mzv {

namespace {

// Fills slot `pos` of `parts`; `rest` is what remains to distribute over
// slots pos..end, each of which needs at least `lo(slot)`.
template <class Lo, class Hi>
void compose(std::vector<int>& parts, std::size_t pos, int rest, const std::vector<int>& min_tail, Lo lo,
             Hi hi, const CompositionVisitor& visit) {
    if (pos == parts.size()) {
        if (rest == 0) {
            visit(parts);
        }
        return;
    }
    int tail_min = pos + 1 < parts.size() ? min_tail[pos + 1] : 0;
    int upper = std::min(hi(pos), rest - tail_min);
    for (int v = lo(pos); v <= upper; ++v) {
        parts[pos] = v;
        compose(parts, pos + 1, rest - v, min_tail, lo, hi, visit);
    }
}

std::vector<Composition> collect(const std::function<void(const CompositionVisitor&)>& run) {
    std::vector<Composition> out;
    run([&](std::span<const int> c) { out.emplace_back(c.begin(), c.end()); });
    return out;
}

}  // namespace

void for_each_composition_min2(int total, int p, const CompositionVisitor& visit) {
    if (p < 1) {
        throw std::invalid_argument("compositions_min2: p must be >= 1");
    }
    if (total < 2 * p) {
        return;
    }
    std::vector<int> parts(static_cast<std::size_t>(p));
    std::vector<int> min_tail(parts.size());
    for (int i = p - 1; i >= 0; --i) {
        min_tail[i] = 2 * (p - i);
    }
    compose(parts, 0, total, min_tail, [](std::size_t) { return 2; }, [total](std::size_t) { return total; },
            visit);
}

std::vector<Composition> compositions_min2(int total, int p) {
    return collect([&](const CompositionVisitor& v) { for_each_composition_min2(total, p, v); });
}

void for_each_bounded_composition(int l, std::span<const int> bounds, const CompositionVisitor& visit) {
    if (bounds.empty()) {
        throw std::invalid_argument("bounded_compositions: need at least one slot");
    }
    std::vector<int> parts(bounds.size());
    std::vector<int> min_tail(parts.size());
    int acc = 0;
    for (std::size_t i = parts.size(); i-- > 0;) {
        if (bounds[i] < 1) {
            return;
        }
        min_tail[i] = ++acc;
    }
    if (l < static_cast<int>(parts.size())) {
        return;
    }
    compose(parts, 0, l, min_tail, [](std::size_t) { return 1; }, [&](std::size_t i) { return bounds[i]; },
            visit);
}

std::vector<Composition> bounded_compositions(int l, std::span<const int> bounds) {
    return collect([&](const CompositionVisitor& v) { for_each_bounded_composition(l, bounds, v); });
}

BigInt kolbig_h(int l, std::span<const int> t) {
    std::vector<int> bounds;
    bounds.reserve(t.size());
    for (int ti : t) {
        bounds.push_back(ti - 1);
    }
    BigInt sum = 0;
    for_each_bounded_composition(l, bounds, [&](std::span<const int> li) {
        BigInt prod = 1;
        for (std::size_t i = 0; i < li.size(); ++i) {
            prod *= binomial(t[i], li[i]);
        }
        sum += prod;
    });
    return sum;
}

ZetaPoly kolbig_integral(int k, int l) {
    if (k < 0) {
        throw std::invalid_argument("kolbig_integral: k must be >= 0");
    }
    if (l < 1) {
        throw std::invalid_argument("kolbig_integral: l must be >= 1 (the integral diverges for l = 0)");
    }
    const int total = k + l + 1;
    ZetaPoly sum;
    BigInt p_factorial = 1;
    for (int p = 1; p <= l && 2 * p <= total; ++p) {
        p_factorial *= p;
        Rational sign_over_pfact(BigInt(p % 2 == 1 ? 1 : -1), p_factorial);
        for_each_composition_min2(total, p, [&](std::span<const int> t) {
            BigInt h = kolbig_h(l, t);
            if (h == 0) {
                return;
            }
            BigInt tprod = 1;
            for (int ti : t) {
                tprod *= ti;
            }
            sum.add_term(ZetaMonomial(std::vector<int>(t.begin(), t.end())),
                         sign_over_pfact * Rational(h, tprod));
        });
    }
    return sum * Rational(factorial(k) * factorial(l));
}

ZetaPoly reduce_family(int m, int k) {
    if (m < 2) {
        throw std::invalid_argument("reduce_family: m must be >= 2, got " + std::to_string(m));
    }
    if (k < 0) {
        throw std::invalid_argument("reduce_family: k must be >= 0, got " + std::to_string(k));
    }
    static std::mutex mu;
    static std::map<std::pair<int, int>, ZetaPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({m, k}); it != cache.end()) {
            return it->second;
        }
    }
    ZetaPoly value = kolbig_integral(k, m - 1) * Rational(BigInt(1), factorial(k) * factorial(m - 1));
    std::lock_guard lock(mu);
    return cache.try_emplace({m, k}, std::move(value)).first->second;
}

ZetaPoly reduce_triangle(int n) {
    if (n < 0) {
        throw std::invalid_argument("reduce_triangle: n must be >= 0");
    }
    ZetaPoly sum;
    for (int k = 0; k <= n; ++k) {
        sum += reduce_family(n - k + 2, k);
    }
    return sum * Rational(factorial(n));
}

}  // namespace mzv
