#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mzv/exact.hpp"
#include "mzv/zeta_ring.hpp"

namespace mzv {

using Composition = std::vector<int>;
using CompositionVisitor = std::function<void(std::span<const int>)>;

/// Visits every ordered tuple (t_1..t_p) with t_i >= 2 and sum = total, in
/// lexicographic order. Visits nothing when total < 2p.
void for_each_composition_min2(int total, int p, const CompositionVisitor& visit);
std::vector<Composition> compositions_min2(int total, int p);

/// Visits every ordered tuple (l_1..l_p) with 1 <= l_i <= bounds[i] and
/// sum = l, in lexicographic order.
void for_each_bounded_composition(int l, std::span<const int> bounds, const CompositionVisitor& visit);
std::vector<Composition> bounded_compositions(int l, std::span<const int> bounds);

/// H_l(t) = sum over l-compositions with 1 <= l_i <= t_i - 1 of prod C(t_i, l_i).
BigInt kolbig_h(int l, std::span<const int> t);

/// Exact value of int_0^1 (-ln(1-x))^k/(1-x) · (-ln x)^l dx as a zeta
/// polynomial of weight k+l+1. The composition sum runs over ordered tuples
/// with the 1/p! weight. Throws std::invalid_argument for k < 0 or l < 1.
ZetaPoly kolbig_integral(int k, int l);

/// zeta(m, {1}_k) = kolbig_integral(k, m-1) / (k! (m-1)!). Memoized per (m,k).
ZetaPoly reduce_family(int m, int k);

/// Reduction of the triangle integral: n! · sum_k reduce_family(n-k+2, k).
ZetaPoly reduce_triangle(int n);

}  // namespace mzv
