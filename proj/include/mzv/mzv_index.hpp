#pragma once

#include <string>
#include <vector>

#include "mzv/exact.hpp"

namespace mzv {

/// Admissible multiple zeta index (s_1, ..., s_l): s_1 >= 2, every s_i >= 1.
class MzvIndex {
public:
    /// Throws std::invalid_argument for an empty or inadmissible index.
    explicit MzvIndex(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int depth() const { return static_cast<int>(parts_.size()); }

    /// True when the index has the shape (m, 1, ..., 1).
    bool in_family() const;
    /// For (m, {1}_k): m and k. Only meaningful when in_family().
    int family_head() const { return parts_.front(); }
    int family_ones() const { return depth() - 1; }

    /// "zeta(3,1)".
    std::string to_string() const;
    /// "\zeta(3,1)".
    std::string to_latex() const;

    friend bool operator==(const MzvIndex&, const MzvIndex&) = default;

private:
    std::vector<int> parts_;
};

struct MzvTerm {
    Rational coefficient;
    MzvIndex index;
};

/// Rational combination of MZVs, terms kept in construction order.
class MzvCombination {
public:
    /// Zero coefficients are dropped.
    void add(const Rational& c, MzvIndex index);

    const std::vector<MzvTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    std::string to_string() const;
    std::string to_latex() const;

private:
    std::vector<MzvTerm> terms_;
};

/// The index (m, {1}_k). Throws std::invalid_argument when m < 2 or k < 0.
MzvIndex family_index(int m, int k);

/// Dual of (m, {1}_k) within the family: (k+2, {1}_{m-2}).
MzvIndex dual_family(int m, int k);

/// sum_{k=0}^{n} n! · zeta(n-k+2, {1}_k), terms in increasing k.
MzvCombination theorem1_combination(int n);

}  // namespace mzv
