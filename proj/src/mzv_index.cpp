#include "mzv/mzv_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mzv {

MzvIndex::MzvIndex(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw std::invalid_argument("MzvIndex: empty index");
    }
    if (parts_.front() < 2) {
        throw std::invalid_argument("MzvIndex: first part must be >= 2 for convergence");
    }
    if (std::any_of(parts_.begin(), parts_.end(), [](int s) { return s < 1; })) {
        throw std::invalid_argument("MzvIndex: parts must be positive");
    }
}

int MzvIndex::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool MzvIndex::in_family() const {
    return std::all_of(parts_.begin() + 1, parts_.end(), [](int s) { return s == 1; });
}

namespace {

std::string join_parts(const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += std::to_string(parts[i]);
    }
    return out;
}

std::string coefficient_prefix(const Rational& mag, bool latex) {
    if (mag == Rational(1)) {
        return "";
    }
    if (mag.is_integer()) {
        return mag.to_string() + (latex ? "" : "·");
    }
    if (latex) {
        return "\\frac{" + mag.numerator().get_str() + "}{" + mag.denominator().get_str() + "}";
    }
    return "(" + mag.to_string() + ")·";
}

template <class IndexFn>
std::string render(const std::vector<MzvTerm>& terms, bool latex, IndexFn index_text) {
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        bool neg = t.coefficient.sign() < 0;
        if (i == 0) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        out += coefficient_prefix(neg ? -t.coefficient : t.coefficient, latex);
        out += index_text(t.index);
    }
    return out;
}

}  // namespace

std::string MzvIndex::to_string() const { return "zeta(" + join_parts(parts_) + ")"; }

std::string MzvIndex::to_latex() const { return "\\zeta(" + join_parts(parts_) + ")"; }

void MzvCombination::add(const Rational& c, MzvIndex index) {
    if (!c.is_zero()) {
        terms_.push_back({c, std::move(index)});
    }
}

std::string MzvCombination::to_string() const {
    return render(terms_, false, [](const MzvIndex& i) { return i.to_string(); });
}

std::string MzvCombination::to_latex() const {
    return render(terms_, true, [](const MzvIndex& i) { return i.to_latex(); });
}

MzvIndex family_index(int m, int k) {
    if (m < 2) {
        throw std::invalid_argument("family_index: m must be >= 2, got " + std::to_string(m));
    }
    if (k < 0) {
        throw std::invalid_argument("family_index: k must be >= 0, got " + std::to_string(k));
    }
    std::vector<int> parts(static_cast<std::size_t>(k) + 1, 1);
    parts[0] = m;
    return MzvIndex(std::move(parts));
}

MzvIndex dual_family(int m, int k) {
    if (m < 2 || k < 0) {
        throw std::invalid_argument("dual_family: need m >= 2 and k >= 0");
    }
    return family_index(k + 2, m - 2);
}

MzvCombination theorem1_combination(int n) {
    if (n < 0) {
        throw std::invalid_argument("theorem1_combination: n must be >= 0");
    }
    Rational coeff(factorial(n));
    MzvCombination out;
    for (int k = 0; k <= n; ++k) {
        out.add(coeff, family_index(n - k + 2, k));
    }
    return out;
}

}  // namespace mzv
