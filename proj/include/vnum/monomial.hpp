#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "vnum/errors.hpp"
#include "vnum/ring.hpp"

namespace vnum {

namespace detail {

inline std::uint64_t checkedAdd(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw OverflowError("integer overflow in exponent/degree addition");
    return a + b;
}

inline std::uint64_t checkedMul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw OverflowError("integer overflow in exponent/degree multiplication");
    return a * b;
}

}  // namespace detail

/// A monomial as an exponent vector over a fixed ring context. The all-zeros
/// vector is the unit monomial 1. The ring itself is passed separately to the
/// operations that need weights or variable names.
class Monomial {
public:
    explicit Monomial(std::vector<std::uint64_t> exponents) : exps_(std::move(exponents)) {}

    static Monomial one(std::size_t varCount) {
        return Monomial(std::vector<std::uint64_t>(varCount, 0));
    }

    /// x_i^e in a ring with `varCount` variables.
    static Monomial varPower(std::size_t varCount, std::size_t i, std::uint64_t e) {
        std::vector<std::uint64_t> v(varCount, 0);
        v.at(i) = e;
        return Monomial(std::move(v));
    }

    std::size_t varCount() const noexcept { return exps_.size(); }
    std::uint64_t exponent(std::size_t i) const { return exps_.at(i); }
    const std::vector<std::uint64_t>& exponents() const noexcept { return exps_; }

    bool isOne() const {
        return std::all_of(exps_.begin(), exps_.end(), [](std::uint64_t e) { return e == 0; });
    }

    /// Variable indices with a positive exponent, ascending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0) s.push_back(i);
        return s;
    }

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::uint64_t> exps_;
};

namespace detail {
inline void requireSameVarCount(const Monomial& a, const Monomial& b) {
    if (a.varCount() != b.varCount())
        throw StructureError("monomials have different variable counts");
}
}  // namespace detail

/// a | b componentwise.
inline bool divides(const Monomial& a, const Monomial& b) {
    detail::requireSameVarCount(a, b);
    for (std::size_t i = 0; i < a.varCount(); ++i)
        if (a.exponents()[i] > b.exponents()[i]) return false;
    return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    detail::requireSameVarCount(a, b);
    std::vector<std::uint64_t> e(a.varCount());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    detail::requireSameVarCount(a, b);
    std::vector<std::uint64_t> e(a.varCount());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

inline Monomial product(const Monomial& a, const Monomial& b) {
    detail::requireSameVarCount(a, b);
    std::vector<std::uint64_t> e(a.varCount());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = detail::checkedAdd(a.exponents()[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

/// g / gcd(g, m): the exact generator formula for colon by a monomial.
inline Monomial colonQuotient(const Monomial& g, const Monomial& m) {
    detail::requireSameVarCount(g, m);
    std::vector<std::uint64_t> e(g.varCount());
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::uint64_t gi = g.exponents()[i];
        std::uint64_t mi = m.exponents()[i];
        e[i] = gi > mi ? gi - mi : 0;
    }
    return Monomial(std::move(e));
}

/// Sum of weight_i * exponent_i. Zero exactly for the unit monomial.
inline std::uint64_t weightedDegree(const Monomial& m, const RingContext& ring) {
    if (m.varCount() != ring.varCount())
        throw StructureError("monomial length does not match ring");
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < m.varCount(); ++i)
        d = detail::checkedAdd(d, detail::checkedMul(ring.weights()[i], m.exponents()[i]));
    return d;
}

/// Canonical generator order: weighted degree ascending, ties broken by
/// exponent-vector lexicographic order with the lexicographically larger
/// vector first (so in k[x,y]: x^2 before x*y before y^2).
inline bool canonicalLess(const Monomial& a, const Monomial& b, const RingContext& ring) {
    std::uint64_t da = weightedDegree(a, ring);
    std::uint64_t db = weightedDegree(b, ring);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                        a.exponents().begin(), a.exponents().end());
}

}  // namespace vnum
