#include "vnum/ideal.hpp"

#include <algorithm>
#include <utility>

namespace vnum {

namespace {

// Sort by (weighted degree, canonical tie-break) and drop duplicates.
// Degrees are computed once up front.
std::vector<Monomial> sortedUnique(const RingContext& ring, std::vector<Monomial> gens) {
    std::vector<std::pair<std::uint64_t, Monomial>> keyed;
    keyed.reserve(gens.size());
    for (auto& g : gens)
        keyed.emplace_back(weightedDegree(g, ring), std::move(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return std::lexicographical_compare(b.second.exponents().begin(),
                                            b.second.exponents().end(),
                                            a.second.exponents().begin(),
                                            a.second.exponents().end());
    });
    std::vector<Monomial> out;
    out.reserve(keyed.size());
    for (auto& [deg, m] : keyed) {
        if (out.empty() || !(out.back() == m)) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

MonomialIdeal MonomialIdeal::fromGenerators(RingContext ring, std::vector<Monomial> gens) {
    for (const auto& g : gens) {
        if (g.varCount() != ring.varCount())
            throw StructureError("generator length does not match ring");
    }
    std::vector<Monomial> sorted = sortedUnique(ring, std::move(gens));
    // A divisor never has larger weighted degree, and equal degree plus
    // divisibility forces equality (weights are positive), so it is enough
    // to test each monomial against the already kept ones.
    std::vector<Monomial> kept;
    kept.reserve(sorted.size());
    for (auto& m : sorted) {
        bool dominated = false;
        for (const auto& k : kept) {
            if (divides(k, m)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(std::move(m));
    }
    return MonomialIdeal(std::move(ring), std::move(kept));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.varCount() != ring_.varCount())
        throw StructureError("monomial length does not match ring");
    for (const auto& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    detail::requireSameRing(*this, other);
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

std::uint64_t MonomialIdeal::maxGeneratorDegree() const {
    std::uint64_t d = 0;
    for (const auto& g : gens_)
        d = std::max(d, weightedDegree(g, ring_));
    return d;
}

std::vector<std::uint64_t> MonomialIdeal::generatorDegrees() const {
    std::vector<std::uint64_t> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_)
        out.push_back(weightedDegree(g, ring_));
    return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::requireSameRing(a, b);
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::fromGenerators(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::requireSameRing(a, b);
    if (a.isZero() || b.isZero()) return MonomialIdeal::zero(a.ring());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& f : a.generators())
        for (const auto& g : b.generators())
            gens.push_back(product(f, g));
    return MonomialIdeal::fromGenerators(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, std::uint64_t n) {
    if (n == 0)
        throw DomainError("power exponent must be >= 1");
    MonomialIdeal result = a;
    for (std::uint64_t k = 1; k < n; ++k)
        result = product(result, a);
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::requireSameRing(a, b);
    if (a.isZero() || b.isZero()) return MonomialIdeal::zero(a.ring());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& f : a.generators())
        for (const auto& g : b.generators())
            gens.push_back(lcm(f, g));
    return MonomialIdeal::fromGenerators(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
    if (m.varCount() != a.ring().varCount())
        throw StructureError("monomial length does not match ring");
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size());
    for (const auto& g : a.generators())
        gens.push_back(colonQuotient(g, m));
    return MonomialIdeal::fromGenerators(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::requireSameRing(a, b);
    if (b.isZero())
        throw DomainError("colon by the zero ideal is not supported");
    MonomialIdeal result = colon(a, b.generators().front());
    for (std::size_t i = 1; i < b.generators().size(); ++i)
        result = intersect(result, colon(a, b.generators()[i]));
    return result;
}

Saturation saturate(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::requireSameRing(a, b);
    if (b.isZero())
        throw DomainError("saturation by the zero ideal is not supported");
    // Chain a : b^m; monomial ideal chains in a fixed ring stabilize.
    MonomialIdeal prev = a;
    std::uint64_t index = 0;
    for (;;) {
        MonomialIdeal next = colon(prev, b);
        if (next == prev) return Saturation{std::move(prev), index};
        prev = std::move(next);
        ++index;
    }
}

}  // namespace vnum
