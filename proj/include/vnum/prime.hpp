#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "vnum/ideal.hpp"
#include "vnum/ring.hpp"

namespace vnum {

/// A monomial prime: the ideal generated by a non-empty subset of the
/// variables. These are the only primes that occur as associated primes of
/// monomial ideals.
class MonomialPrime {
public:
    MonomialPrime(RingContext ring, std::vector<std::size_t> support)
        : ring_(std::move(ring)), support_(std::move(support)) {
        std::sort(support_.begin(), support_.end());
        support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
        if (support_.empty())
            throw StructureError("monomial prime needs a non-empty support");
        if (support_.back() >= ring_.varCount())
            throw StructureError("prime support index out of range");
    }

    const RingContext& ring() const noexcept { return ring_; }
    const std::vector<std::size_t>& support() const noexcept { return support_; }

    MonomialIdeal toIdeal() const {
        std::vector<Monomial> gens;
        gens.reserve(support_.size());
        for (std::size_t i : support_)
            gens.push_back(Monomial::varPower(ring_.varCount(), i, 1));
        return MonomialIdeal::fromGenerators(ring_, std::move(gens));
    }

    bool contains(const MonomialPrime& other) const {
        return std::includes(support_.begin(), support_.end(),
                             other.support_.begin(), other.support_.end());
    }

    bool strictlyContains(const MonomialPrime& other) const {
        return support_.size() > other.support_.size() && contains(other);
    }

    bool operator==(const MonomialPrime&) const = default;

private:
    RingContext ring_;
    std::vector<std::size_t> support_;
};

/// Deterministic prime order: support size, then lexicographic on the sorted
/// index sets.
inline bool primeLess(const MonomialPrime& a, const MonomialPrime& b) {
    if (a.support().size() != b.support().size())
        return a.support().size() < b.support().size();
    return a.support() < b.support();
}

}  // namespace vnum
