#pragma once

#include <cstdint>
#include <vector>

#include "vnum/monomial.hpp"
#include "vnum/ring.hpp"

namespace vnum {

/// A monomial ideal, stored as its unique minimal generating set in canonical
/// order. Because the stored form is canonical, structural equality of two
/// MonomialIdeal values coincides with equality as ideals.
///
/// The empty generator set encodes the zero ideal; the single generator 1
/// encodes the unit ideal R.
class MonomialIdeal {
public:
    static MonomialIdeal zero(RingContext ring) { return MonomialIdeal(std::move(ring), {}); }

    static MonomialIdeal unit(RingContext ring) {
        std::size_t n = ring.varCount();
        return MonomialIdeal(std::move(ring), {Monomial::one(n)});
    }

    /// Minimalize: keep the divisibility-minimal elements of `gens`, sorted
    /// canonically. Generates the same ideal as `gens`.
    static MonomialIdeal fromGenerators(RingContext ring, std::vector<Monomial> gens);

    const RingContext& ring() const noexcept { return ring_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }

    bool isZero() const noexcept { return gens_.empty(); }
    bool isUnit() const noexcept { return gens_.size() == 1 && gens_.front().isOne(); }
    bool isProper() const noexcept { return !isUnit(); }

    /// Monomial membership: some generator divides m.
    bool contains(const Monomial& m) const;

    /// Ideal containment: other is a subset of this ideal.
    bool contains(const MonomialIdeal& other) const;

    /// Largest weighted degree among the minimal generators (0 if none).
    std::uint64_t maxGeneratorDegree() const;

    /// Weighted degrees of the minimal generators, in canonical order.
    std::vector<std::uint64_t> generatorDegrees() const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    MonomialIdeal(RingContext ring, std::vector<Monomial> canonicalGens)
        : ring_(std::move(ring)), gens_(std::move(canonicalGens)) {}

    RingContext ring_;
    std::vector<Monomial> gens_;
};

/// Free-function spelling of the canonical constructor.
inline MonomialIdeal minimalize(std::vector<Monomial> gens, const RingContext& ring) {
    return MonomialIdeal::fromGenerators(ring, std::move(gens));
}

/// I + J, minimalized.
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// I * J: pairwise products of generators, minimalized.
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^n for n >= 1, by iterated products with minimalization after each step.
MonomialIdeal power(const MonomialIdeal& a, std::uint64_t n);

/// I n J: pairwise least common multiples of generators, minimalized.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// I : m for a single monomial m, via the generator formula g/gcd(g,m).
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);

/// I : J = {f : f*J in I}; intersection of the single-monomial colons over
/// J's generators. J must be non-zero.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

struct Saturation {
    MonomialIdeal ideal;  ///< I : J^infinity
    std::uint64_t index;  ///< least m with I:J^m = I:J^(m+1)
};

/// Stable value of the chain I : J^m, computed by iterating colon until a
/// fixpoint. J must be non-zero; saturating by the unit ideal returns (I, 0).
Saturation saturate(const MonomialIdeal& a, const MonomialIdeal& b);

namespace detail {
inline void requireSameRing(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.ring() == b.ring()))
        throw StructureError("ideals belong to different rings");
}
}  // namespace detail

}  // namespace vnum
