#include "vnum/vinvariant.hpp"

#include <algorithm>
#include <utility>

namespace vnum {

namespace {

void requireProperNonZero(const MonomialIdeal& ideal) {
    if (ideal.isZero())
        throw DomainError("v-invariant requires a non-zero ideal");
    if (ideal.isUnit())
        throw DomainError("v-invariant requires a proper ideal");
}

MonomialIdeal productOfPrimes(const RingContext& ring, const std::vector<MonomialPrime>& primes) {
    MonomialIdeal q = MonomialIdeal::unit(ring);
    for (const auto& p : primes)
        q = product(q, p.toIdeal());
    return q;
}

void enumerateDegree(const RingContext& ring, std::uint64_t remaining, std::size_t var,
                     std::vector<std::uint64_t>& current, std::vector<Monomial>& out) {
    if (var + 1 == ring.varCount()) {
        std::uint64_t w = ring.weights()[var];
        if (remaining % w == 0) {
            current[var] = remaining / w;
            out.emplace_back(current);
        }
        return;
    }
    std::uint64_t w = ring.weights()[var];
    for (std::uint64_t e = remaining / w + 1; e-- > 0;) {
        current[var] = e;
        enumerateDegree(ring, remaining - e * w, var + 1, current, out);
    }
    current[var] = 0;
}

}  // namespace

std::vector<MonomialPrime> strictlyContaining(const MonomialPrime& p,
                                              const std::vector<MonomialPrime>& assSet) {
    bool member = false;
    for (const auto& q : assSet)
        if (q == p) {
            member = true;
            break;
        }
    if (!member)
        throw NotAssociatedError("prime is not in the supplied associated-prime set");
    std::vector<MonomialPrime> xp;
    for (const auto& q : assSet)
        if (q.strictlyContains(p)) xp.push_back(q);
    return xp;
}

MonomialIdeal obstructionIdeal(const MonomialIdeal& ideal, const MonomialPrime& p,
                               const std::vector<MonomialPrime>& xp) {
    requireProperNonZero(ideal);
    MonomialIdeal c = colon(ideal, p.toIdeal());
    MonomialIdeal q = productOfPrimes(ideal.ring(), xp);
    return intersect(c, saturate(ideal, q).ideal);
}

namespace {

/// Shared implementation. Failures of the witness verification are an
/// engine bug when the associated primes were computed here, but a stale
/// caller-supplied set when they were not; `trustedAss` picks the error.
VResult vInvariantImpl(const MonomialIdeal& ideal, const MonomialPrime& p,
                       const std::vector<MonomialPrime>& assSet, bool trustedAss) {
    requireProperNonZero(ideal);
    std::vector<MonomialPrime> xp = strictlyContaining(p, assSet);

    MonomialIdeal target = p.toIdeal();
    MonomialIdeal c = colon(ideal, target);
    MonomialIdeal q = productOfPrimes(ideal.ring(), xp);
    MonomialIdeal d = intersect(c, saturate(ideal, q).ideal);

    if (!d.contains(ideal) || !c.contains(d))
        throw InternalError("obstruction ideal violates I c D c I:P");

    // Generators are in canonical (degree-sorted) order, so the first one
    // outside D has minimal degree and is the canonical witness.
    for (const auto& g : c.generators()) {
        if (d.contains(g)) continue;
        if (ideal.contains(g))
            throw InternalError("v-invariant witness lies in the ideal");
        if (!(colon(ideal, g) == target)) {
            if (trustedAss)
                throw InternalError("v-invariant witness fails the colon identity");
            throw NotAssociatedError("the supplied associated-prime set appears stale");
        }
        return VResult{weightedDegree(g, ideal.ring()), g, std::move(d), std::move(xp)};
    }
    if (trustedAss)
        throw InternalError("(I:P)/(I:(P+Q^inf)) vanished for an associated prime");
    throw NotAssociatedError("the supplied associated-prime set appears stale");
}

}  // namespace

VResult vInvariant(const MonomialIdeal& ideal, const MonomialPrime& p) {
    return vInvariantImpl(ideal, p, associatedPrimes(ideal), true);
}

VResult vInvariant(const MonomialIdeal& ideal, const MonomialPrime& p,
                   const std::vector<MonomialPrime>& assSet) {
    return vInvariantImpl(ideal, p, assSet, false);
}

std::vector<Monomial> monomialsOfDegree(const RingContext& ring, std::uint64_t degree) {
    std::vector<Monomial> out;
    std::vector<std::uint64_t> current(ring.varCount(), 0);
    enumerateDegree(ring, degree, 0, current, out);
    return out;
}

VResult vOracle(const MonomialIdeal& ideal, const MonomialPrime& p, std::uint64_t degreeBound) {
    requireProperNonZero(ideal);
    MonomialIdeal target = p.toIdeal();
    for (std::uint64_t w = 0; w <= degreeBound; ++w) {
        for (const auto& f : monomialsOfDegree(ideal.ring(), w)) {
            if (!(colon(ideal, f) == target))
                continue;
            // Witness found by enumeration alone; xp and the obstruction
            // ideal are filled in for report completeness.
            std::vector<MonomialPrime> xp = strictlyContaining(p, associatedPrimes(ideal));
            return VResult{w, f, obstructionIdeal(ideal, p, xp), std::move(xp)};
        }
    }
    throw OracleBoundError("no witness of weighted degree <= " + std::to_string(degreeBound));
}

std::uint64_t defaultOracleBound(const MonomialIdeal& ideal) {
    std::uint64_t total = 0;
    for (std::uint64_t w : ideal.ring().weights())
        total = detail::checkedAdd(total, w);
    return detail::checkedAdd(detail::checkedMul(2, ideal.maxGeneratorDegree()), total);
}

std::uint64_t safeOracleBound(const MonomialIdeal& ideal, const MonomialPrime& p) {
    MonomialIdeal c = colon(ideal, p.toIdeal());
    std::uint64_t maxExp = 0;
    for (const auto& g : c.generators())
        for (std::uint64_t e : g.exponents())
            maxExp = std::max(maxExp, e);
    std::uint64_t spread = detail::checkedMul(
        detail::checkedMul(ideal.ring().varCount(), ideal.ring().maxWeight()), maxExp);
    return detail::checkedAdd(ideal.maxGeneratorDegree(), spread);
}

}  // namespace vnum
