#pragma once

#include <cstdint>
#include <vector>

#include "vnum/decompose.hpp"
#include "vnum/ideal.hpp"
#include "vnum/monomial.hpp"
#include "vnum/prime.hpp"

namespace vnum {

/// Outcome of a v-invariant computation at a prime P.
///
/// `value` is the least weighted degree of a monomial f with I : f = P;
/// `witness` realizes it (witness is never in I, and colon(I, (witness)) = P
/// exactly). `xp` is the set of associated primes strictly containing P and
/// `obstruction` the ideal (I:P) n (I:Q^inf) used to locate the witness.
struct VResult {
    std::uint64_t value;
    Monomial witness;
    MonomialIdeal obstruction;
    std::vector<MonomialPrime> xp;
};

/// The members of `assSet` whose support strictly contains P's support.
/// P itself must be a member, otherwise NotAssociatedError.
std::vector<MonomialPrime> strictlyContaining(const MonomialPrime& p,
                                              const std::vector<MonomialPrime>& assSet);

/// D = (I : P) n (I : Q^inf) with Q the product of the primes in `xp`
/// (Q = R when xp is empty, which forces D = I). Satisfies I c D c I:P.
MonomialIdeal obstructionIdeal(const MonomialIdeal& ideal, const MonomialPrime& p,
                               const std::vector<MonomialPrime>& xp);

/// v_P(I) via the colon/saturation characterization: with C = I:P and D the
/// obstruction ideal, the value is the least weighted degree of a minimal
/// generator of C outside D, and that generator is the witness. The witness
/// identity colon(I, (witness)) = P is re-verified and raises InternalError
/// if it fails.
///
/// Throws NotAssociatedError when P is not an associated prime of I.
VResult vInvariant(const MonomialIdeal& ideal, const MonomialPrime& p);

/// Same, with a caller-supplied Ass(R/I); a stale set surfaces as
/// NotAssociatedError.
VResult vInvariant(const MonomialIdeal& ideal, const MonomialPrime& p,
                   const std::vector<MonomialPrime>& assSet);

/// Independent brute force straight from the definition: enumerate monomials
/// f by weighted degree 0, 1, ... up to degreeBound (canonical order within
/// each degree) and return the first with colon(I, (f)) = P. Throws
/// OracleBoundError when no witness exists within the bound.
VResult vOracle(const MonomialIdeal& ideal, const MonomialPrime& p, std::uint64_t degreeBound);

/// Default enumeration bound: 2 * (max generator degree) + sum of weights.
std::uint64_t defaultOracleBound(const MonomialIdeal& ideal);

/// A bound guaranteed to contain the witness: the witness is a minimal
/// generator of I:P, so max generator degree of I plus
/// varCount * maxWeight * (max exponent among the generators of I:P) is safe.
std::uint64_t safeOracleBound(const MonomialIdeal& ideal, const MonomialPrime& p);

/// All monomials of exact weighted degree `degree`, in canonical order.
std::vector<Monomial> monomialsOfDegree(const RingContext& ring, std::uint64_t degree);

}  // namespace vnum
