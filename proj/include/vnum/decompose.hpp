#pragma once

#include <cstddef>
#include <vector>

#include "vnum/ideal.hpp"
#include "vnum/prime.hpp"

namespace vnum {

struct DecomposeOptions {
    /// Abort with ResourceError once the decomposition would produce more
    /// components (or hold more in-flight subproblems) than this.
    std::size_t maxComponents = 100000;
};

/// An irreducible monomial ideal: every generator is a pure power of a single
/// variable, at most one per variable.
struct IrreducibleComponent {
    MonomialIdeal ideal;
    std::vector<std::size_t> support;

    bool operator==(const IrreducibleComponent&) const = default;
};

/// Irredundant irreducible decomposition by recursive generator splitting:
/// a generator with coprime non-unit factors u, v gives I = (I+(u)) n (I+(v));
/// recursion stops when every generator is a pure power. Redundant components
/// (those containing the intersection of the others) are discarded.
///
/// Requires I proper and non-zero.
std::vector<IrreducibleComponent> irreducibleDecomposition(const MonomialIdeal& ideal,
                                                           const DecomposeOptions& options = {});

/// Ass(R/I) for a monomial ideal: the supports of the components of an
/// irredundant irreducible decomposition, in deterministic order (support
/// size, then lexicographic on sorted indices).
std::vector<MonomialPrime> associatedPrimes(const MonomialIdeal& ideal,
                                            const DecomposeOptions& options = {});

}  // namespace vnum
