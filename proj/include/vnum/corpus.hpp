#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vnum/ideal.hpp"
#include "vnum/ring.hpp"

namespace vnum {

/// Knobs for random test-ideal generation. Defaults match the acceptance
/// corpus: 2-4 variables, 2-6 minimal generators, exponents up to 4, unit
/// weights.
struct CorpusOptions {
    std::size_t minVars = 2;
    std::size_t maxVars = 4;
    std::size_t minGens = 2;
    std::size_t maxGens = 6;
    std::uint64_t maxExponent = 4;
    std::uint64_t maxWeight = 1;
};

/// Random ring with a variable count and weights drawn from `options`.
/// Deterministic for a fixed engine state on every platform (raw modulo on
/// the raw 64-bit draws; no distribution objects).
RingContext randomRing(std::mt19937_64& rng, const CorpusOptions& options = {});

/// Random non-zero proper monomial ideal whose minimal generator count lands
/// in [minGens, maxGens]. Draws are rejected and retried until that holds.
MonomialIdeal randomIdeal(std::mt19937_64& rng, const RingContext& ring,
                          const CorpusOptions& options = {});

/// `count` ideals over independently drawn rings, seeded once.
std::vector<MonomialIdeal> generateCorpus(std::uint64_t seed, std::size_t count,
                                          const CorpusOptions& options = {});

}  // namespace vnum
