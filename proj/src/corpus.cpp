#include "vnum/corpus.hpp"

#include <string>

#include "vnum/errors.hpp"

namespace vnum {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

const char* kLetters[4] = {"x", "y", "z", "w"};

}  // namespace

RingContext randomRing(std::mt19937_64& rng, const CorpusOptions& options) {
    if (options.minVars == 0 || options.minVars > options.maxVars)
        throw StructureError("corpus variable range is empty");
    std::size_t vars = static_cast<std::size_t>(draw(rng, options.minVars, options.maxVars));
    std::vector<std::string> names;
    names.reserve(vars);
    for (std::size_t i = 0; i < vars; ++i)
        names.push_back(i < 4 ? std::string(kLetters[i]) : "x" + std::to_string(i));
    std::vector<std::uint64_t> weights;
    weights.reserve(vars);
    for (std::size_t i = 0; i < vars; ++i)
        weights.push_back(options.maxWeight <= 1 ? 1 : draw(rng, 1, options.maxWeight));
    return RingContext(std::move(names), std::move(weights));
}

MonomialIdeal randomIdeal(std::mt19937_64& rng, const RingContext& ring,
                          const CorpusOptions& options) {
    if (options.minGens == 0 || options.minGens > options.maxGens)
        throw StructureError("corpus generator range is empty");
    if (options.maxExponent == 0)
        throw StructureError("corpus exponent bound must be >= 1");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::size_t count = static_cast<std::size_t>(
            draw(rng, options.minGens, options.maxGens));
        std::vector<Monomial> gens;
        gens.reserve(count);
        for (std::size_t g = 0; g < count; ++g) {
            std::vector<std::uint64_t> exps(ring.varCount());
            bool allZero = true;
            do {
                allZero = true;
                for (auto& e : exps) {
                    e = draw(rng, 0, options.maxExponent);
                    if (e > 0) allZero = false;
                }
            } while (allZero);
            gens.emplace_back(std::move(exps));
        }
        MonomialIdeal ideal = MonomialIdeal::fromGenerators(ring, std::move(gens));
        std::size_t kept = ideal.generators().size();
        if (kept >= options.minGens && kept <= options.maxGens && ideal.isProper())
            return ideal;
    }
    throw InternalError("random ideal generation failed to land in the generator range");
}

std::vector<MonomialIdeal> generateCorpus(std::uint64_t seed, std::size_t count,
                                          const CorpusOptions& options) {
    std::mt19937_64 rng(seed);
    std::vector<MonomialIdeal> corpus;
    corpus.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RingContext ring = randomRing(rng, options);
        corpus.push_back(randomIdeal(rng, ring, options));
    }
    return corpus;
}

}  // namespace vnum
