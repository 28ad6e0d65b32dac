#include "vnum/decompose.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace vnum {

namespace {

// Flat exponent blob of the canonical generators; unique per ideal because
// the stored form is canonical.
std::vector<std::uint64_t> idealKey(const MonomialIdeal& ideal) {
    std::vector<std::uint64_t> key;
    key.reserve(ideal.generators().size() * (ideal.ring().varCount() + 1));
    for (const auto& g : ideal.generators()) {
        key.insert(key.end(), g.exponents().begin(), g.exponents().end());
        key.push_back(~std::uint64_t{0});  // separator
    }
    return key;
}

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t v : key) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Index of the generator to split: largest support, first in canonical order
// among ties. Returns npos when every generator is a pure power.
std::size_t pickSplitGenerator(const MonomialIdeal& ideal) {
    std::size_t best = static_cast<std::size_t>(-1);
    std::size_t bestSupport = 1;
    for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
        std::size_t s = ideal.generators()[i].support().size();
        if (s > bestSupport) {
            bestSupport = s;
            best = i;
        }
    }
    return best;
}

bool componentLess(const MonomialIdeal& a, const MonomialIdeal& b) {
    // Support profile first, then the canonical generator lists.
    std::vector<std::size_t> sa, sb;
    for (const auto& g : a.generators()) sa.push_back(g.support().front());
    for (const auto& g : b.generators()) sb.push_back(g.support().front());
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        const auto& ea = a.generators()[i].exponents();
        const auto& eb = b.generators()[i].exponents();
        if (ea != eb) return ea < eb;
    }
    return false;
}

// Drop components that contain the intersection of the others. Containment
// pairs are removed first; the remaining candidates get the full test via
// prefix/suffix running intersections.
std::vector<MonomialIdeal> makeIrredundant(std::vector<MonomialIdeal> comps) {
    if (comps.size() <= 1) return comps;

    std::vector<bool> dead(comps.size(), false);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (dead[i]) continue;
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (i == j || dead[j]) continue;
            if (comps[i].contains(comps[j])) {
                dead[i] = true;
                break;
            }
        }
    }
    std::vector<MonomialIdeal> live;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!dead[i]) live.push_back(std::move(comps[i]));

    bool changed = true;
    while (changed && live.size() > 1) {
        changed = false;
        std::size_t n = live.size();
        std::vector<MonomialIdeal> prefix, suffix(n, MonomialIdeal::zero(live.front().ring()));
        prefix.reserve(n);
        MonomialIdeal acc = live[0];
        prefix.push_back(acc);
        for (std::size_t i = 1; i < n; ++i) {
            acc = intersect(acc, live[i]);
            prefix.push_back(acc);
        }
        acc = live[n - 1];
        suffix[n - 1] = acc;
        for (std::size_t i = n - 1; i-- > 0;) {
            acc = intersect(acc, live[i]);
            suffix[i] = acc;
        }
        for (std::size_t i = 0; i < n; ++i) {
            MonomialIdeal others = i == 0         ? suffix[1]
                                   : i == n - 1   ? prefix[n - 2]
                                                  : intersect(prefix[i - 1], suffix[i + 1]);
            if (live[i].contains(others)) {
                live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return live;
}

}  // namespace

std::vector<IrreducibleComponent> irreducibleDecomposition(const MonomialIdeal& ideal,
                                                           const DecomposeOptions& options) {
    if (ideal.isZero())
        throw DomainError("cannot decompose the zero ideal");
    if (ideal.isUnit())
        throw DomainError("cannot decompose the unit ideal");

    std::unordered_set<std::vector<std::uint64_t>, KeyHash> visited;
    std::unordered_set<std::vector<std::uint64_t>, KeyHash> leafKeys;
    std::vector<MonomialIdeal> leaves;
    std::vector<MonomialIdeal> stack{ideal};
    visited.insert(idealKey(ideal));

    const std::size_t stateCeiling = options.maxComponents > (static_cast<std::size_t>(-1) >> 6)
                                         ? static_cast<std::size_t>(-1)
                                         : options.maxComponents * 64;

    while (!stack.empty()) {
        MonomialIdeal current = std::move(stack.back());
        stack.pop_back();

        std::size_t split = pickSplitGenerator(current);
        if (split == static_cast<std::size_t>(-1)) {
            auto key = idealKey(current);
            if (leafKeys.insert(std::move(key)).second) {
                leaves.push_back(std::move(current));
                if (leaves.size() > options.maxComponents)
                    throw ResourceError("irreducible decomposition exceeded the component ceiling (" +
                                        std::to_string(options.maxComponents) + ")");
            }
            continue;
        }

        const Monomial& g = current.generators()[split];
        std::size_t firstVar = g.support().front();
        Monomial u = Monomial::varPower(g.varCount(), firstVar, g.exponent(firstVar));
        Monomial v = colonQuotient(g, u);

        for (const Monomial& added : {u, v}) {
            std::vector<Monomial> gens = current.generators();
            gens.push_back(added);
            MonomialIdeal child = MonomialIdeal::fromGenerators(current.ring(), std::move(gens));
            if (visited.insert(idealKey(child)).second) {
                stack.push_back(std::move(child));
                if (visited.size() > stateCeiling)
                    throw ResourceError("irreducible decomposition exceeded the component ceiling (" +
                                        std::to_string(options.maxComponents) + ")");
            }
        }
    }

    std::sort(leaves.begin(), leaves.end(), componentLess);
    leaves = makeIrredundant(std::move(leaves));
    std::sort(leaves.begin(), leaves.end(), componentLess);

    std::vector<IrreducibleComponent> components;
    components.reserve(leaves.size());
    for (auto& leaf : leaves) {
        std::vector<std::size_t> support;
        for (const auto& g : leaf.generators())
            support.push_back(g.support().front());
        std::sort(support.begin(), support.end());
        components.push_back(IrreducibleComponent{std::move(leaf), std::move(support)});
    }
    return components;
}

std::vector<MonomialPrime> associatedPrimes(const MonomialIdeal& ideal,
                                            const DecomposeOptions& options) {
    auto components = irreducibleDecomposition(ideal, options);
    std::vector<MonomialPrime> primes;
    for (const auto& c : components) {
        MonomialPrime p(ideal.ring(), c.support);
        bool seen = false;
        for (const auto& q : primes)
            if (q == p) {
                seen = true;
                break;
            }
        if (!seen) primes.push_back(std::move(p));
    }
    std::sort(primes.begin(), primes.end(), primeLess);
    return primes;
}

}  // namespace vnum
