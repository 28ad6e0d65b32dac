#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vnum/decompose.hpp"
#include "vnum/ideal.hpp"
#include "vnum/prime.hpp"
#include "vnum/vinvariant.hpp"

namespace vnum {

/// Incremental powers of a fixed base ideal: I^(n+1) is built from I^n * I
/// and every computed power is kept for reuse.
class PowerCache {
public:
    explicit PowerCache(MonomialIdeal base) : base_(std::move(base)) {}

    const MonomialIdeal& base() const noexcept { return base_; }

    const MonomialIdeal& power(std::uint64_t n) {
        if (n == 0)
            throw DomainError("power exponent must be >= 1");
        while (powers_.size() < n) {
            powers_.push_back(powers_.empty() ? base_ : product(powers_.back(), base_));
        }
        return powers_[static_cast<std::size_t>(n - 1)];
    }

private:
    MonomialIdeal base_;
    std::vector<MonomialIdeal> powers_;
};

/// Ass(R/I^n) for n = 1..horizon.
struct AssProfile {
    MonomialIdeal ideal;
    std::uint64_t horizon = 0;
    std::vector<std::vector<MonomialPrime>> perPower;  // index n-1

    const std::vector<MonomialPrime>& at(std::uint64_t n) const {
        return perPower.at(static_cast<std::size_t>(n - 1));
    }

    bool isAssociated(const MonomialPrime& p, std::uint64_t n) const {
        for (const auto& q : at(n))
            if (q == p) return true;
        return false;
    }
};

AssProfile assSweep(const MonomialIdeal& ideal, std::uint64_t horizon,
                    const DecomposeOptions& options = {});
AssProfile assSweep(PowerCache& cache, std::uint64_t horizon,
                    const DecomposeOptions& options = {});

/// Detected stable tail of an AssProfile.
struct StablePrimes {
    std::vector<MonomialPrime> primes;
    std::uint64_t nStab = 0;  ///< first n from which every entry equals `primes`
};

/// The common value of the profile's last `window` entries plus the first
/// index from which the profile stays there; nullopt when the last `window`
/// entries disagree (stabilization may lie beyond the horizon).
std::optional<StablePrimes> stablePrimes(const AssProfile& profile, std::uint64_t window);

/// v_P(I^n) for n = 1..horizon; entries where P is not yet associated are
/// empty ("not yet associated").
struct VSeries {
    MonomialPrime prime;
    std::uint64_t horizon = 0;
    std::vector<std::optional<std::uint64_t>> values;  // index n-1

    std::optional<std::uint64_t> at(std::uint64_t n) const {
        return values.at(static_cast<std::size_t>(n - 1));
    }
};

/// Requires P associated at the horizon (else NotAsymptoticError).
VSeries vSeries(const MonomialIdeal& ideal, const MonomialPrime& p, std::uint64_t horizon,
                const DecomposeOptions& options = {});
VSeries vSeries(PowerCache& cache, const AssProfile& profile, const MonomialPrime& p);

/// Detected tail law values[n] = slope*n + intercept for n0 <= n <= horizon.
/// `window` is the evidence length horizon - n0 + 1.
struct LinearFit {
    std::uint64_t n0 = 0;
    std::int64_t slope = 0;
    std::int64_t intercept = 0;
    std::uint64_t window = 0;
};

/// Fit the longest constant-difference tail of the series. Returns nullopt
/// (unstable) when the trailing differences are not constant over the last
/// `window` entries; throws DomainError when fewer than `window` trailing
/// entries are defined. Requires window >= 3.
std::optional<LinearFit> linearFit(const VSeries& series, std::uint64_t window);

/// True iff the fitted slope is one of the weighted degrees of I's minimal
/// generators.
bool slopeCheck(const LinearFit& fit, const MonomialIdeal& ideal);

/// Least n <= horizon-1 such that colon(I^(k+1), I) = I^k for all k from n to
/// horizon-1; nullopt when even k = horizon-1 fails. Requires horizon >= 2.
std::optional<std::uint64_t> ratliffIndex(const MonomialIdeal& ideal, std::uint64_t horizon);
std::optional<std::uint64_t> ratliffIndex(PowerCache& cache, std::uint64_t horizon);

/// Per-power oracle agreement for one series (entries up to the oracle
/// horizon; nullopt where the series is undefined or beyond that horizon).
struct OracleCheck {
    std::uint64_t horizon = 0;
    bool allMatch = true;
    std::vector<std::optional<bool>> perPower;  // index n-1
};

struct ReportSeries {
    MonomialPrime prime;
    VSeries series;
    std::optional<LinearFit> fit;                      // nullopt = unstable or error
    std::optional<bool> slopeInGeneratorDegrees;       // only when fit exists
    std::optional<OracleCheck> oracle;                 // only when requested
};

struct Report {
    RingContext ring;
    MonomialIdeal ideal;
    std::vector<std::uint64_t> generatorDegrees;
    AssProfile profile;
    std::optional<StablePrimes> stable;
    std::vector<ReportSeries> series;
    std::optional<std::uint64_t> ratliff;              // nullopt = unstable
    std::vector<std::string> notes;                    // failure annotations
    bool resourceAborted = false;
};

struct ReportOptions {
    std::uint64_t horizon = 0;       ///< 0 = defaultHorizon(ring)
    std::uint64_t window = 3;
    bool oracle = false;
    std::uint64_t oracleHorizon = 0; ///< 0 = same as horizon
    std::optional<std::uint64_t> oracleBound;  ///< default: safe bound per power
    DecomposeOptions decompose;
};

/// N = 10 for rings with at most 3 variables, 6 otherwise.
std::uint64_t defaultHorizon(const RingContext& ring);

/// One-stop sweep: powers, associated primes, stabilization, per-prime series
/// with fits and slope checks, Ratliff index, optional oracle spot checks.
/// A resource abort mid-sweep truncates the horizon and is recorded in
/// `notes` / `resourceAborted` instead of discarding the partial results.
Report report(const MonomialIdeal& ideal, const ReportOptions& options = {});

}  // namespace vnum
