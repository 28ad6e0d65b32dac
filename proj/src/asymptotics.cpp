#include "vnum/asymptotics.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "vnum/errors.hpp"

namespace vnum {

namespace {

void requireProperNonZero(const MonomialIdeal& ideal, const char* what) {
    if (ideal.isZero())
        throw DomainError(std::string(what) + " requires a non-zero ideal");
    if (ideal.isUnit())
        throw DomainError(std::string(what) + " requires a proper ideal");
}

std::string primeName(const MonomialPrime& p) {
    std::string out = "(";
    bool first = true;
    for (std::size_t i : p.support()) {
        if (!first) out += ",";
        out += p.ring().varName(i);
        first = false;
    }
    out += ")";
    return out;
}

}  // namespace

AssProfile assSweep(PowerCache& cache, std::uint64_t horizon, const DecomposeOptions& options) {
    requireProperNonZero(cache.base(), "associated-prime sweep");
    if (horizon == 0)
        throw DomainError("sweep horizon must be >= 1");
    AssProfile profile{cache.base(), horizon, {}};
    profile.perPower.reserve(static_cast<std::size_t>(horizon));
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        try {
            profile.perPower.push_back(associatedPrimes(cache.power(n), options));
        } catch (const ResourceError& e) {
            throw ResourceError("associated-prime sweep failed at power n = " +
                                std::to_string(n) + ": " + e.what());
        }
    }
    return profile;
}

AssProfile assSweep(const MonomialIdeal& ideal, std::uint64_t horizon,
                    const DecomposeOptions& options) {
    PowerCache cache(ideal);
    return assSweep(cache, horizon, options);
}

std::optional<StablePrimes> stablePrimes(const AssProfile& profile, std::uint64_t window) {
    if (window < 2)
        throw DomainError("stabilization window must be >= 2");
    if (profile.horizon < window)
        throw DomainError("stabilization window exceeds the sweep horizon");
    const auto& tail = profile.at(profile.horizon);
    for (std::uint64_t n = profile.horizon - window + 1; n < profile.horizon; ++n) {
        if (profile.at(n) != tail)
            return std::nullopt;
    }
    std::uint64_t nStab = profile.horizon - window + 1;
    while (nStab > 1 && profile.at(nStab - 1) == tail)
        --nStab;
    return StablePrimes{tail, nStab};
}

VSeries vSeries(PowerCache& cache, const AssProfile& profile, const MonomialPrime& p) {
    if (!profile.isAssociated(p, profile.horizon))
        throw NotAsymptoticError("prime " + primeName(p) +
                                 " is not associated at the sweep horizon");
    VSeries series{p, profile.horizon, {}};
    series.values.reserve(static_cast<std::size_t>(profile.horizon));
    for (std::uint64_t n = 1; n <= profile.horizon; ++n) {
        if (profile.isAssociated(p, n)) {
            series.values.push_back(vInvariant(cache.power(n), p, profile.at(n)).value);
        } else {
            series.values.push_back(std::nullopt);
        }
    }
    return series;
}

VSeries vSeries(const MonomialIdeal& ideal, const MonomialPrime& p, std::uint64_t horizon,
                const DecomposeOptions& options) {
    PowerCache cache(ideal);
    AssProfile profile = assSweep(cache, horizon, options);
    return vSeries(cache, profile, p);
}

std::optional<LinearFit> linearFit(const VSeries& series, std::uint64_t window) {
    if (window < 3)
        throw DomainError("fit window must be >= 3");
    std::uint64_t horizon = series.horizon;
    std::uint64_t defined = 0;
    for (std::uint64_t n = horizon; n >= 1 && series.at(n).has_value(); --n)
        ++defined;
    if (defined < window)
        throw DomainError("series has fewer than " + std::to_string(window) +
                          " defined trailing values");
    auto valueAt = [&](std::uint64_t n) {
        return static_cast<std::int64_t>(*series.at(n));
    };
    std::int64_t slope = valueAt(horizon) - valueAt(horizon - 1);
    std::uint64_t n0 = horizon - 1;
    while (n0 > horizon - defined + 1 && valueAt(n0) - valueAt(n0 - 1) == slope)
        --n0;
    std::uint64_t evidence = horizon - n0 + 1;
    if (evidence < window)
        return std::nullopt;
    std::int64_t intercept = valueAt(horizon) - slope * static_cast<std::int64_t>(horizon);
    return LinearFit{n0, slope, intercept, evidence};
}

bool slopeCheck(const LinearFit& fit, const MonomialIdeal& ideal) {
    if (fit.slope < 0)
        return false;
    auto degrees = ideal.generatorDegrees();
    return std::find(degrees.begin(), degrees.end(),
                     static_cast<std::uint64_t>(fit.slope)) != degrees.end();
}

std::optional<std::uint64_t> ratliffIndex(PowerCache& cache, std::uint64_t horizon) {
    requireProperNonZero(cache.base(), "Ratliff index");
    if (horizon < 2)
        throw DomainError("Ratliff horizon must be >= 2");
    std::optional<std::uint64_t> least;
    for (std::uint64_t k = horizon - 1; k >= 1; --k) {
        if (colon(cache.power(k + 1), cache.base()) != cache.power(k))
            break;
        least = k;
    }
    return least;
}

std::optional<std::uint64_t> ratliffIndex(const MonomialIdeal& ideal, std::uint64_t horizon) {
    PowerCache cache(ideal);
    return ratliffIndex(cache, horizon);
}

std::uint64_t defaultHorizon(const RingContext& ring) {
    return ring.varCount() <= 3 ? 10 : 6;
}

Report report(const MonomialIdeal& ideal, const ReportOptions& options) {
    requireProperNonZero(ideal, "report");
    std::uint64_t horizon = options.horizon == 0 ? defaultHorizon(ideal.ring()) : options.horizon;
    std::uint64_t window = options.window;
    if (window < 3)
        throw DomainError("report window must be >= 3");
    if (horizon < window)
        throw DomainError("report horizon must be at least the window");

    Report out{ideal.ring(),  ideal,        ideal.generatorDegrees(),
               AssProfile{ideal, 0, {}},
               std::nullopt,  {},           std::nullopt,
               {},            false};

    PowerCache cache(ideal);
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        try {
            out.profile.perPower.push_back(associatedPrimes(cache.power(n), options.decompose));
        } catch (const ResourceError& e) {
            if (n == 1)
                throw ResourceError("report failed at power n = 1: " + std::string(e.what()));
            out.resourceAborted = true;
            out.notes.push_back("resource limit reached at power n = " + std::to_string(n) +
                                "; horizon truncated to " + std::to_string(n - 1));
            horizon = n - 1;
            break;
        }
    }
    out.profile.horizon = horizon;

    if (horizon >= window) {
        out.stable = stablePrimes(out.profile, window);
        if (!out.stable)
            out.notes.push_back("associated primes did not stabilize over the last " +
                                std::to_string(window) + " powers");
    } else {
        out.notes.push_back("truncated horizon is shorter than the window; "
                            "stabilization not assessed");
    }

    std::uint64_t oracleHorizon =
        options.oracleHorizon == 0 ? horizon : std::min(options.oracleHorizon, horizon);

    for (const auto& p : out.profile.at(horizon)) {
        ReportSeries entry{p, vSeries(cache, out.profile, p), std::nullopt, std::nullopt,
                           std::nullopt};
        bool tooShort = false;
        try {
            entry.fit = linearFit(entry.series, window);
        } catch (const DomainError&) {
            entry.fit = std::nullopt;
            tooShort = true;
            out.notes.push_back("series for " + primeName(p) + " has fewer than " +
                                std::to_string(window) + " defined trailing values");
        }
        if (entry.fit) {
            entry.slopeInGeneratorDegrees = slopeCheck(*entry.fit, ideal);
            if (!*entry.slopeInGeneratorDegrees)
                out.notes.push_back("fitted slope " + std::to_string(entry.fit->slope) +
                                    " for " + primeName(p) + " is not a generator degree");
        } else if (!tooShort) {
            out.notes.push_back("series for " + primeName(p) + " is unstable over the last " +
                                std::to_string(window) + " powers");
        }
        if (options.oracle) {
            OracleCheck check;
            check.horizon = oracleHorizon;
            check.perPower.assign(static_cast<std::size_t>(horizon), std::nullopt);
            for (std::uint64_t n = 1; n <= oracleHorizon; ++n) {
                auto expected = entry.series.at(n);
                if (!expected)
                    continue;
                const MonomialIdeal& powerN = cache.power(n);
                std::uint64_t bound =
                    options.oracleBound ? *options.oracleBound : safeOracleBound(powerN, p);
                bool ok;
                try {
                    ok = vOracle(powerN, p, bound).value == *expected;
                } catch (const OracleBoundError&) {
                    ok = false;
                }
                check.perPower[static_cast<std::size_t>(n - 1)] = ok;
                if (!ok) {
                    check.allMatch = false;
                    out.notes.push_back("oracle disagreement for " + primeName(p) +
                                        " at power n = " + std::to_string(n));
                }
            }
            entry.oracle = std::move(check);
        }
        out.series.push_back(std::move(entry));
    }

    if (horizon >= 2) {
        out.ratliff = ratliffIndex(cache, horizon);
        if (!out.ratliff)
            out.notes.push_back("colon identity I^(n+1) : I = I^n not yet reached at the horizon");
    } else {
        out.notes.push_back("truncated horizon too short for the Ratliff index");
    }

    return out;
}

}  // namespace vnum
