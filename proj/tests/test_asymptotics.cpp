#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "brute.hpp"
#include "vnum/asymptotics.hpp"
#include "vnum/corpus.hpp"
#include "vnum/errors.hpp"
#include "vnum/format.hpp"
#include "vnum/parse.hpp"

using namespace vnum;

namespace {

RingContext xy() { return RingContext({"x", "y"}, {1, 1}); }
RingContext xyz() { return RingContext({"x", "y", "z"}, {1, 1, 1}); }

VSeries makeSeries(std::vector<std::optional<std::uint64_t>> values) {
    RingContext ring = xy();
    VSeries s{MonomialPrime(ring, {0}), values.size(), std::move(values)};
    return s;
}

}  // namespace

TEST_CASE("power cache matches direct powers") {
    RingContext ring = xy();
    MonomialIdeal i = parseIdeal("x^2, x*y", ring);
    PowerCache cache(i);
    CHECK(cache.power(1) == i);
    CHECK(cache.power(4) == power(i, 4));
    CHECK(cache.power(2) == power(i, 2));
    CHECK_THROWS_AS(cache.power(0), DomainError);
}

TEST_CASE("assSweep examples") {
    RingContext ring = xy();
    AssProfile doubled = assSweep(parseIdeal("x^2, x*y", ring), 3);
    REQUIRE(doubled.horizon == 3);
    for (std::uint64_t n = 1; n <= 3; ++n) {
        REQUIRE(doubled.at(n).size() == 2);
        CHECK(doubled.at(n)[0] == MonomialPrime(ring, {0}));
        CHECK(doubled.at(n)[1] == MonomialPrime(ring, {0, 1}));
    }

    AssProfile maximal = assSweep(parseIdeal("x, y", ring), 3);
    for (std::uint64_t n = 1; n <= 3; ++n) {
        REQUIRE(maximal.at(n).size() == 1);
        CHECK(maximal.at(n)[0] == MonomialPrime(ring, {0, 1}));
    }

    AssProfile edges = assSweep(parseIdeal("x*y, x*z, y*z", xyz()), 2);
    CHECK(edges.at(1).size() == 3);
    REQUIRE(edges.at(2).size() == 4);
    CHECK(edges.at(2).back() == MonomialPrime(xyz(), {0, 1, 2}));

    CHECK_THROWS_AS(assSweep(parseIdeal("x", ring), 0), DomainError);
    CHECK_THROWS_AS(assSweep(MonomialIdeal::unit(ring), 2), DomainError);
}

TEST_CASE("assSweep resource errors name the offending power") {
    MonomialIdeal edges = parseIdeal("x*y, x*z, y*z", xyz());
    try {
        assSweep(edges, 2, DecomposeOptions{3});
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("n = 2") != std::string::npos);
    }
}

TEST_CASE("stablePrimes detection") {
    RingContext ring = xy();
    auto stable = stablePrimes(assSweep(parseIdeal("x^2, x*y", ring), 6), 3);
    REQUIRE(stable.has_value());
    CHECK(stable->primes.size() == 2);
    CHECK(stable->nStab == 1);

    auto edges = stablePrimes(assSweep(parseIdeal("x*y, x*z, y*z", xyz()), 6), 3);
    REQUIRE(edges.has_value());
    CHECK(edges->primes.size() == 4);
    CHECK(edges->nStab == 2);

    auto whole = stablePrimes(assSweep(parseIdeal("x, y", ring), 4), 4);
    REQUIRE(whole.has_value());
    CHECK(whole->nStab == 1);

    AssProfile shortEdges = assSweep(parseIdeal("x*y, x*z, y*z", xyz()), 2);
    CHECK_FALSE(stablePrimes(shortEdges, 2).has_value());

    CHECK_THROWS_AS(stablePrimes(shortEdges, 1), DomainError);
    CHECK_THROWS_AS(stablePrimes(shortEdges, 3), DomainError);
}

TEST_CASE("vSeries examples") {
    RingContext ring = xy();
    VSeries linear = vSeries(parseIdeal("x, y", ring), MonomialPrime(ring, {0, 1}), 5);
    REQUIRE(linear.horizon == 5);
    for (std::uint64_t n = 1; n <= 5; ++n)
        CHECK(linear.at(n) == n - 1);

    VSeries odd = vSeries(parseIdeal("x^2, x*y", ring), MonomialPrime(ring, {0, 1}), 5);
    for (std::uint64_t n = 1; n <= 5; ++n)
        CHECK(odd.at(n) == 2 * n - 1);

    VSeries late = vSeries(parseIdeal("x*y, x*z, y*z", xyz()), MonomialPrime(xyz(), {0, 1, 2}), 4);
    CHECK_FALSE(late.at(1).has_value());
    CHECK(late.at(2) == 3);
    CHECK(late.at(3) == 5);
    CHECK(late.at(4) == 7);

    CHECK_THROWS_AS(
        vSeries(parseIdeal("x*y, x*z, y*z", xyz()), MonomialPrime(xyz(), {0, 1, 2}), 1),
        NotAsymptoticError);
}

TEST_CASE("linearFit examples") {
    auto ramp = linearFit(makeSeries({0, 1, 2, 3, 4}), 3);
    REQUIRE(ramp.has_value());
    CHECK(ramp->n0 == 1);
    CHECK(ramp->slope == 1);
    CHECK(ramp->intercept == -1);
    CHECK(ramp->window == 5);

    auto odd = linearFit(makeSeries({1, 3, 5, 7, 9}), 3);
    REQUIRE(odd.has_value());
    CHECK(odd->n0 == 1);
    CHECK(odd->slope == 2);
    CHECK(odd->intercept == -1);

    auto flat = linearFit(makeSeries({7, 7, 7, 7}), 3);
    REQUIRE(flat.has_value());
    CHECK(flat->n0 == 1);
    CHECK(flat->slope == 0);
    CHECK(flat->intercept == 7);

    auto headless = linearFit(makeSeries({std::nullopt, 3, 5, 7}), 3);
    REQUIRE(headless.has_value());
    CHECK(headless->n0 == 2);
    CHECK(headless->slope == 2);
    CHECK(headless->intercept == -1);
    CHECK(headless->window == 3);

    auto bent = linearFit(makeSeries({0, 0, 1, 3, 5, 9}), 3);
    CHECK_FALSE(bent.has_value());

    auto lateBend = linearFit(makeSeries({5, 4, 4, 5, 6, 7}), 4);
    REQUIRE(lateBend.has_value());
    CHECK(lateBend->n0 == 3);
    CHECK(lateBend->window == 4);

    CHECK_THROWS_AS(linearFit(makeSeries({1, 2, 3}), 2), DomainError);
    CHECK_THROWS_AS(linearFit(makeSeries({std::nullopt, std::nullopt, 3, 5}), 3), DomainError);
    CHECK_THROWS_AS(linearFit(makeSeries({1, 2}), 3), DomainError);
}

TEST_CASE("slopeCheck membership") {
    RingContext ring = xy();
    MonomialIdeal i = parseIdeal("x^2, x*y", ring);
    CHECK(slopeCheck(LinearFit{1, 2, -1, 3}, i));
    CHECK_FALSE(slopeCheck(LinearFit{1, 3, -1, 3}, i));
    CHECK_FALSE(slopeCheck(LinearFit{1, -1, 2, 3}, i));
    CHECK(slopeCheck(LinearFit{1, 1, -1, 3}, parseIdeal("x, y", ring)));
}

TEST_CASE("ratliffIndex examples") {
    RingContext ring = xy();
    CHECK(ratliffIndex(parseIdeal("x^2, x*y", ring), 5) == 1);
    CHECK(ratliffIndex(parseIdeal("x, y", ring), 5) == 1);
    CHECK(ratliffIndex(parseIdeal("x*y, x*z, y*z", xyz()), 4) == 1);
    CHECK_THROWS_AS(ratliffIndex(parseIdeal("x, y", ring), 1), DomainError);
}

TEST_CASE("ratliffIndex sees a late-starting colon identity") {
    RingContext ring = xy();
    MonomialIdeal i = parseIdeal("x^4, x^3*y, x*y^3, y^4", ring);
    CHECK(colon(power(i, 2), i) != i);
    auto index = ratliffIndex(i, 6);
    REQUIRE(index.has_value());
    CHECK(*index == 2);
    PowerCache cache(i);
    for (std::uint64_t k = *index; k <= 5; ++k)
        CHECK(colon(cache.power(k + 1), i) == cache.power(k));
}

TEST_CASE("report on the curated quadratic ideal") {
    RingContext ring = xy();
    ReportOptions options;
    options.horizon = 6;
    options.window = 3;
    options.oracle = true;
    Report rep = report(parseIdeal("x^2, x*y", ring), options);

    CHECK(rep.generatorDegrees == std::vector<std::uint64_t>{2, 2});
    REQUIRE(rep.stable.has_value());
    CHECK(rep.stable->nStab == 1);
    REQUIRE(rep.series.size() == 2);
    for (const auto& entry : rep.series) {
        REQUIRE(entry.fit.has_value());
        CHECK(entry.fit->slope == 2);
        CHECK(entry.fit->intercept == -1);
        CHECK(entry.fit->n0 == 1);
        CHECK(entry.slopeInGeneratorDegrees == true);
        REQUIRE(entry.oracle.has_value());
        CHECK(entry.oracle->allMatch);
        for (std::uint64_t n = 1; n <= 6; ++n)
            CHECK(entry.series.at(n) == 2 * n - 1);
    }
    CHECK(rep.ratliff == 1);
    CHECK(rep.notes.empty());
    CHECK_FALSE(rep.resourceAborted);
}

TEST_CASE("report on a principal-prime ideal") {
    RingContext ring = xy();
    ReportOptions options;
    options.horizon = 6;
    Report rep = report(parseIdeal("x, y", ring), options);
    REQUIRE(rep.series.size() == 1);
    REQUIRE(rep.series[0].fit.has_value());
    CHECK(rep.series[0].fit->slope == 1);
    CHECK(rep.series[0].slopeInGeneratorDegrees == true);
    CHECK(rep.ratliff == 1);
}

TEST_CASE("report rejects improper ideals") {
    RingContext ring = xy();
    CHECK_THROWS_AS(report(MonomialIdeal::unit(ring)), DomainError);
    CHECK_THROWS_AS(report(MonomialIdeal::zero(ring)), DomainError);
}

TEST_CASE("report keeps partial results after a mid-sweep resource abort") {
    ReportOptions options;
    options.horizon = 6;
    options.window = 3;
    options.decompose.maxComponents = 3;
    Report rep = report(parseIdeal("x*y, x*z, y*z", xyz()), options);
    CHECK(rep.resourceAborted);
    CHECK(rep.profile.horizon == 1);
    CHECK_FALSE(rep.stable.has_value());
    CHECK_FALSE(rep.ratliff.has_value());
    CHECK(rep.series.size() == 3);
    CHECK(!rep.notes.empty());

    ReportOptions fatal = options;
    fatal.decompose.maxComponents = 1;
    CHECK_THROWS_AS(report(parseIdeal("x*y, x*z, y*z", xyz()), fatal), ResourceError);
}

TEST_CASE("default horizon by variable count") {
    CHECK(defaultHorizon(xy()) == 10);
    CHECK(defaultHorizon(xyz()) == 10);
    CHECK(defaultHorizon(RingContext({"x", "y", "z", "w"}, {1, 1, 1, 1})) == 6);
}

TEST_CASE("fits and stabilization behave on a random corpus sample") {
    CorpusOptions options;
    options.maxVars = 3;
    auto corpus = generateCorpus(246810, 12, options);
    for (const auto& ideal : corpus) {
        ReportOptions ropts;
        ropts.horizon = 8;
        ropts.window = 3;
        Report rep = report(ideal, ropts);

        if (rep.stable) {
            for (std::uint64_t n = rep.stable->nStab; n <= rep.profile.horizon; ++n)
                CHECK(rep.profile.at(n) == rep.stable->primes);
            if (rep.stable->nStab > 1)
                CHECK(rep.profile.at(rep.stable->nStab - 1) != rep.stable->primes);
        }

        for (const auto& entry : rep.series) {
            if (!entry.fit)
                continue;
            const LinearFit& fit = entry.fit.value();
            CHECK(fit.window >= 3);
            CHECK(fit.window == rep.profile.horizon - fit.n0 + 1);
            for (std::uint64_t n = fit.n0; n <= rep.profile.horizon; ++n) {
                auto value = entry.series.at(n);
                REQUIRE(value.has_value());
                CHECK(static_cast<std::int64_t>(*value) ==
                      fit.slope * static_cast<std::int64_t>(n) + fit.intercept);
            }
            CHECK(slopeCheck(fit, ideal) == entry.slopeInGeneratorDegrees);
        }
    }
}
