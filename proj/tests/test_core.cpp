#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "brute.hpp"
#include "vnum/corpus.hpp"
#include "vnum/errors.hpp"
#include "vnum/format.hpp"
#include "vnum/ideal.hpp"
#include "vnum/monomial.hpp"
#include "vnum/parse.hpp"
#include "vnum/ring.hpp"

using namespace vnum;

namespace {

RingContext xy() { return RingContext({"x", "y"}, {1, 1}); }

Monomial mono(std::vector<std::uint64_t> exps) { return Monomial(std::move(exps)); }

}  // namespace

TEST_CASE("ring context validation") {
    CHECK_THROWS_AS(RingContext({}, {}), StructureError);
    CHECK_THROWS_AS(RingContext({"x", "x"}, {1, 1}), StructureError);
    CHECK_THROWS_AS(RingContext({"x"}, {0}), StructureError);
    CHECK_THROWS_AS(RingContext({"x", "y"}, {1}), StructureError);
    CHECK_THROWS_AS(RingContext({""}, {1}), StructureError);
    RingContext ring({"x", "y", "z"}, {1, 1, 2});
    CHECK(ring.varCount() == 3);
    CHECK(ring.maxWeight() == 2);
    CHECK(ring.varIndex("z") == 2);
    CHECK_FALSE(ring.varIndex("w").has_value());
}

TEST_CASE("weighted degree") {
    RingContext ring = xy();
    CHECK(weightedDegree(mono({2, 1}), ring) == 3);
    CHECK(weightedDegree(Monomial::one(2), ring) == 0);
    RingContext xyz({"x", "y", "z"}, {1, 1, 2});
    CHECK(weightedDegree(mono({1, 0, 1}), xyz) == 3);
    CHECK_THROWS_AS(weightedDegree(mono({1, 0, 1}), ring), StructureError);
}

TEST_CASE("monomial helpers") {
    Monomial a = mono({2, 0});
    Monomial b = mono({1, 1});
    CHECK_FALSE(divides(a, b));
    CHECK(divides(mono({1, 0}), a));
    CHECK(lcm(a, b) == mono({2, 1}));
    CHECK(gcd(a, b) == mono({1, 0}));
    CHECK(product(a, b) == mono({3, 1}));
    CHECK(colonQuotient(a, b) == mono({1, 0}));
    CHECK(mono({0, 0}).isOne());
    CHECK(mono({1, 2}).support() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("checked arithmetic overflows loudly") {
    std::uint64_t big = UINT64_MAX - 1;
    CHECK_THROWS_AS(product(mono({big, 0}), mono({big, 0})), OverflowError);
    RingContext wide({"x"}, {UINT64_MAX});
    CHECK_THROWS_AS(weightedDegree(Monomial::varPower(1, 0, 3), wide), OverflowError);
    RingContext single({"x"}, {1});
    MonomialIdeal huge = MonomialIdeal::fromGenerators(single, {mono({UINT64_MAX / 2})});
    CHECK_THROWS_AS(power(huge, 3), OverflowError);
}

TEST_CASE("minimalize keeps divisibility-minimal generators in canonical order") {
    RingContext ring = xy();
    MonomialIdeal i = minimalize({mono({2, 0}), mono({3, 0}), mono({1, 1})}, ring);
    CHECK(i.generators() == std::vector<Monomial>{mono({2, 0}), mono({1, 1})});

    MonomialIdeal unit = minimalize({Monomial::one(2), mono({1, 0})}, ring);
    CHECK(unit.isUnit());
    CHECK(unit == MonomialIdeal::unit(ring));

    MonomialIdeal zero = minimalize({}, ring);
    CHECK(zero.isZero());
    CHECK(zero == MonomialIdeal::zero(ring));

    MonomialIdeal dupes = minimalize({mono({1, 1}), mono({1, 1}), mono({2, 0})}, ring);
    CHECK(dupes.generators().size() == 2);
    CHECK(dupes.generators().front() == mono({2, 0}));
}

TEST_CASE("membership") {
    RingContext ring = xy();
    MonomialIdeal i = parseIdeal("x^2, y^3", ring);
    CHECK(i.contains(mono({2, 1})));
    CHECK_FALSE(i.contains(mono({1, 2})));
    CHECK_FALSE(MonomialIdeal::zero(ring).contains(mono({0, 0})));
    CHECK_FALSE(MonomialIdeal::zero(ring).contains(mono({5, 5})));
    CHECK(MonomialIdeal::unit(ring).contains(Monomial::one(2)));
}

TEST_CASE("sum and product") {
    RingContext ring = xy();
    MonomialIdeal a = parseIdeal("x^2", ring);
    MonomialIdeal b = parseIdeal("x, y", ring);
    CHECK(sum(a, b) == parseIdeal("x, y", ring));
    CHECK(product(a, b) == parseIdeal("x^3, x^2*y", ring));
    CHECK(product(MonomialIdeal::zero(ring), b).isZero());
    CHECK(sum(MonomialIdeal::zero(ring), b) == b);
}

TEST_CASE("power examples") {
    RingContext ring = xy();
    MonomialIdeal m = parseIdeal("x, y", ring);
    CHECK(power(m, 2) == parseIdeal("x^2, x*y, y^2", ring));
    CHECK(power(m, 2).generators() ==
          std::vector<Monomial>{mono({2, 0}), mono({1, 1}), mono({0, 2})});

    MonomialIdeal i = parseIdeal("x^2, x*y", ring);
    CHECK(power(i, 2) == parseIdeal("x^4, x^3*y, x^2*y^2", ring));
    CHECK(power(i, 1) == i);
    CHECK_THROWS_AS(power(i, 0), DomainError);
}

TEST_CASE("intersection examples") {
    RingContext ring = xy();
    CHECK(intersect(parseIdeal("x", ring), parseIdeal("y", ring)) == parseIdeal("x*y", ring));
    CHECK(intersect(parseIdeal("x", ring), parseIdeal("x, y", ring)) == parseIdeal("x", ring));
    CHECK(intersect(parseIdeal("x, y^3", ring), parseIdeal("x^2, y", ring)) ==
          parseIdeal("x^2, x*y, y^3", ring));
    CHECK(intersect(MonomialIdeal::zero(ring), parseIdeal("x", ring)).isZero());
}

TEST_CASE("colon examples") {
    RingContext ring = xy();
    MonomialIdeal i = parseIdeal("x^2, x*y", ring);
    CHECK(colon(i, mono({1, 0})) == parseIdeal("x, y", ring));
    CHECK(colon(i, parseIdeal("x", ring)) == parseIdeal("x, y", ring));
    CHECK(colon(i, parseIdeal("x, y", ring)) == parseIdeal("x", ring));
    CHECK(colon(i, MonomialIdeal::unit(ring)) == i);
    CHECK_THROWS_AS(colon(i, MonomialIdeal::zero(ring)), DomainError);
}

TEST_CASE("saturation examples") {
    RingContext ring = xy();
    MonomialIdeal i = parseIdeal("x^2, x*y", ring);
    MonomialIdeal m = parseIdeal("x, y", ring);

    Saturation s = saturate(i, m);
    CHECK(s.ideal == parseIdeal("x", ring));
    CHECK(s.index == 1);
    CHECK(colon(i, m) == parseIdeal("x", ring));
    CHECK(colon(s.ideal, m) == s.ideal);

    Saturation byUnit = saturate(i, MonomialIdeal::unit(ring));
    CHECK(byUnit.ideal == i);
    CHECK(byUnit.index == 0);

    Saturation nonzerodivisor = saturate(parseIdeal("x", ring), parseIdeal("y", ring));
    CHECK(nonzerodivisor.ideal == parseIdeal("x", ring));
    CHECK(nonzerodivisor.index == 0);

    CHECK_THROWS_AS(saturate(i, MonomialIdeal::zero(ring)), DomainError);
}

TEST_CASE("different rings are rejected") {
    RingContext a = xy();
    RingContext b({"x", "y"}, {1, 2});
    CHECK_THROWS_AS(sum(parseIdeal("x", a), parseIdeal("y", b)), StructureError);
}

TEST_CASE("core properties on a random corpus") {
    CorpusOptions options;
    options.maxVars = 3;
    auto corpus = generateCorpus(20260825, 60, options);
    std::mt19937_64 rng(7);

    for (std::size_t k = 0; k + 1 < corpus.size(); k += 2) {
        const MonomialIdeal& i = corpus[k];
        MonomialIdeal j = randomIdeal(rng, i.ring(), options);
        const RingContext& ring = i.ring();
        auto probes = brute::monomialsUpToDegree(ring, 8);

        for (const auto& result :
             {sum(i, j), product(i, j), intersect(i, j), colon(i, j), saturate(i, j).ideal}) {
            const auto& gens = result.generators();
            for (std::size_t a = 0; a < gens.size(); ++a)
                for (std::size_t b = 0; b < gens.size(); ++b)
                    if (a != b) CHECK_FALSE(divides(gens[a], gens[b]));
        }

        MonomialIdeal c = colon(i, j);
        MonomialIdeal meet = intersect(i, j);
        Saturation s = saturate(i, j);
        for (const auto& t : probes) {
            CHECK(i.contains(t) == brute::member(i.generators(), t));
            CHECK(c.contains(t) == brute::colonMember(i, j, t));
            CHECK(meet.contains(t) == brute::intersectMember(i, j, t));
            CHECK(s.ideal.contains(t) == brute::satMember(i, j, t));
        }

        CHECK(colon(i, j).contains(i));
        CHECK(s.ideal.contains(colon(i, j)));
        CHECK(colon(s.ideal, j) == s.ideal);

        CHECK(power(i, 3) == product(power(i, 1), power(i, 2)));
        CHECK(power(i, 4) == product(power(i, 2), power(i, 2)));
    }
}

TEST_CASE("structural equality tracks extensional equality") {
    auto corpus = generateCorpus(99, 40, {});
    for (std::size_t k = 0; k + 1 < corpus.size(); k += 2) {
        const MonomialIdeal& i = corpus[k];
        if (!(corpus[k + 1].ring() == i.ring()))
            continue;
        const MonomialIdeal& j = corpus[k + 1];
        bool sameMembership = true;
        for (const auto& t : brute::monomialsUpToDegree(i.ring(), 8))
            if (i.contains(t) != j.contains(t)) {
                sameMembership = false;
                break;
            }
        bool sameUnbounded =
            sameMembership && i.contains(j) && j.contains(i);
        CHECK((i == j) == sameUnbounded);
        CHECK(i == minimalize(i.generators(), i.ring()));
    }
}
