#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vnum/asymptotics.hpp"
#include "vnum/corpus.hpp"
#include "vnum/decompose.hpp"
#include "vnum/errors.hpp"
#include "vnum/format.hpp"
#include "vnum/parse.hpp"
#include "vnum/vinvariant.hpp"

namespace {

using namespace vnum;

struct Shared {
    std::string ring;
    std::string weights;
    std::string ideal;
    std::string format = "text";
    std::string prime;
    std::string by;
    std::string out;
    std::uint64_t maxPower = 0;
    std::uint64_t window = 3;
    std::uint64_t degreeBound = 0;
    std::uint64_t maxComponents = 100000;
    bool oracle = false;
    std::optional<std::uint64_t> seed;
    std::uint64_t count = 20;
};

OutputFormat parseFormat(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    return OutputFormat::Csv;
}

RingContext makeRing(const Shared& args) {
    return parseRing(args.ring, args.weights);
}

MonomialIdeal makeIdeal(const Shared& args, const RingContext& ring) {
    return parseIdeal(args.ideal, ring);
}

ReportOptions makeReportOptions(const Shared& args) {
    ReportOptions options;
    options.horizon = args.maxPower;
    options.window = args.window;
    options.oracle = args.oracle;
    if (args.degreeBound > 0)
        options.oracleBound = args.degreeBound;
    options.decompose.maxComponents = static_cast<std::size_t>(args.maxComponents);
    return options;
}

struct Outcome {
    std::string text;
    int code = 0;
};

Outcome runAss(const Shared& args) {
    RingContext ring = makeRing(args);
    MonomialIdeal ideal = makeIdeal(args, ring);
    std::uint64_t horizon = args.maxPower == 0 ? 1 : args.maxPower;
    DecomposeOptions options{static_cast<std::size_t>(args.maxComponents)};
    AssProfile profile = assSweep(ideal, horizon, options);
    return {emitProfile(profile, parseFormat(args.format)), 0};
}

Outcome runDecompose(const Shared& args) {
    RingContext ring = makeRing(args);
    MonomialIdeal ideal = makeIdeal(args, ring);
    DecomposeOptions options{static_cast<std::size_t>(args.maxComponents)};
    auto components = irreducibleDecomposition(ideal, options);
    return {emitComponents(components, ring, parseFormat(args.format)), 0};
}

Outcome runV(const Shared& args) {
    RingContext ring = makeRing(args);
    MonomialIdeal ideal = makeIdeal(args, ring);
    MonomialPrime p = parsePrime(args.prime, ring);
    VResult result = vInvariant(ideal, p);
    std::string text = emitV(result, p, parseFormat(args.format));
    if (args.oracle) {
        std::uint64_t bound =
            args.degreeBound > 0 ? args.degreeBound : safeOracleBound(ideal, p);
        VResult check = vOracle(ideal, p, bound);
        if (check.value != result.value)
            throw InternalError("brute-force oracle disagrees with the engine value");
        if (parseFormat(args.format) == OutputFormat::Text)
            text += "oracle: ok\n";
    }
    return {text, 0};
}

Outcome runSeries(const Shared& args) {
    RingContext ring = makeRing(args);
    MonomialIdeal ideal = makeIdeal(args, ring);
    MonomialPrime p = parsePrime(args.prime, ring);
    std::uint64_t horizon = args.maxPower == 0 ? defaultHorizon(ring) : args.maxPower;
    DecomposeOptions options{static_cast<std::size_t>(args.maxComponents)};
    PowerCache cache(ideal);
    AssProfile profile = assSweep(cache, horizon, options);
    ReportSeries entry{p, vSeries(cache, profile, p), std::nullopt, std::nullopt, std::nullopt};
    try {
        entry.fit = linearFit(entry.series, args.window);
    } catch (const DomainError&) {
        entry.fit = std::nullopt;
    }
    if (entry.fit)
        entry.slopeInGeneratorDegrees = slopeCheck(*entry.fit, ideal);
    if (args.oracle) {
        OracleCheck check;
        check.horizon = horizon;
        check.perPower.assign(static_cast<std::size_t>(horizon), std::nullopt);
        for (std::uint64_t n = 1; n <= horizon; ++n) {
            auto expected = entry.series.at(n);
            if (!expected)
                continue;
            const MonomialIdeal& powerN = cache.power(n);
            std::uint64_t bound =
                args.degreeBound > 0 ? args.degreeBound : safeOracleBound(powerN, p);
            bool ok;
            try {
                ok = vOracle(powerN, p, bound).value == *expected;
            } catch (const OracleBoundError&) {
                ok = false;
            }
            check.perPower[static_cast<std::size_t>(n - 1)] = ok;
            if (!ok)
                check.allMatch = false;
        }
        entry.oracle = std::move(check);
    }
    return {emitSeries(entry, ring, parseFormat(args.format)), 0};
}

Outcome runCorpusReport(const Shared& args) {
    CorpusOptions corpusOptions;
    auto corpus = generateCorpus(*args.seed, static_cast<std::size_t>(args.count),
                                 corpusOptions);
    OutputFormat format = parseFormat(args.format);
    if (format == OutputFormat::Csv)
        throw DomainError("csv output is not available for corpus summaries; use text or json");

    std::size_t stableCount = 0, slopeOk = 0, slopeChecked = 0, aborted = 0;
    nlohmann::ordered_json ideals = nlohmann::ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"idx", "ring", "ideal", "stable", "slopes", "in degrees", "ratliff"});
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const MonomialIdeal& ideal = corpus[i];
        ReportOptions options = makeReportOptions(args);
        if (options.horizon == 0)
            options.horizon = defaultHorizon(ideal.ring());
        Report rep = report(ideal, options);
        if (rep.resourceAborted)
            ++aborted;
        if (rep.stable)
            ++stableCount;
        std::string slopes;
        bool allInDegrees = true;
        bool anyFit = false;
        for (const auto& entry : rep.series) {
            if (!entry.fit)
                continue;
            anyFit = true;
            if (!slopes.empty()) slopes += ",";
            slopes += std::to_string(entry.fit->slope);
            if (!entry.slopeInGeneratorDegrees.value_or(false))
                allInDegrees = false;
        }
        if (anyFit) {
            ++slopeChecked;
            if (allInDegrees) ++slopeOk;
        }
        std::string vars;
        for (std::size_t k = 0; k < ideal.ring().varCount(); ++k) {
            if (k) vars += ",";
            vars += ideal.ring().varName(k);
        }
        rows.push_back({std::to_string(i), vars, toText(ideal),
                        rep.stable ? "yes" : "no", slopes.empty() ? "-" : slopes,
                        anyFit ? (allInDegrees ? "yes" : "no") : "-",
                        rep.ratliff ? std::to_string(*rep.ratliff) : "unstable"});
        if (format == OutputFormat::Json) {
            nlohmann::ordered_json obj;
            obj["ring"] = ideal.ring().varNames();
            nlohmann::ordered_json gens = nlohmann::ordered_json::array();
            for (const auto& g : ideal.generators())
                gens.push_back(toText(g, ideal.ring()));
            obj["ideal"] = std::move(gens);
            obj["stable"] = static_cast<bool>(rep.stable);
            nlohmann::ordered_json slopeArr = nlohmann::ordered_json::array();
            for (const auto& entry : rep.series) {
                if (entry.fit)
                    slopeArr.push_back(entry.fit->slope);
                else
                    slopeArr.push_back("unstable");
            }
            obj["slopes"] = std::move(slopeArr);
            obj["slopes_in_generator_degrees"] = anyFit ? nlohmann::ordered_json(allInDegrees)
                                                        : nlohmann::ordered_json(nullptr);
            if (rep.ratliff)
                obj["ratliff_index"] = *rep.ratliff;
            else
                obj["ratliff_index"] = "unstable";
            if (!rep.notes.empty())
                obj["notes"] = rep.notes;
            ideals.push_back(std::move(obj));
        }
    }

    if (format == OutputFormat::Json) {
        nlohmann::ordered_json j;
        j["seed"] = *args.seed;
        j["count"] = corpus.size();
        j["ideals"] = std::move(ideals);
        nlohmann::ordered_json summary;
        summary["stable"] = stableCount;
        summary["slope_checks_passed"] = slopeOk;
        summary["slope_checks_run"] = slopeChecked;
        summary["resource_aborts"] = aborted;
        j["summary"] = std::move(summary);
        return {j.dump(2) + "\n", 0};
    }

    std::string out = "corpus seed " + std::to_string(*args.seed) + ", " +
                      std::to_string(corpus.size()) + " ideals\n";
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t k = 0; k < row.size(); ++k)
            widths[k] = std::max(widths[k], row[k].size());
    }
    for (const auto& row : rows) {
        out += "  ";
        for (std::size_t k = 0; k < row.size(); ++k) {
            out += row[k];
            if (k + 1 < row.size())
                out += std::string(widths[k] - row[k].size() + 2, ' ');
        }
        out += "\n";
    }
    out += "summary: " + std::to_string(stableCount) + "/" + std::to_string(corpus.size()) +
           " stable, " + std::to_string(slopeOk) + "/" + std::to_string(slopeChecked) +
           " slope checks passed, " + std::to_string(aborted) + " resource aborts\n";
    return {out, 0};
}

Outcome runReport(const Shared& args) {
    if (args.seed)
        return runCorpusReport(args);
    if (args.ring.empty() || args.ideal.empty())
        throw DomainError("report needs --ring and --ideal (or --seed for corpus mode)");
    RingContext ring = makeRing(args);
    MonomialIdeal ideal = makeIdeal(args, ring);
    ReportOptions options = makeReportOptions(args);
    Report rep = report(ideal, options);
    return {emitReport(rep, parseFormat(args.format)), rep.resourceAborted ? 3 : 0};
}

Outcome runPower(const Shared& args) {
    RingContext ring = makeRing(args);
    MonomialIdeal ideal = makeIdeal(args, ring);
    std::uint64_t n = args.maxPower == 0 ? 1 : args.maxPower;
    return {emitIdeal(power(ideal, n), parseFormat(args.format)), 0};
}

Outcome runColon(const Shared& args) {
    RingContext ring = makeRing(args);
    MonomialIdeal ideal = makeIdeal(args, ring);
    MonomialIdeal by = parseIdeal(args.by, ring);
    return {emitIdeal(colon(ideal, by), parseFormat(args.format)), 0};
}

Outcome runSat(const Shared& args) {
    RingContext ring = makeRing(args);
    MonomialIdeal ideal = makeIdeal(args, ring);
    MonomialIdeal by = parseIdeal(args.by, ring);
    return {emitSaturation(saturate(ideal, by), parseFormat(args.format)), 0};
}

void addSharedFlags(CLI::App* cmd, Shared& args, bool needsRing, bool needsIdeal) {
    auto* ringOpt = cmd->add_option("--ring", args.ring, "comma-separated variable names");
    auto* idealOpt =
        cmd->add_option("--ideal", args.ideal, "ideal expression, e.g. \"x^2, x*y\"");
    if (needsRing)
        ringOpt->required();
    if (needsIdeal)
        idealOpt->required();
    cmd->add_option("--weights", args.weights, "comma-separated positive integer weights");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", args.out, "also write the output to this file");
}

int dispatch(const std::string& name, const Shared& args) {
    Outcome outcome{"", 0};
    if (name == "ass")
        outcome = runAss(args);
    else if (name == "decompose")
        outcome = runDecompose(args);
    else if (name == "v")
        outcome = runV(args);
    else if (name == "series")
        outcome = runSeries(args);
    else if (name == "report")
        outcome = runReport(args);
    else if (name == "power")
        outcome = runPower(args);
    else if (name == "colon")
        outcome = runColon(args);
    else
        outcome = runSat(args);
    std::fputs(outcome.text.c_str(), stdout);
    if (!args.out.empty()) {
        std::ofstream file(args.out, std::ios::binary);
        if (!file)
            throw DomainError("cannot open output file: " + args.out);
        file.write(outcome.text.data(),
                   static_cast<std::streamsize>(outcome.text.size()));
    }
    return outcome.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monomial ideal engine: v-invariants, associated primes, power sweeps"};
    app.require_subcommand(1);

    Shared args;

    CLI::App* ass = app.add_subcommand("ass", "associated primes of I, I^2, ..., I^N");
    addSharedFlags(ass, args, true, true);
    ass->add_option("--max-power", args.maxPower, "sweep horizon N (default 1)");
    ass->add_option("--max-components", args.maxComponents, "decomposition work ceiling");

    CLI::App* dec = app.add_subcommand("decompose", "irredundant irreducible decomposition");
    addSharedFlags(dec, args, true, true);
    dec->add_option("--max-components", args.maxComponents, "decomposition work ceiling");

    CLI::App* v = app.add_subcommand("v", "v-invariant of I at a prime P");
    addSharedFlags(v, args, true, true);
    v->add_option("--prime", args.prime, "comma-separated variable names")->required();
    v->add_flag("--oracle", args.oracle, "cross-check with the brute-force oracle");
    v->add_option("--degree-bound", args.degreeBound, "oracle enumeration bound");

    CLI::App* series = app.add_subcommand("series", "v_P(I^n) for n = 1..N with a linear fit");
    addSharedFlags(series, args, true, true);
    series->add_option("--prime", args.prime, "comma-separated variable names")->required();
    series->add_option("--max-power", args.maxPower, "sweep horizon N");
    series->add_option("--window", args.window, "fit window W (default 3)");
    series->add_flag("--oracle", args.oracle, "cross-check every value with the oracle");
    series->add_option("--degree-bound", args.degreeBound, "oracle enumeration bound");
    series->add_option("--max-components", args.maxComponents, "decomposition work ceiling");

    CLI::App* rep = app.add_subcommand("report", "full asymptotic report for an ideal");
    addSharedFlags(rep, args, false, false);
    rep->add_option("--max-power", args.maxPower, "sweep horizon N");
    rep->add_option("--window", args.window, "fit window W (default 3)");
    rep->add_flag("--oracle", args.oracle, "cross-check series values with the oracle");
    rep->add_option("--degree-bound", args.degreeBound, "oracle enumeration bound");
    rep->add_option("--max-components", args.maxComponents, "decomposition work ceiling");
    rep->add_option("--seed", args.seed, "corpus mode: summarize a random corpus");
    rep->add_option("--count", args.count, "corpus mode: number of ideals (default 20)");

    CLI::App* pow = app.add_subcommand("power", "I^n, minimalized");
    addSharedFlags(pow, args, true, true);
    pow->add_option("--max-power", args.maxPower, "the exponent n (default 1)");

    CLI::App* col = app.add_subcommand("colon", "colon ideal I : J");
    addSharedFlags(col, args, true, true);
    col->add_option("--by", args.by, "the ideal J")->required();

    CLI::App* sat = app.add_subcommand("sat", "saturation I : J^infinity with its index");
    addSharedFlags(sat, args, true, true);
    sat->add_option("--by", args.by, "the ideal J")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), args);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error at byte %zu: %s\n", e.offset(), e.what());
        return 2;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const ResourceError& e) {
        std::fprintf(stderr, "resource limit: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
}
