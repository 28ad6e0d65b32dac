#include "vnum/format.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include <json.hpp>

#include "vnum/errors.hpp"

namespace vnum {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string joinNames(const MonomialPrime& p, const char* sep) {
    std::string out;
    bool first = true;
    for (std::size_t i : p.support()) {
        if (!first) out += sep;
        out += p.ring().varName(i);
        first = false;
    }
    return out;
}

ordered_json primeNames(const MonomialPrime& p) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i : p.support())
        arr.push_back(p.ring().varName(i));
    return arr;
}

ordered_json idealStrings(const MonomialIdeal& ideal) {
    ordered_json arr = ordered_json::array();
    for (const auto& g : ideal.generators())
        arr.push_back(toText(g, ideal.ring()));
    return arr;
}

ordered_json profileArray(const AssProfile& profile) {
    ordered_json arr = ordered_json::array();
    for (const auto& primes : profile.perPower) {
        ordered_json level = ordered_json::array();
        for (const auto& p : primes)
            level.push_back(primeNames(p));
        arr.push_back(std::move(level));
    }
    return arr;
}

ordered_json fitObject(const std::optional<LinearFit>& fit) {
    if (!fit)
        return ordered_json("unstable");
    ordered_json obj;
    obj["n0"] = fit->n0;
    obj["slope"] = fit->slope;
    obj["intercept"] = fit->intercept;
    return obj;
}

ordered_json seriesObject(const ReportSeries& entry) {
    ordered_json obj;
    obj["prime"] = primeNames(entry.prime);
    ordered_json values = ordered_json::array();
    for (const auto& v : entry.series.values) {
        if (v)
            values.push_back(*v);
        else
            values.push_back(nullptr);
    }
    obj["values"] = std::move(values);
    obj["fit"] = fitObject(entry.fit);
    if (entry.slopeInGeneratorDegrees)
        obj["slope_in_generator_degrees"] = *entry.slopeInGeneratorDegrees;
    if (entry.oracle)
        obj["oracle_ok"] = entry.oracle->allMatch;
    return obj;
}

std::string dumpJson(const ordered_json& j) {
    return j.dump(2) + "\n";
}

std::string fitText(const std::optional<LinearFit>& fit) {
    if (!fit)
        return "unstable";
    std::string s = "v = " + std::to_string(fit->slope) + "*n";
    if (fit->intercept > 0)
        s += " + " + std::to_string(fit->intercept);
    else if (fit->intercept < 0)
        s += " - " + std::to_string(-fit->intercept);
    s += " from n = " + std::to_string(fit->n0);
    return s;
}

std::string valuesText(const VSeries& series) {
    std::string s;
    for (std::size_t i = 0; i < series.values.size(); ++i) {
        if (i) s += ' ';
        s += series.values[i] ? std::to_string(*series.values[i]) : std::string("-");
    }
    return s;
}

std::string alignRows(const std::vector<std::vector<std::string>>& rows, std::size_t indent) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size())
            widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        out += std::string(indent, ' ');
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            if (i + 1 < row.size())
                out += std::string(widths[i] - row[i].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

std::string csvField(const std::string& raw) {
    return "\"" + raw + "\"";
}

void appendSeriesCsv(std::string& out, const ReportSeries& entry) {
    for (std::uint64_t n = 1; n <= entry.series.horizon; ++n) {
        out += csvField(joinNames(entry.prime, ","));
        out += ',' + std::to_string(n) + ',';
        auto v = entry.series.at(n);
        if (v)
            out += std::to_string(*v);
        out += ',';
        if (entry.fit)
            out += std::to_string(entry.fit->slope * static_cast<std::int64_t>(n) +
                                  entry.fit->intercept);
        out += '\n';
    }
}

[[noreturn]] void rejectCsv(const char* what) {
    throw DomainError(std::string("csv output is not available for ") + what +
                      "; use text or json");
}

}  // namespace

std::string toText(const Monomial& m, const RingContext& ring) {
    if (m.varCount() != ring.varCount())
        throw StructureError("monomial length does not match ring");
    if (m.isOne())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < m.varCount(); ++i) {
        std::uint64_t e = m.exponent(i);
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring.varName(i);
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

std::string toText(const MonomialIdeal& ideal) {
    if (ideal.isZero())
        return "0";
    std::string out;
    for (const auto& g : ideal.generators()) {
        if (!out.empty())
            out += ", ";
        out += toText(g, ideal.ring());
    }
    return out;
}

std::string toText(const MonomialPrime& p) {
    return "(" + joinNames(p, ",") + ")";
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
    return os << "(" << toText(ideal) << ")";
}

std::ostream& operator<<(std::ostream& os, const MonomialPrime& p) {
    return os << toText(p);
}

std::string emitIdeal(const MonomialIdeal& ideal, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text:
            return toText(ideal) + "\n";
        case OutputFormat::Json: {
            ordered_json j;
            j["ideal"] = idealStrings(ideal);
            return dumpJson(j);
        }
        case OutputFormat::Csv:
            rejectCsv("ideals");
    }
    throw InternalError("unhandled output format");
}

std::string emitSaturation(const Saturation& sat, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text:
            return "saturation: " + toText(sat.ideal) + "\nindex: " +
                   std::to_string(sat.index) + "\n";
        case OutputFormat::Json: {
            ordered_json j;
            j["ideal"] = idealStrings(sat.ideal);
            j["index"] = sat.index;
            return dumpJson(j);
        }
        case OutputFormat::Csv:
            rejectCsv("saturations");
    }
    throw InternalError("unhandled output format");
}

std::string emitProfile(const AssProfile& profile, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: {
            std::string out = "associated primes by power\n";
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"n", "primes"});
            for (std::uint64_t n = 1; n <= profile.horizon; ++n) {
                std::string primes;
                for (const auto& p : profile.at(n)) {
                    if (!primes.empty()) primes += ", ";
                    primes += toText(p);
                }
                rows.push_back({std::to_string(n), primes});
            }
            return out + alignRows(rows, 2);
        }
        case OutputFormat::Json: {
            ordered_json j;
            j["ideal"] = idealStrings(profile.ideal);
            j["ass_profile"] = profileArray(profile);
            return dumpJson(j);
        }
        case OutputFormat::Csv:
            rejectCsv("associated-prime profiles");
    }
    throw InternalError("unhandled output format");
}

std::string emitComponents(const std::vector<IrreducibleComponent>& components,
                           const RingContext& ring, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: {
            std::string out = "irreducible components (" + std::to_string(components.size()) +
                              ")\n";
            for (const auto& c : components)
                out += "  (" + toText(c.ideal) + ")\n";
            return out;
        }
        case OutputFormat::Json: {
            ordered_json arr = ordered_json::array();
            for (const auto& c : components) {
                ordered_json obj;
                obj["ideal"] = idealStrings(c.ideal);
                ordered_json names = ordered_json::array();
                for (std::size_t i : c.support)
                    names.push_back(ring.varName(i));
                obj["support"] = std::move(names);
                arr.push_back(std::move(obj));
            }
            ordered_json j;
            j["components"] = std::move(arr);
            return dumpJson(j);
        }
        case OutputFormat::Csv:
            rejectCsv("decompositions");
    }
    throw InternalError("unhandled output format");
}

std::string emitV(const VResult& result, const MonomialPrime& p, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text:
            return "v = " + std::to_string(result.value) + ", witness = " +
                   toText(result.witness, p.ring()) + "\n";
        case OutputFormat::Json: {
            ordered_json j;
            j["prime"] = primeNames(p);
            j["v"] = result.value;
            j["witness"] = toText(result.witness, p.ring());
            return dumpJson(j);
        }
        case OutputFormat::Csv:
            rejectCsv("single v-invariants");
    }
    throw InternalError("unhandled output format");
}

std::string emitSeries(const ReportSeries& entry, const RingContext&, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: {
            std::string out = "prime: " + toText(entry.prime) + "\n";
            out += "values: " + valuesText(entry.series) + "\n";
            out += "fit: " + fitText(entry.fit) + "\n";
            if (entry.slopeInGeneratorDegrees)
                out += std::string("slope in generator degrees: ") +
                       (*entry.slopeInGeneratorDegrees ? "yes" : "no") + "\n";
            if (entry.oracle)
                out += std::string("oracle: ") +
                       (entry.oracle->allMatch ? "ok" : "MISMATCH") + "\n";
            return out;
        }
        case OutputFormat::Json:
            return dumpJson(seriesObject(entry));
        case OutputFormat::Csv: {
            std::string out = "prime,n,v,fitted\n";
            appendSeriesCsv(out, entry);
            return out;
        }
    }
    throw InternalError("unhandled output format");
}

std::string emitReport(const Report& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: {
            std::string out;
            std::string vars, weights;
            for (std::size_t i = 0; i < report.ring.varCount(); ++i) {
                if (i) {
                    vars += ", ";
                    weights += ", ";
                }
                vars += report.ring.varName(i);
                weights += std::to_string(report.ring.weight(i));
            }
            std::string degrees;
            for (std::size_t i = 0; i < report.generatorDegrees.size(); ++i) {
                if (i) degrees += ", ";
                degrees += std::to_string(report.generatorDegrees[i]);
            }
            out += "ring: " + vars + "  weights: " + weights + "\n";
            out += "ideal: " + toText(report.ideal) + "\n";
            out += "generator degrees: " + degrees + "\n\n";
            out += emitProfile(report.profile, OutputFormat::Text);
            if (report.stable) {
                std::string primes;
                for (const auto& p : report.stable->primes) {
                    if (!primes.empty()) primes += ", ";
                    primes += toText(p);
                }
                out += "stable primes: " + primes + "  from n = " +
                       std::to_string(report.stable->nStab) + "\n";
            } else {
                out += "stable primes: unstable\n";
            }
            out += "ratliff index: " +
                   (report.ratliff ? std::to_string(*report.ratliff) : std::string("unstable")) +
                   "\n\n";
            out += "v-series\n";
            std::vector<std::vector<std::string>> rows;
            bool oracle = !report.series.empty() && report.series.front().oracle.has_value();
            std::vector<std::string> header = {"prime", "values", "fit", "slope in degrees"};
            if (oracle)
                header.push_back("oracle");
            rows.push_back(std::move(header));
            for (const auto& entry : report.series) {
                std::vector<std::string> row = {
                    toText(entry.prime), valuesText(entry.series), fitText(entry.fit),
                    entry.slopeInGeneratorDegrees
                        ? std::string(*entry.slopeInGeneratorDegrees ? "yes" : "no")
                        : std::string("-")};
                if (oracle)
                    row.push_back(entry.oracle && !entry.oracle->allMatch ? "MISMATCH" : "ok");
                rows.push_back(std::move(row));
            }
            out += alignRows(rows, 2);
            if (!report.notes.empty()) {
                out += "\nnotes\n";
                for (const auto& note : report.notes)
                    out += "  - " + note + "\n";
            }
            return out;
        }
        case OutputFormat::Json: {
            ordered_json j;
            ordered_json ringObj;
            ringObj["vars"] = report.ring.varNames();
            ringObj["weights"] = report.ring.weights();
            j["ring"] = std::move(ringObj);
            j["ideal"] = idealStrings(report.ideal);
            j["generator_degrees"] = report.generatorDegrees;
            j["ass_profile"] = profileArray(report.profile);
            if (report.stable) {
                ordered_json stable;
                ordered_json set = ordered_json::array();
                for (const auto& p : report.stable->primes)
                    set.push_back(primeNames(p));
                stable["set"] = std::move(set);
                stable["n_stab"] = report.stable->nStab;
                j["stable_primes"] = std::move(stable);
            } else {
                j["stable_primes"] = "unstable";
            }
            ordered_json series = ordered_json::array();
            for (const auto& entry : report.series)
                series.push_back(seriesObject(entry));
            j["series"] = std::move(series);
            if (report.ratliff)
                j["ratliff_index"] = *report.ratliff;
            else
                j["ratliff_index"] = "unstable";
            if (!report.notes.empty())
                j["notes"] = report.notes;
            if (report.resourceAborted)
                j["resource_aborted"] = true;
            return dumpJson(j);
        }
        case OutputFormat::Csv: {
            std::string out = "prime,n,v,fitted\n";
            for (const auto& entry : report.series)
                appendSeriesCsv(out, entry);
            return out;
        }
    }
    throw InternalError("unhandled output format");
}

}  // namespace vnum
