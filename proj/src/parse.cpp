#include "vnum/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <vector>

#include "vnum/errors.hpp"

namespace vnum {

namespace {

bool isNameStart(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool isNameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skipSpace() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool atEnd() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    /// Reads [A-Za-z][A-Za-z0-9_]* starting at the cursor.
    std::string readName() {
        if (atEnd() || !isNameStart(peek()))
            throw ParseError("expected a variable name", pos);
        std::size_t start = pos;
        while (!atEnd() && isNameChar(peek()))
            ++pos;
        return text.substr(start, pos - start);
    }

    std::uint64_t readUint(const char* what) {
        if (atEnd() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(std::string("expected ") + what, pos);
        std::size_t start = pos;
        while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos;
        std::uint64_t value = 0;
        auto result = std::from_chars(text.data() + start, text.data() + pos, value);
        if (result.ec != std::errc())
            throw ParseError(std::string(what) + " does not fit in 64 bits", start);
        return value;
    }
};

std::vector<std::pair<std::string, std::size_t>> splitNames(const std::string& text) {
    Cursor cur{text};
    std::vector<std::pair<std::string, std::size_t>> names;
    while (true) {
        cur.skipSpace();
        std::size_t start = cur.pos;
        names.emplace_back(cur.readName(), start);
        cur.skipSpace();
        if (cur.atEnd())
            break;
        if (cur.peek() != ',')
            throw ParseError("expected ',' between variable names", cur.pos);
        ++cur.pos;
    }
    return names;
}

}  // namespace

RingContext parseRing(const std::string& varsText, const std::string& weightsText) {
    auto names = splitNames(varsText);
    std::vector<std::string> vars;
    vars.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (names[j].first == names[i].first)
                throw ParseError("duplicate variable name '" + names[i].first + "'",
                                 names[i].second);
        }
        vars.push_back(names[i].first);
    }

    if (weightsText.empty())
        return RingContext(std::move(vars), std::vector<std::uint64_t>(names.size(), 1));

    Cursor cur{weightsText};
    std::vector<std::uint64_t> weights;
    while (true) {
        cur.skipSpace();
        if (weights.size() == vars.size())
            throw ParseError("more weights than variables", cur.pos);
        std::size_t start = cur.pos;
        std::uint64_t w = cur.readUint("a positive integer weight");
        if (w == 0)
            throw ParseError("weight must be >= 1", start);
        weights.push_back(w);
        cur.skipSpace();
        if (cur.atEnd())
            break;
        if (cur.peek() != ',')
            throw ParseError("expected ',' between weights", cur.pos);
        ++cur.pos;
    }
    if (weights.size() != vars.size())
        throw ParseError("fewer weights than variables", weightsText.size());
    return RingContext(std::move(vars), std::move(weights));
}

namespace {

Monomial parseMonomial(Cursor& cur, const RingContext& ring) {
    cur.skipSpace();
    if (cur.atEnd())
        throw ParseError("expected a monomial", cur.pos);
    if (cur.peek() == '1') {
        ++cur.pos;
        return Monomial::one(ring.varCount());
    }
    std::vector<std::uint64_t> exps(ring.varCount(), 0);
    while (true) {
        cur.skipSpace();
        std::size_t nameStart = cur.pos;
        std::string name = cur.readName();
        auto idx = ring.varIndex(name);
        if (!idx)
            throw ParseError("undeclared variable '" + name + "'", nameStart);
        std::uint64_t exp = 1;
        cur.skipSpace();
        if (!cur.atEnd() && cur.peek() == '^') {
            ++cur.pos;
            cur.skipSpace();
            std::size_t numStart = cur.pos;
            exp = cur.readUint("an exponent");
            if (exp == 0)
                throw ParseError("exponent must be >= 1 (write '1' for the unit monomial)",
                                 numStart);
        }
        exps[*idx] = detail::checkedAdd(exps[*idx], exp);
        cur.skipSpace();
        if (cur.atEnd() || cur.peek() != '*')
            break;
        ++cur.pos;
    }
    return Monomial(std::move(exps));
}

}  // namespace

MonomialIdeal parseIdeal(const std::string& text, const RingContext& ring) {
    Cursor cur{text};
    std::vector<Monomial> gens;
    while (true) {
        gens.push_back(parseMonomial(cur, ring));
        cur.skipSpace();
        if (cur.atEnd())
            break;
        if (cur.peek() != ',')
            throw ParseError("expected ',' or end of input", cur.pos);
        ++cur.pos;
    }
    return MonomialIdeal::fromGenerators(ring, std::move(gens));
}

MonomialPrime parsePrime(const std::string& text, const RingContext& ring) {
    auto names = splitNames(text);
    std::vector<std::size_t> support;
    for (const auto& [name, offset] : names) {
        auto idx = ring.varIndex(name);
        if (!idx)
            throw ParseError("undeclared variable '" + name + "'", offset);
        for (std::size_t seen : support) {
            if (seen == *idx)
                throw ParseError("duplicate variable name '" + name + "'", offset);
        }
        support.push_back(*idx);
    }
    return MonomialPrime(ring, std::move(support));
}

}  // namespace vnum
