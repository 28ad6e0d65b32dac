#pragma once

#include <string>

#include "vnum/ideal.hpp"
#include "vnum/prime.hpp"
#include "vnum/ring.hpp"

namespace vnum {

/// Build a ring from "x,y,z" plus an optional weight list "1,1,2". An empty
/// weight string means all weights 1. Variable names match
/// [A-Za-z][A-Za-z0-9_]*; duplicates, non-positive weights, and a weight
/// count different from the variable count raise ParseError with the byte
/// offset of the offending token.
RingContext parseRing(const std::string& varsText, const std::string& weightsText = "");

/// Parse "x^2, x*y" style ideal expressions over a declared ring.
///
/// Grammar: ideal := monomial (',' monomial)* ; monomial := '1' | term
/// ('*' term)* ; term := varname ('^' uint)? with uint >= 1. Whitespace is
/// ignored; repeated variables within one monomial multiply. The result is
/// minimalized. Undeclared variables and malformed exponents raise
/// ParseError with the byte offset.
MonomialIdeal parseIdeal(const std::string& text, const RingContext& ring);

/// Parse a prime from a comma-separated variable list such as "x,y".
/// Undeclared or repeated variables raise ParseError with the byte offset.
MonomialPrime parsePrime(const std::string& text, const RingContext& ring);

}  // namespace vnum
