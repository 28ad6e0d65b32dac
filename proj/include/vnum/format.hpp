#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "vnum/asymptotics.hpp"
#include "vnum/decompose.hpp"
#include "vnum/ideal.hpp"
#include "vnum/prime.hpp"
#include "vnum/vinvariant.hpp"

namespace vnum {

enum class OutputFormat { Text, Json, Csv };

/// "x^2*y" style: factors in declared variable order joined by '*', '^' only
/// for exponents above 1, "1" for the unit monomial. Round-trips through
/// parseIdeal.
std::string toText(const Monomial& m, const RingContext& ring);

/// Generators joined by ", "; "0" for the zero ideal.
std::string toText(const MonomialIdeal& ideal);

/// "(x,y)" style.
std::string toText(const MonomialPrime& p);

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);
std::ostream& operator<<(std::ostream& os, const MonomialPrime& p);

/// Emitters return the full output text including the trailing newline.
/// OutputFormat::Csv is only meaningful for series and reports; the other
/// emitters reject it with DomainError.
std::string emitIdeal(const MonomialIdeal& ideal, OutputFormat format);
std::string emitSaturation(const Saturation& sat, OutputFormat format);
std::string emitProfile(const AssProfile& profile, OutputFormat format);
std::string emitComponents(const std::vector<IrreducibleComponent>& components,
                           const RingContext& ring, OutputFormat format);
std::string emitV(const VResult& result, const MonomialPrime& p, OutputFormat format);
std::string emitSeries(const ReportSeries& entry, const RingContext& ring, OutputFormat format);
std::string emitReport(const Report& report, OutputFormat format);

}  // namespace vnum
