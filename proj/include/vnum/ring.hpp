#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vnum/errors.hpp"

namespace vnum {

/// Ambient polynomial ring: an ordered list of named variables, each with a
/// positive integer weight. The weighted degree of x_i is weights[i]; all
/// grading in the library runs through these weights.
class RingContext {
public:
    RingContext(std::vector<std::string> varNames, std::vector<std::uint64_t> weights)
        : varNames_(std::move(varNames)), weights_(std::move(weights)) {
        if (varNames_.empty())
            throw StructureError("ring needs at least one variable");
        if (weights_.size() != varNames_.size())
            throw StructureError("variable and weight counts differ");
        for (const auto& name : varNames_) {
            if (name.empty())
                throw StructureError("empty variable name");
        }
        for (std::size_t i = 0; i < varNames_.size(); ++i) {
            for (std::size_t j = i + 1; j < varNames_.size(); ++j) {
                if (varNames_[i] == varNames_[j])
                    throw StructureError("duplicate variable name '" + varNames_[i] + "'");
            }
        }
        for (std::uint64_t w : weights_) {
            if (w == 0)
                throw StructureError("weights must be >= 1");
        }
    }

    /// Standard grading: every variable has weight 1.
    static RingContext unitWeights(std::vector<std::string> varNames) {
        std::vector<std::uint64_t> ones(varNames.size(), 1);
        return RingContext(std::move(varNames), std::move(ones));
    }

    std::size_t varCount() const noexcept { return varNames_.size(); }
    const std::vector<std::string>& varNames() const noexcept { return varNames_; }
    const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }
    const std::string& varName(std::size_t i) const { return varNames_.at(i); }
    std::uint64_t weight(std::size_t i) const { return weights_.at(i); }

    std::uint64_t maxWeight() const {
        std::uint64_t m = 0;
        for (std::uint64_t w : weights_) m = std::max(m, w);
        return m;
    }

    std::optional<std::size_t> varIndex(std::string_view name) const {
        for (std::size_t i = 0; i < varNames_.size(); ++i)
            if (varNames_[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const RingContext&) const = default;

private:
    std::vector<std::string> varNames_;
    std::vector<std::uint64_t> weights_;
};

}  // namespace vnum
