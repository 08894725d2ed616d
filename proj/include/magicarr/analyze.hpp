#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "magicarr/arrangement.hpp"
#include "magicarr/complex2.hpp"
#include "magicarr/pauli.hpp"
#include "magicarr/presentation.hpp"

namespace magicarr {

struct AnalyzeOptions {
    uint64_t oracle_cap = 4096;
    ResourceLimits limits;
    bool strict = false;
    std::optional<std::string> basepoint;
};

struct AnalyzeInputs {
    Arrangement arr;
    std::optional<CellComplex2> realization;
    std::optional<OperatorAssignment> operators;
};

/// Full pipeline: classical solve (+oracle), homology, per-realization
/// topology/pi1/lift, operator checks, Theorem A, prime decomposition, and
/// the overall magic classification. Deterministic: identical inputs yield
/// byte-identical reports.
nlohmann::ordered_json analyze(const AnalyzeInputs& in, const AnalyzeOptions& opt);

/// Render the structured report as a short text summary.
std::string human_report(const nlohmann::ordered_json& report);

}  // namespace magicarr
