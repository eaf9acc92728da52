#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sphmap/fields.hpp"

namespace sphmap {

struct NumericSummary {
    std::uint64_t seed = 0;
    int points = 0;
    double tol = 0.0;
    double max_residual = 0.0;               // over symbolically-zero fields
    std::optional<double> nonzero_witness;   // weakest witness among nonzero fields
};

NumericSummary numeric_summary(const AnalysisReport& report, std::uint64_t seed,
                               int points, double tol);

std::string report_to_json(const AnalysisReport& report, const std::string& source,
                           const NumericSummary& numeric);
std::string report_to_human(const AnalysisReport& report, const std::string& source,
                            const NumericSummary& numeric);

}  // namespace sphmap
