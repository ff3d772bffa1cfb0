#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace rcp {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    // measured values with the tolerances they were tested against
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    // criterion name or number; empty runs everything
    std::string filter;
    std::string fixture_dir = RCPERIOD_FIXTURE_DIR;
};

// contraction, residue, geometry, nullity, invariance, linearity, regression, scan, catalog
const std::vector<std::string>& criterion_names();

// Throws Errc::InputError if the filter matches no criterion.
std::vector<CriterionResult> run_verification(const VerifyOptions& opts = {});
CriterionResult run_criterion(int id, const VerifyOptions& opts = {});

std::string format_result(const CriterionResult& r);
nlohmann::json verification_json(const std::vector<CriterionResult>& results);

} // namespace rcp
