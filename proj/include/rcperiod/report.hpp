#pragma once

#include <string>

#include "json.hpp"

#include "rcperiod/period.hpp"

namespace rcp {

// %.16e: 17 significant digits, '.' separator regardless of locale
std::string format_sci(double v);

// one row per sample: s, total, |total|, VANISHES and diagnostics
std::string period_csv(const SweepResult& sw, double vanish_tol);
nlohmann::json period_json(const SweepResult& sw, double vanish_tol, int quadrature_nodes);

// monomial, then |period| and phase per sample, then VANISHES
std::string scan_csv(const ScanTable& table);
nlohmann::json scan_json(const ScanTable& table, double vanish_tol);

nlohmann::json comparison_json(const ComparisonReport& c);

} // namespace rcp
