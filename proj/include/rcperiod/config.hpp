#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rcperiod/catalog.hpp"
#include "rcperiod/period.hpp"

namespace rcp {

struct HypersurfaceSpec {
    // catalog id, or empty with explicit terms
    std::string id;
    int nvars = 0;
    std::vector<std::pair<Exponent, Complex>> terms;
};

struct FamilySpec {
    // catalog id, or empty with explicit coordinates in s, t
    std::string id;
    std::vector<std::string> coordinates;
    int degree = 1;
    Complex zeta{1.0};
    Complex anchor{};
};

struct Tolerances {
    double vanish = 1e-9;
    double comparison = 1e-6;
    int quadrature_nodes = 256;
};

struct RunConfig {
    HypersurfaceSpec hypersurface;
    FamilySpec family;
    std::string polynomial;
    std::vector<Complex> samples;
    Tolerances tolerances;
    SignConvention sign = SignConvention::Cocycle;
    CollisionPolicy collisions = CollisionPolicy::Include;
    // zeta index of the closed-form reference; compared only when set
    std::optional<int> reference_zeta;
    std::string csv_out;
    std::string json_out;
};

// [re, im], "p/q", "p", or a plain JSON number. `path` is used in error messages.
Complex parse_number(const nlohmann::json& j, const std::string& path);
nlohmann::json number_json(Complex c);

// Throws Errc::ConfigError naming the offending field.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& file);
// normalized form: parse_config(to_json(c)) reproduces c
nlohmann::json to_json(const RunConfig& c);

Hypersurface build_hypersurface(const RunConfig& c);
CurveFamily build_family(const RunConfig& c);
MultiPoly build_polynomial(const RunConfig& c, int nvars);
PeriodOptions build_options(const RunConfig& c);

} // namespace rcp
