#pragma once

#include <vector>

#include "rcperiod/curve.hpp"
#include "rcperiod/hypersurface.hpp"

namespace rcp {

// max |coeff of F(x(t))| / (scale(F) scale(x)^d)
double containment_residual(const Hypersurface& X, const CurveJet& jet);

// max |coeff of sum_i y_i F_i(x(t))| / (scale(F) scale(x)^(d-1) scale(y)); 0 when y == 0
double tangency_residual(const Hypersurface& X, const CurveJet& jet);

struct SpotCheck {
    std::vector<Complex> point;
    // max |F_i(p)| / (scale(F) |p|_inf^(d-1))
    double gradient = 0.0;
    // |F(p)| / (scale(F) |p|_inf^d)
    double on_surface = 0.0;
    bool smooth = false;
};

struct SpotCheckReport {
    std::vector<SpotCheck> points;
    int failures = 0;
    bool all_smooth() const noexcept { return failures == 0; }
};

SpotCheckReport smooth_spot_check(const Hypersurface& X, const std::vector<std::vector<Complex>>& points,
                                  double tol = 1e-8);

} // namespace rcp
