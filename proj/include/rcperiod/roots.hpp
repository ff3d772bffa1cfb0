#pragma once

#include <vector>

#include "rcperiod/unipoly.hpp"

namespace rcp {

struct RootSite {
    Complex root;
    int multiplicity = 1;
};

struct RootOptions {
    int max_iterations = 500;
    // roots closer than cluster_tol * (1 + max|root|) are always merged
    double cluster_tol = 1e-9;
    // Taylor-coefficient test used to recognise numerically multiple roots
    double multiplicity_tol = 1e-9;
    // accepted residual |p(r)| <= residual_tol * scale(p) * (1 + |r|)^deg
    double residual_tol = 1e-9;
};

// Roots of a nonzero polynomial with multiplicities summing to its degree.
// Aberth simultaneous iteration, companion-matrix eigenvalues as fallback.
// Throws Errc::NonConvergence if neither produces acceptable residuals.
std::vector<RootSite> poly_roots(const UniPoly& p, const RootOptions& opts = {});

// Number of leading Taylor coefficients of p at t0 that are zero up to
// rounding, i.e. the numerical multiplicity of t0 as a root of p.
int vanishing_order(const UniPoly& p, Complex t0, double tol = 1e-9);

// Raw simultaneous iteration; returns false if the iteration cap was hit.
bool aberth(const UniPoly& p, std::vector<Complex>& roots, int max_iterations);
std::vector<Complex> companion_roots(const UniPoly& p);

} // namespace rcp
