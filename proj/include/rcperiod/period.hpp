#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rcperiod/griffiths.hpp"

namespace rcp {

enum class CollisionPolicy {
    // residues at shared zeros of F_{j0}(x) and F_{j1}(x) are taken and flagged
    Include,
    // a shared zero raises Errc::BaseLocusCollision
    Error,
};

struct PeriodOptions {
    SignConvention sign = SignConvention::Cocycle;
    CollisionPolicy collisions = CollisionPolicy::Include;
    int quadrature_nodes = 256;
    double vanish_tol = 1e-9;
    RootOptions roots{};
};

struct SiteResidue {
    PoleSite site;
    Complex quadrature{};
    // |analytic - quadrature| / max(|analytic|, quadrature magnitude)
    double disagreement = 0.0;
    bool collision = false;
};

struct PairContribution {
    int j0 = 0;
    int j1 = 0;
    // sum of residues at the zeros of F_{j0}(x(t)) on P^1
    Complex value{};
    std::vector<SiteResidue> sites;
    // residues at the zeros of F_{j1}(x(t)), for the dual-sum diagnostic
    Complex partner_sum{};
    // |sum of residues over every pole on P^1| relative to the largest one
    double dual_check = 0.0;
    // max |numerator coefficient| / nominal magnitude
    double numerator_rel = 0.0;
    bool skipped = false;
    std::string note;
};

struct PeriodDiagnostics {
    double min_pole_separation = 0.0; // +inf when no pair has two finite poles
    double backend_max_disagreement = 0.0;
    double dual_max = 0.0;
    double numerator_rel_max = 0.0;
    int collisions = 0;
    int skipped_pairs = 0;
};

// Unnormalized value of int_{Z_s} omega_P / ds: no 2 pi i, no (-1)^m / q!.
struct PeriodReport {
    Complex s{};
    Complex total{};
    std::vector<PairContribution> pairs;
    PeriodDiagnostics diagnostics;

    // max(1, max |pair value|)
    double scale() const noexcept;
    bool vanishes(double tol = 1e-9) const noexcept;
    const PairContribution& pair(int j0, int j1) const;
};

// P-independent data of one jet: pair skeletons and pole structure.
struct PreparedJet {
    struct Pair {
        PairIntegrand skeleton;
        std::vector<RootSite> zeros_a; // finite zeros of F_{j0}(x)
        std::vector<RootSite> zeros_b;
        int inf_a = 0; // order of zero at infinity
        int inf_b = 0;
        std::vector<Complex> poles; // distinct finite poles of the pair's denominator
        std::vector<int> pole_orders;
    };
    CurveJet jet;
    std::vector<Pair> pairs;
};

PreparedJet prepare_jet(const Hypersurface& X, const CurveJet& jet, const PeriodOptions& opts = {});
PeriodReport evaluate_period(const Hypersurface& X, const PreparedJet& prepared, const MultiPoly& P,
                             const PeriodOptions& opts = {});

PeriodReport period_at_jet(const Hypersurface& X, const MultiPoly& P, const CurveJet& jet,
                           const PeriodOptions& opts = {});
PeriodReport period_at(const Hypersurface& X, const MultiPoly& P, const CurveFamily& fam, Complex s,
                       const PeriodOptions& opts = {});

struct SweepResult {
    std::string family;
    std::string polynomial;
    std::vector<PeriodReport> samples;
    bool vanishes_identically = false;
};

SweepResult sweep(const Hypersurface& X, const MultiPoly& P, const CurveFamily& fam, const std::vector<Complex>& s_list,
                  const PeriodOptions& opts = {});

enum class Verdict { Proportional, Mismatch };
const char* verdict_name(Verdict v) noexcept;

struct ComparisonReport {
    std::vector<Complex> ratios;
    Complex constant{};
    // max |ratio - constant| / |constant|; +inf when constant == 0
    double max_rel_deviation = 0.0;
    double tolerance = 1e-6;
    Verdict verdict = Verdict::Mismatch;
};

// Ratios computed/reference per sample against their geometric median.
ComparisonReport compare_closed_form(const SweepResult& sw, const std::function<Complex(Complex)>& reference,
                                     double tolerance = 1e-6);
// same, on bare values
ComparisonReport compare_values(const std::vector<Complex>& computed, const std::vector<Complex>& reference,
                                double tolerance = 1e-6);

Complex geometric_median(const std::vector<Complex>& points);

struct ScanRow {
    Exponent monomial;
    std::vector<Complex> values;
    bool vanishes = false;
};

struct ScanTable {
    std::string family;
    std::vector<Complex> samples;
    std::vector<ScanRow> rows; // grlex order, x0^d first
};

// One period per (monomial of the given degree, sample). threads == 0 picks
// the hardware concurrency; rows are merged in monomial order either way.
ScanTable monomial_scan(const Hypersurface& X, const CurveFamily& fam, const std::vector<Complex>& s_list, int degree,
                        const PeriodOptions& opts = {}, unsigned threads = 0);

} // namespace rcp
