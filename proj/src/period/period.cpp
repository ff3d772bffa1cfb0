#include "rcperiod/period.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rcperiod/error.hpp"

namespace rcp {

namespace {

bool same_point(Complex a, Complex b)
{
    return std::abs(a - b) <= 1e-7 * (1.0 + std::max(std::abs(a), std::abs(b)));
}

std::string point_text(const std::optional<Complex>& p)
{
    if (!p)
        return "t=inf";
    return "t=" + format_complex(*p);
}

double relative_gap(Complex a, Complex q, double magnitude)
{
    const double denom = std::max(std::abs(a), magnitude);
    if (denom == 0.0)
        return 0.0;
    return std::abs(a - q) / denom;
}

// analytic and quadrature residue of f dt at a finite point or at infinity
SiteResidue site_residue(const RationalFunction& f, const std::optional<Complex>& where, int den_order,
                         const std::vector<Complex>& poles, int nodes)
{
    SiteResidue out;
    out.site.location = where;
    if (f.num().is_zero()) {
        out.site.order = 0;
        return out;
    }
    if (where) {
        const Complex t0 = *where;
        out.site.order = den_order - std::min(vanishing_order(f.num(), t0), den_order);
        out.site.residue = residue_laurent(f, t0, den_order);
        std::vector<Complex> others;
        for (const auto& p : poles)
            if (!same_point(p, t0))
                others.push_back(p);
        const double r = quadrature_radius(t0, others);
        const auto q = residue_quadrature([&f](Complex t) { return f(t); }, t0, r, others, nodes);
        out.quadrature = q.value;
        out.disagreement = relative_gap(out.site.residue, q.value, q.magnitude);
    } else {
        out.site.order = order_at_infinity(f);
        out.site.residue = residue_at_infinity(f);
        // u = 1/t: residue of g(u) = -f(1/u)/u^2 at u = 0
        std::vector<Complex> others;
        for (const auto& p : poles)
            if (p != 0.0)
                others.push_back(1.0 / p);
        const double r = quadrature_radius(0.0, others);
        const auto g = [&f](Complex u) { return -f(1.0 / u) / (u * u); };
        const auto q = residue_quadrature(g, 0.0, r, others, nodes);
        out.quadrature = q.value;
        out.disagreement = relative_gap(out.site.residue, q.value, q.magnitude);
    }
    return out;
}

struct Pole {
    Complex at;
    int mult_a = 0;
    int mult_b = 0;
};

std::vector<Pole> merge_poles(const std::vector<RootSite>& za, const std::vector<RootSite>& zb)
{
    std::vector<Pole> out;
    for (const auto& r : za)
        out.push_back({r.root, r.multiplicity, 0});
    for (const auto& r : zb) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Pole& p) { return same_point(p.at, r.root); });
        if (it != out.end())
            it->mult_b += r.multiplicity;
        else
            out.push_back({r.root, 0, r.multiplicity});
    }
    return out;
}

std::vector<RootSite> zeros_of(const BinaryForm& f, const RootOptions& opts)
{
    const UniPoly a = f.dehomogenize();
    if (a.degree() < 1)
        return {};
    return poly_roots(a, opts);
}

} // namespace

double PeriodReport::scale() const noexcept
{
    double s = 1.0;
    for (const auto& p : pairs)
        s = std::max(s, std::abs(p.value));
    return s;
}

bool PeriodReport::vanishes(double tol) const noexcept
{
    return std::abs(total) < tol * scale();
}

const PairContribution& PeriodReport::pair(int j0, int j1) const
{
    for (const auto& p : pairs)
        if (p.j0 == j0 && p.j1 == j1)
            return p;
    throw Error(Errc::IndexError, "no pair (" + std::to_string(j0) + "," + std::to_string(j1) + ") in report");
}

PreparedJet prepare_jet(const Hypersurface& X, const CurveJet& jet, const PeriodOptions& opts)
{
    PreparedJet out;
    out.jet = jet;
    const MultiPoly one = MultiPoly::constant(X.nvars(), 1.0);
    for (int j0 = 0; j0 < X.nvars(); ++j0)
        for (int j1 = j0 + 1; j1 < X.nvars(); ++j1) {
            PreparedJet::Pair pr;
            pr.skeleton = pair_integrand(X, one, jet, j0, j1, opts.sign);
            if (!pr.skeleton.degenerate) {
                pr.zeros_a = zeros_of(pr.skeleton.A, opts.roots);
                pr.zeros_b = zeros_of(pr.skeleton.B, opts.roots);
                pr.inf_a = pr.skeleton.A.order_at_infinity();
                pr.inf_b = pr.skeleton.B.order_at_infinity();
                for (const auto& p : merge_poles(pr.zeros_a, pr.zeros_b)) {
                    pr.poles.push_back(p.at);
                    pr.pole_orders.push_back(p.mult_a + p.mult_b);
                }
            }
            out.pairs.push_back(std::move(pr));
        }
    return out;
}

PeriodReport evaluate_period(const Hypersurface& X, const PreparedJet& prepared, const MultiPoly& P,
                             const PeriodOptions& opts)
{
    const int want = X.degree() * 2 - X.m() - 2;
    if (!P.is_zero() && (!P.is_homogeneous() || P.total_degree() != want))
        throw Error(Errc::DegreeError, "P must be homogeneous of degree " + std::to_string(want));
    if (P.nvars() != X.nvars())
        throw Error(Errc::DimensionMismatch, "P and X disagree on the number of coordinates");

    PeriodReport rep;
    rep.s = prepared.jet.s;
    auto& diag = rep.diagnostics;
    diag.min_pole_separation = std::numeric_limits<double>::infinity();

    for (const auto& pr : prepared.pairs) {
        PairContribution pc;
        pc.j0 = pr.skeleton.j0;
        pc.j1 = pr.skeleton.j1;
        if (pr.skeleton.degenerate) {
            pc.skipped = true;
            pc.note = "F_" + std::to_string(pc.j0) + "(x) or F_" + std::to_string(pc.j1) + "(x) vanishes identically";
            ++diag.skipped_pairs;
            rep.pairs.push_back(std::move(pc));
            continue;
        }
        const PairIntegrand in = with_numerator(pr.skeleton, P, prepared.jet);
        const RationalFunction& f = in.rf;
        if (in.numerator_scale > 0.0)
            pc.numerator_rel = in.numerator.scale() / in.numerator_scale;

        for (std::size_t a = 0; a < pr.poles.size(); ++a)
            for (std::size_t b = a + 1; b < pr.poles.size(); ++b)
                diag.min_pole_separation = std::min(diag.min_pole_separation, std::abs(pr.poles[a] - pr.poles[b]));

        const auto order_at = [&](Complex t) {
            for (std::size_t k = 0; k < pr.poles.size(); ++k)
                if (same_point(pr.poles[k], t))
                    return pr.pole_orders[k];
            return 0;
        };
        const auto shared = [&](const RootSite& z, const std::vector<RootSite>& other) {
            return std::any_of(other.begin(), other.end(), [&](const RootSite& o) { return same_point(o.root, z.root); });
        };
        const auto collide = [&](const std::optional<Complex>& where) {
            if (opts.collisions == CollisionPolicy::Error)
                throw Error(Errc::BaseLocusCollision, "pair (" + std::to_string(pc.j0) + "," + std::to_string(pc.j1)
                                                          + ") shares the zero " + point_text(where));
            ++diag.collisions;
        };

        Complex dual{};
        double dual_scale = 0.0;
        for (const auto& z : pr.zeros_a) {
            SiteResidue sr = site_residue(f, z.root, order_at(z.root), pr.poles, opts.quadrature_nodes);
            if (shared(z, pr.zeros_b)) {
                sr.collision = true;
                collide(z.root);
            }
            pc.value += sr.site.residue;
            dual += sr.site.residue;
            dual_scale = std::max(dual_scale, std::abs(sr.site.residue));
            pc.sites.push_back(sr);
        }
        const bool inf_shared = pr.inf_a > 0 && pr.inf_b > 0;
        if (pr.inf_a > 0) {
            SiteResidue sr = site_residue(f, std::nullopt, 0, pr.poles, opts.quadrature_nodes);
            if (inf_shared) {
                sr.collision = true;
                collide(std::nullopt);
            }
            pc.value += sr.site.residue;
            dual += sr.site.residue;
            dual_scale = std::max(dual_scale, std::abs(sr.site.residue));
            pc.sites.push_back(sr);
        }
        for (const auto& z : pr.zeros_b) {
            const Complex r = residue_laurent(f, z.root, order_at(z.root));
            pc.partner_sum += r;
            if (!shared(z, pr.zeros_a)) {
                dual += r;
                dual_scale = std::max(dual_scale, std::abs(r));
            }
        }
        if (pr.inf_b > 0) {
            const Complex r = residue_at_infinity(f);
            pc.partner_sum += r;
            if (!inf_shared) {
                dual += r;
                dual_scale = std::max(dual_scale, std::abs(r));
            }
        }
        // poles of f dt away from both loci: infinity when neither form vanishes there
        if (pr.inf_a == 0 && pr.inf_b == 0) {
            const Complex r = residue_at_infinity(f);
            dual += r;
            dual_scale = std::max(dual_scale, std::abs(r));
        }
        pc.dual_check = std::abs(dual) / std::max(1.0, dual_scale);

        for (const auto& sr : pc.sites)
            diag.backend_max_disagreement = std::max(diag.backend_max_disagreement, sr.disagreement);
        diag.dual_max = std::max(diag.dual_max, pc.dual_check);
        diag.numerator_rel_max = std::max(diag.numerator_rel_max, pc.numerator_rel);
        rep.total += pc.value;
        rep.pairs.push_back(std::move(pc));
    }
    return rep;
}

PeriodReport period_at_jet(const Hypersurface& X, const MultiPoly& P, const CurveJet& jet, const PeriodOptions& opts)
{
    return evaluate_period(X, prepare_jet(X, jet, opts), P, opts);
}

PeriodReport period_at(const Hypersurface& X, const MultiPoly& P, const CurveFamily& fam, Complex s,
                       const PeriodOptions& opts)
{
    return period_at_jet(X, P, fam(s), opts);
}

SweepResult sweep(const Hypersurface& X, const MultiPoly& P, const CurveFamily& fam, const std::vector<Complex>& s_list,
                  const PeriodOptions& opts)
{
    if (s_list.empty())
        throw Error(Errc::InputError, "sweep needs at least one sample");
    SweepResult out;
    out.family = fam.name;
    out.polynomial = P.to_string();
    out.vanishes_identically = true;
    for (const auto& s : s_list) {
        out.samples.push_back(period_at(X, P, fam, s, opts));
        out.vanishes_identically = out.vanishes_identically && out.samples.back().vanishes(opts.vanish_tol);
    }
    return out;
}

const char* verdict_name(Verdict v) noexcept
{
    return v == Verdict::Proportional ? "PROPORTIONAL" : "MISMATCH";
}

Complex geometric_median(const std::vector<Complex>& points)
{
    if (points.empty())
        throw Error(Errc::InputError, "geometric median of an empty set");
    Complex m{};
    for (const auto& p : points)
        m += p;
    m /= static_cast<double>(points.size());
    double spread = 0.0;
    for (const auto& p : points)
        spread = std::max(spread, std::abs(p - m));
    if (spread == 0.0)
        return m;
    // Weiszfeld
    for (int it = 0; it < 1000; ++it) {
        Complex num{};
        double den = 0.0;
        bool hit = false;
        for (const auto& p : points) {
            const double d = std::abs(p - m);
            if (d < 1e-15 * spread) {
                hit = true;
                continue;
            }
            num += p / d;
            den += 1.0 / d;
        }
        if (den == 0.0)
            break;
        const Complex next = num / den;
        const bool done = std::abs(next - m) <= 1e-15 * (spread + std::abs(m));
        m = next;
        if (done || hit)
            break;
    }
    return m;
}

ComparisonReport compare_values(const std::vector<Complex>& computed, const std::vector<Complex>& reference,
                                double tolerance)
{
    if (computed.size() != reference.size() || computed.empty())
        throw Error(Errc::DimensionMismatch, "comparison needs matching nonempty sample lists");
    ComparisonReport out;
    out.tolerance = tolerance;
    for (std::size_t i = 0; i < computed.size(); ++i) {
        if (reference[i] == 0.0)
            throw Error(Errc::ReferenceZero, "reference vanishes at sample " + std::to_string(i));
        out.ratios.push_back(computed[i] / reference[i]);
    }
    out.constant = geometric_median(out.ratios);
    if (out.constant == 0.0) {
        out.max_rel_deviation = std::numeric_limits<double>::infinity();
        out.verdict = Verdict::Mismatch;
        return out;
    }
    for (const auto& r : out.ratios)
        out.max_rel_deviation = std::max(out.max_rel_deviation, std::abs(r - out.constant) / std::abs(out.constant));
    out.verdict = out.max_rel_deviation < tolerance ? Verdict::Proportional : Verdict::Mismatch;
    return out;
}

ComparisonReport compare_closed_form(const SweepResult& sw, const std::function<Complex(Complex)>& reference,
                                     double tolerance)
{
    std::vector<Complex> computed, ref;
    for (const auto& r : sw.samples) {
        computed.push_back(r.total);
        ref.push_back(reference(r.s));
    }
    return compare_values(computed, ref, tolerance);
}

} // namespace rcp
