#include "rcperiod/checks.hpp"

#include <algorithm>
#include <cmath>

#include "rcperiod/error.hpp"

namespace rcp {

namespace {

void require_dims(const Hypersurface& X, const CurveJet& jet)
{
    if (jet.ncoords() != X.nvars())
        throw Error(Errc::DimensionMismatch, "curve has " + std::to_string(jet.ncoords()) + " coordinates, X needs "
                                                 + std::to_string(X.nvars()));
    jet.validate();
}

double form_scale(const std::vector<BinaryForm>& forms)
{
    double m = 0.0;
    for (const auto& f : forms)
        m = std::max(m, f.scale());
    return m;
}

} // namespace

double containment_residual(const Hypersurface& X, const CurveJet& jet)
{
    require_dims(X, jet);
    const BinaryForm composed = X.F().compose(jet.x);
    const double norm = X.F().scale() * std::pow(form_scale(jet.x), X.degree());
    return norm == 0.0 ? 0.0 : composed.scale() / norm;
}

double tangency_residual(const Hypersurface& X, const CurveJet& jet)
{
    require_dims(X, jet);
    const double ys = form_scale(jet.y);
    if (ys == 0.0)
        return 0.0;
    BinaryForm acc = BinaryForm::zero(jet.degree * X.degree());
    for (int i = 0; i < X.nvars(); ++i)
        acc += jet.y[static_cast<std::size_t>(i)] * X.partial(i).compose(jet.x);
    const double norm = X.F().scale() * std::pow(form_scale(jet.x), X.degree() - 1) * ys;
    return acc.scale() / norm;
}

SpotCheckReport smooth_spot_check(const Hypersurface& X, const std::vector<std::vector<Complex>>& points, double tol)
{
    SpotCheckReport report;
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != X.nvars())
            throw Error(Errc::DimensionMismatch, "spot-check point has the wrong number of coordinates");
        double pn = 0.0;
        for (const auto& c : p)
            pn = std::max(pn, std::abs(c));
        SpotCheck sc;
        sc.point = p;
        if (pn > 0.0) {
            double g = 0.0;
            for (const auto& Fi : X.partials())
                g = std::max(g, std::abs(Fi(p)));
            sc.gradient = g / (X.F().scale() * std::pow(pn, X.degree() - 1));
            sc.on_surface = std::abs(X.F()(p)) / (X.F().scale() * std::pow(pn, X.degree()));
        }
        sc.smooth = sc.gradient > tol;
        if (!sc.smooth)
            ++report.failures;
        report.points.push_back(std::move(sc));
    }
    return report;
}

} // namespace rcp
