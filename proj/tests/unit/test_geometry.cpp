#include "doctest.h"

#include "rcperiod/catalog.hpp"
#include "rcperiod/checks.hpp"
#include "rcperiod/curve.hpp"
#include "rcperiod/error.hpp"
#include "rcperiod/expression.hpp"

using namespace rcp;
using namespace std::complex_literals;

namespace {

CurveJet corrected_jet(Complex s) { return paper_line_slice(1, SliceMode::Corrected)(s); }

} // namespace

TEST_CASE("hypersurface partials and euler relation")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    CHECK(X.m() == 3);
    CHECK(X.ambient_dim() == 4);
    CHECK(X.degree() == 5);
    Exponent e{4, 0, 0, 0, 0};
    CHECK(X.partial(0).coeff(e) == Complex(5.0));
    CHECK(X.euler_defect() < 1e-12);
    CHECK(shioda_quintic().euler_defect() < 1e-12);
    const Hypersurface cubic = fermat_hypersurface(1, 3);
    CHECK(cubic.ambient_dim() == 2);
    CHECK(cubic.degree() == 3);
    CHECK_THROWS_AS(Hypersurface(Expr::parse("x0^2+x1").to_multipoly(2)), Error);
}

TEST_CASE("containment of the corrected line slice")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    for (const Complex s : standard_samples()) {
        const CurveJet jet = corrected_jet(s);
        CHECK(containment_residual(X, jet) < 1e-10);
        CHECK(tangency_residual(X, jet) < 1e-10);
    }
    CHECK(containment_residual(X, paper_line_slice(1, SliceMode::PaperLiteral)(0.1)) > 0.1);
}

TEST_CASE("broken curves fail containment")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    CurveJet jet = corrected_jet(0.1);
    jet.x[2] += 0.01 * jet.x[0];
    CHECK(containment_residual(X, jet) >= 1e-3);

    MultiPoly F = Expr::parse("x1^5 + x0*x2^4").to_multipoly(3);
    const Hypersurface Y(F);
    CurveJet point;
    point.degree = 0;
    point.x = {BinaryForm(0, {1.0}), BinaryForm(0, {0.0}), BinaryForm(0, {0.0})};
    point.y = point.x;
    CHECK(containment_residual(Y, point) == 0.0);
}

TEST_CASE("tangency in special directions")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    CurveJet jet = corrected_jet(0.2);
    for (auto& y : jet.y)
        y = BinaryForm::zero(jet.degree);
    CHECK(tangency_residual(X, jet) == 0.0);
    jet.y = jet.x;
    CHECK(tangency_residual(X, jet) < 1e-10);
    jet.x[2] += 0.01 * jet.x[0];
    jet.y = jet.x;
    CHECK(tangency_residual(X, jet) > 1e-4);
}

TEST_CASE("jet validation")
{
    CurveJet jet = corrected_jet(0.1);
    CHECK_NOTHROW(jet.validate());
    jet.y.pop_back();
    CHECK_THROWS_AS(jet.validate(), Error);
    CurveJet zero = corrected_jet(0.1);
    for (auto& x : zero.x)
        x = BinaryForm::zero(zero.degree);
    CHECK_THROWS_AS(zero.validate(), Error);
}

TEST_CASE("mobius deformations")
{
    const CurveJet base = corrected_jet(0.1);
    const CurveFamily still = mobius_deformation(base, MobiusPath{});
    for (const auto& y : still(0.3).y)
        CHECK(y.is_zero());

    MobiusPath translate;
    translate.m1 = {0.0, 1.0, 0.0, 0.0};
    const CurveJet moved = mobius_deformation(base, translate)(0.0);
    for (int i = 0; i < moved.ncoords(); ++i)
        CHECK((moved.y_chart(i) - moved.dx_chart(i)).scale() < 1e-14);

    MobiusPath scale;
    scale.m1 = {1.0, 0.0, 0.0, 0.0};
    const CurveJet scaled = mobius_deformation(base, scale)(0.2);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            const UniPoly w = scaled.dx_chart(a) * scaled.y_chart(b) - scaled.dx_chart(b) * scaled.y_chart(a);
            CHECK(w.scale() < 1e-14);
        }
}

TEST_CASE("reparametrization")
{
    const CurveFamily fam = paper_line_slice(2, SliceMode::Corrected);
    const CurveJet a = fam(0.1);
    const CurveJet b = mobius_reparam(fam, MobiusMap::identity())(0.1);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    const CurveJet r = reparam_jet(a, MobiusMap{0.0, 1.0, 1.0, 0.0});
    for (int i = 0; i < a.ncoords(); ++i) {
        auto c = a.x[static_cast<std::size_t>(i)].coeffs();
        std::reverse(c.begin(), c.end());
        CHECK(r.x[static_cast<std::size_t>(i)].coeffs() == c);
    }
}

TEST_CASE("finite difference jets match analytic jets")
{
    const CurveFamily fam = paper_line_slice(1, SliceMode::Corrected);
    const CurveFamily fd = finite_difference_family("fd", [&](Complex s) { return fam(s).x; });
    const CurveJet a = fam(0.15 + 0.05i);
    const CurveJet b = fd(0.15 + 0.05i);
    for (int i = 0; i < a.ncoords(); ++i)
        CHECK((a.y[static_cast<std::size_t>(i)] - b.y[static_cast<std::size_t>(i)]).scale() < 1e-8);
}

TEST_CASE("expression families")
{
    const Complex z = zeta5(1);
    std::vector<Expr> coords{Expr::parse("t"), Expr::parse("-zeta*t"), Expr::parse("1"), Expr::parse("s"),
                             Expr::parse("(-1-s^5)^(1/5)")};
    const CurveFamily fam = expression_family("expr", coords, 1, z);
    const CurveJet a = fam(0.1);
    const CurveJet b = paper_line_slice(1, SliceMode::Corrected)(0.1);
    for (int i = 0; i < 5; ++i) {
        CHECK((a.x[static_cast<std::size_t>(i)] - b.x[static_cast<std::size_t>(i)]).scale() < 1e-14);
        CHECK((a.y[static_cast<std::size_t>(i)] - b.y[static_cast<std::size_t>(i)]).scale() < 1e-8);
    }
}

TEST_CASE("smoothness spot checks")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const auto rep = smooth_spot_check(X, {{1.0, -1.0, 0.0, 0.0, 0.0}});
    CHECK(rep.all_smooth());
    CHECK(rep.points[0].gradient > 0.1);

    const Hypersurface cone(Expr::parse("x0*x1^4 + x1^5 + x2^5").to_multipoly(3));
    const auto vertex = smooth_spot_check(cone, {{1.0, 0.0, 0.0}});
    CHECK_FALSE(vertex.all_smooth());

    const CurveFamily fam = paper_line_slice(1, SliceMode::Corrected);
    std::vector<std::vector<Complex>> pts;
    const CurveJet jet = fam(0.1);
    for (int k = 0; k < 20; ++k) {
        const Complex t = std::polar(0.5 + 0.1 * k, 0.7 * k);
        std::vector<Complex> p;
        for (const auto& x : jet.x)
            p.push_back(x(t, 1.0));
        pts.push_back(p);
    }
    const auto line = smooth_spot_check(X, pts);
    CHECK(line.all_smooth());
    for (const auto& p : line.points)
        CHECK(p.on_surface < 1e-10);
}
