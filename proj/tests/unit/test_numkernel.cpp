#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "rcperiod/error.hpp"
#include "rcperiod/expression.hpp"
#include "rcperiod/residue.hpp"
#include "rcperiod/root5.hpp"
#include "rcperiod/roots.hpp"

using namespace rcp;
using namespace std::complex_literals;

namespace {

double uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

Complex random_complex(std::mt19937_64& g) { return {2.0 * uniform(g) - 1.0, 2.0 * uniform(g) - 1.0}; }

Errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::InputError;
}

} // namespace

TEST_CASE("unipoly arithmetic and taylor shift")
{
    const UniPoly p{1.0, -3.0, 2.0}; // 2t^2 - 3t + 1
    CHECK(p.degree() == 2);
    CHECK(std::abs(p(2.0) - 3.0) < 1e-15);
    const UniPoly q = p.taylor_shift(1.0);
    CHECK(std::abs(q(0.5) - p(1.5)) < 1e-15);
    CHECK((p * UniPoly{0.0, 1.0}).degree() == 3);
    CHECK((p - p).is_zero());
    CHECK(UniPoly::from_roots({1.0, 2.0}).coeffs() == std::vector<Complex>{2.0, -3.0, 1.0});
}

TEST_CASE("series division")
{
    // 1 / (1 - h) = 1 + h + h^2 + ...
    const auto s = series_divide({1.0}, {1.0, -1.0}, 5);
    for (const auto& c : s)
        CHECK(std::abs(c - 1.0) < 1e-15);
}

TEST_CASE("roots of t^2 + 1 and (t-2)^3")
{
    auto r = poly_roots(UniPoly{1.0, 0.0, 1.0});
    REQUIRE(r.size() == 2);
    for (const auto& site : r) {
        CHECK(site.multiplicity == 1);
        CHECK(std::abs(std::abs(site.root) - 1.0) < 1e-12);
        CHECK(std::abs(site.root.real()) < 1e-12);
    }
    r = poly_roots(UniPoly::from_roots({2.0, 2.0, 2.0}));
    REQUIRE(r.size() == 1);
    CHECK(r[0].multiplicity == 3);
    CHECK(std::abs(r[0].root - 2.0) < 1e-8);
}

TEST_CASE("roots of seeded random degree 8 polynomials")
{
    std::mt19937_64 g(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> c(9);
        for (auto& v : c)
            v = random_complex(g);
        c[8] = 1.0;
        const UniPoly p(c);
        const auto roots = poly_roots(p);
        int total = 0;
        UniPoly rebuilt = UniPoly::constant(1.0);
        for (const auto& site : roots) {
            total += site.multiplicity;
            CHECK(std::abs(p(site.root)) < 1e-9);
            for (int k = 0; k < site.multiplicity; ++k)
                rebuilt = rebuilt * UniPoly{-site.root, 1.0};
        }
        CHECK(total == 8);
        CHECK((rebuilt - p).scale() < 1e-7 * p.scale());
    }
}

TEST_CASE("vanishing order at a multiple root")
{
    const UniPoly p = UniPoly::from_roots({0.5, 0.5, 0.5, -1.0});
    CHECK(vanishing_order(p, 0.5) == 3);
    CHECK(vanishing_order(p, -1.0) == 1);
    CHECK(vanishing_order(p, 0.0) == 0);
}

TEST_CASE("analytic residues")
{
    const RationalFunction inv_t(UniPoly::constant(1.0), UniPoly{0.0, 1.0});
    CHECK(std::abs(residue_analytic(inv_t, 0.0, 1) - 1.0) < 1e-15);
    const RationalFunction inv_t2(UniPoly::constant(1.0), UniPoly{0.0, 0.0, 1.0});
    CHECK(std::abs(residue_analytic(inv_t2, 0.0, 2)) < 1e-15);
    const RationalFunction pf(UniPoly{2.0, 3.0}, UniPoly::from_roots({1.0, -2.0}));
    CHECK(std::abs(residue_analytic(pf, 1.0, 1) - 5.0 / 3.0) < 1e-14);
    CHECK(code_of([&] { residue_analytic(pf, 1.0, 2); }) == Errc::PoleMismatch);
}

TEST_CASE("quadrature residues")
{
    const RationalFunction inv_t(UniPoly::constant(1.0), UniPoly{0.0, 1.0});
    CHECK(std::abs(residue_quadrature(inv_t, 0.0, 0.5).value - 1.0) < 1e-12);
    const RationalFunction pf(UniPoly{2.0, 3.0}, UniPoly::from_roots({1.0, -2.0}));
    const std::vector<Complex> others{-2.0};
    CHECK(std::abs(residue_quadrature(pf, 1.0, 0.5, others).value - 5.0 / 3.0) < 1e-10);
    CHECK(code_of([&] { residue_quadrature(pf, 1.0, 2.0, others); }) == Errc::RadiusCollision);
    CHECK(quadrature_radius(1.0, others) == doctest::Approx(0.5));
    const std::vector<Complex> near{1.4};
    CHECK(quadrature_radius(1.0, near) == doctest::Approx(0.2));
}

TEST_CASE("analytic and quadrature backends agree on seeded rational functions")
{
    std::mt19937_64 g(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int npoles = 1 + static_cast<int>(g() % 4);
        std::vector<Complex> poles;
        while (static_cast<int>(poles.size()) < npoles) {
            const Complex p = 1.5 * random_complex(g);
            bool ok = true;
            for (const auto& q : poles)
                ok = ok && std::abs(p - q) > 1e-2;
            if (ok)
                poles.push_back(p);
        }
        std::vector<Complex> num(1 + g() % 6);
        for (auto& v : num)
            v = random_complex(g);
        const RationalFunction f(UniPoly(num), UniPoly::from_roots(poles, 1.0 + random_complex(g)));
        for (const auto& site : finite_poles(f)) {
            std::vector<Complex> others;
            for (const auto& q : poles)
                if (std::abs(q - *site.location) > 1e-9)
                    others.push_back(q);
            const auto quad = residue_quadrature(f, *site.location, quadrature_radius(*site.location, others), others);
            const double scale = std::max(std::abs(site.residue), quad.magnitude);
            CHECK(std::abs(site.residue - quad.value) <= 1e-8 * scale);
        }
        CHECK(residue_sum_check(f) < 1e-8 * std::max(1.0, f.num().scale()));
    }
}

TEST_CASE("residues at zeros of a binary form")
{
    const RationalFunction inv_t(UniPoly::constant(1.0), UniPoly{0.0, 1.0});
    CHECK(std::abs(residues_at_zeros(inv_t, BinaryForm(1, {0.0, 1.0})).sum - 1.0) < 1e-14);
    CHECK(std::abs(residues_at_zeros(inv_t, BinaryForm(0, {1.0})).sum) < 1e-15);
    const RationalFunction f(UniPoly::constant(1.0), UniPoly::from_roots({0.0, 1.0}));
    const auto z = residues_at_zeros(f, BinaryForm(2, {0.0, -1.0, 1.0}));
    CHECK(z.sites.size() == 2);
    CHECK(std::abs(z.sum) < 1e-14);
    const BinaryForm partner(1, {0.0, 1.0});
    CHECK(code_of([&] { residues_at_zeros(f, BinaryForm(2, {0.0, -1.0, 1.0}), &partner); }) ==
          Errc::BaseLocusCollision);
}

TEST_CASE("residue at infinity")
{
    const RationalFunction inv_t(UniPoly::constant(1.0), UniPoly{0.0, 1.0});
    CHECK(std::abs(residue_at_infinity(inv_t) + 1.0) < 1e-15);
    CHECK(residue_sum_check(inv_t) < 1e-15);
    const RationalFunction t(UniPoly{0.0, 1.0}, UniPoly::constant(1.0));
    CHECK(residue_sum_check(t) == 0.0);
}

TEST_CASE("binary forms")
{
    const BinaryForm f(2, {1.0, 2.0, 3.0}); // y^2 + 2xy + 3x^2
    CHECK(std::abs(f(1.0, 1.0) - 6.0) < 1e-15);
    CHECK(f.dehomogenize() == UniPoly{1.0, 2.0, 3.0});
    CHECK(BinaryForm(2, {1.0, 2.0, 0.0}).order_at_infinity() == 1);
    CHECK(f.d_dx() == BinaryForm(1, {2.0, 6.0}));
    CHECK(f.d_dy() == BinaryForm(1, {2.0, 2.0}));
    const MobiusMap swap{0.0, 1.0, 1.0, 0.0};
    CHECK(f.substitute(swap) == BinaryForm(2, {3.0, 2.0, 1.0}));
    const MobiusMap a{2.0, 1.0, 0.0, 1.0};
    const MobiusMap b{1.0, 0.0, 1.0, 1.0};
    const Complex t = 0.3 + 0.2i;
    CHECK(std::abs(a.compose(b)(t) - a(b(t))) < 1e-14);
    CHECK(BinaryForm::from_affine(UniPoly{1.0, 1.0}, 3).coeffs() == std::vector<Complex>{1.0, 1.0, 0.0, 0.0});
}

TEST_CASE("fifth roots and continuation")
{
    CHECK(std::abs(principal_root5(-1.0) - std::polar(1.0, std::numbers::pi / 5)) < 1e-15);
    CHECK(std::abs(principal_root5(Complex(-1.0, -0.0)) - std::polar(1.0, std::numbers::pi / 5)) < 1e-15);
    CHECK(std::abs(principal_root5(32.0) - 2.0) < 1e-14);
    auto arg = [](Complex s) { return -1.0 - s * s * s * s * s; };
    const Complex s = 0.3 + 0.1i;
    const Complex c = continue_root5(arg, s);
    CHECK(std::abs(std::pow(c, 5) - arg(s)) < 1e-13);
    CHECK(std::abs(c - std::polar(1.0, std::numbers::pi / 5)) < 0.1);
    auto vanishing = [](Complex s) { return s - 0.5; };
    CHECK(code_of([&] { continue_root5(vanishing, 1.0, 0.0); }) == Errc::BranchError);
}

TEST_CASE("expression parsing")
{
    const MultiPoly P = Expr::parse("x1^3*x2^2").to_multipoly(5);
    REQUIRE(P.term_count() == 1);
    CHECK(P.coeff({0, 3, 2, 0, 0}) == Complex(1.0));
    const MultiPoly F = Expr::parse("x0^5+x1^5+x2^5+x3^5+x4^5").to_multipoly(5);
    CHECK(F.term_count() == 5);
    CHECK(F.is_homogeneous());
    CHECK(F.total_degree() == 5);
    try {
        Expr::parse("x1^^2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
        CHECK(e.code() == Errc::ParseError);
    }
    CHECK_THROWS_AS(Expr::parse("x1 +"), ParseError);
    CHECK_THROWS_AS(Expr::parse("(x1"), ParseError);
}

TEST_CASE("expression evaluation and canonical round trip")
{
    Env env;
    env.s = 0.2;
    env.t = 2.0;
    env.zeta = 1i;
    const Expr e = Expr::parse("2*t^2 - zeta*s + 3i/(1+t)");
    CHECK(std::abs(e.eval(env) - (8.0 - 0.2i + 1i)) < 1e-14);
    const std::string canon = e.to_string();
    CHECK(Expr::parse(canon).to_string() == canon);
    const Expr r = Expr::parse("(-1-s^5)^(1/5)");
    CHECK(std::abs(r.eval(env) - principal_root5(-1.0 - std::pow(0.2, 5))) < 1e-14);
    const UniPoly u = Expr::parse("(t+s)^2").to_unipoly_in_t(env);
    CHECK((u - UniPoly{0.04, 0.4, 1.0}).scale() < 1e-15);
    CHECK(Expr::parse("x3*t").uses_symbol("t"));
    CHECK_FALSE(Expr::parse("x3").uses_symbol("s"));
}

TEST_CASE("multipoly arithmetic")
{
    const MultiPoly x0 = MultiPoly::variable(3, 0);
    const MultiPoly x1 = MultiPoly::variable(3, 1);
    const MultiPoly p = (x0 + x1).pow(2);
    CHECK(p.coeff({1, 1, 0}) == Complex(2.0));
    CHECK(p.partial(0) == 2.0 * (x0 + x1));
    const std::vector<Complex> pt{1.0, 2.0, 5.0};
    CHECK(std::abs(p(pt) - 9.0) < 1e-15);
    CHECK(monomials_of_degree(5, 5).size() == 126);
    CHECK(monomials_of_degree(5, 5).front() == Exponent{5, 0, 0, 0, 0});
    CHECK(monomial_string({0, 3, 2, 0, 0}) == "x1^3*x2^2");
    CHECK((p - p).is_zero());
}
