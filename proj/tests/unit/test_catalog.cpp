#include "doctest.h"

#include <numbers>
#include <random>
#include <set>

#include "rcperiod/catalog.hpp"
#include "rcperiod/checks.hpp"
#include "rcperiod/error.hpp"

using namespace rcp;
using namespace std::complex_literals;

TEST_CASE("fifty distinct line families lie on the quintic")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const auto fams = line_families();
    REQUIRE(fams.size() == 50);
    std::set<std::string> ids;
    for (const auto& d : fams) {
        ids.insert(d.id());
        const CurveFamily fam = line_family(d);
        const CurveJet jet = fam(0.2e0 * std::polar(1.0, 0.4));
        CHECK(containment_residual(X, jet) < 1e-10);
        CHECK(tangency_residual(X, jet) < 1e-10);
    }
    CHECK(ids.size() == 50);
    CHECK(fams.front().id() == "fermat-line/pair=0,1/zeta=0/corrected");
    CHECK(resolve_family("fermat-line/pair=0,1/zeta=1/corrected")(0.1).x ==
          line_family({0, 1, 1})(0.1).x);
}

TEST_CASE("abc path stays on a^5 + b^5 + c^5 = 0")
{
    for (const Complex s : standard_samples()) {
        const AbcPoint p = abc_path(s);
        CHECK(std::abs(std::pow(p.a, 5) + std::pow(p.b, 5) + std::pow(p.c, 5)) < 1e-12);
        const double h = 1e-6;
        const AbcPoint fwd = abc_path(s + h), bwd = abc_path(s - h);
        CHECK(std::abs((fwd.c - bwd.c) / (2 * h) - abc_path_derivative(s).c) < 1e-6);
    }
    CHECK(std::abs(abc_path(0.0).c - std::polar(1.0, std::numbers::pi / 5)) < 1e-15);
}

TEST_CASE("closed-form reference")
{
    const Complex g0 = closed_form_g(0.0, {1.0, 0.0});
    CHECK(std::abs(g0 - (std::polar(1.0, std::numbers::pi / 5) + std::polar(1.0, -4 * std::numbers::pi / 5))) < 1e-14);
    const Complex a = closed_form_g(0.1, {zeta5(1), 0.0});
    const Complex b = closed_form_g(0.1, {zeta5(2), 0.0});
    CHECK(std::abs(a - b) > 1e-3 * std::abs(a));
}

TEST_CASE("conic relations")
{
    const auto eqs = mustata_conic_equations();
    REQUIRE(eqs.size() == 5);
    for (const auto& e : eqs)
        CHECK(e.nvars() == 8);
    std::mt19937_64 g(11);
    std::vector<Complex> pt(8);
    for (auto& v : pt)
        v = Complex(static_cast<double>(g() >> 11) * 0x1.0p-53, static_cast<double>(g() >> 11) * 0x1.0p-53);
    double worst = 0.0;
    for (const auto& e : eqs)
        worst = std::max(worst, std::abs(e(pt)));
    CHECK(worst > 1e-6);
    // a = 0, b = 1: a^10 + b^10 - 4 b^5 c^5 = 0 at c^5 = 1/4
    std::vector<Complex> abc(8, 0.0);
    abc[6] = 1.0;
    abc[7] = std::pow(0.25, 0.2);
    CHECK(std::abs(eqs[4](abc)) < 1e-14);
}

TEST_CASE("catalog listing and lookups")
{
    const auto entries = catalog_entries();
    int lines = 0, hyper = 0, null = 0;
    for (const auto& e : entries) {
        lines += e.id.starts_with("fermat-line/") ? 1 : 0;
        hyper += e.kind == "hypersurface" ? 1 : 0;
        null += e.id.starts_with("null/") ? 1 : 0;
    }
    CHECK(lines == 50);
    CHECK(hyper >= 2);
    CHECK(null >= 2);
    CHECK(resolve_hypersurface("fermat-quintic").degree() == 5);
    CHECK(resolve_hypersurface("shioda-quintic").nvars() == 5);
    CHECK(resolve_hypersurface("fermat/m=1/d=3").nvars() == 3);
    CHECK_THROWS_AS(resolve_hypersurface("cubic"), Error);
    CHECK_THROWS_AS(resolve_family("fermat-line/pair=3,1/zeta=1/corrected"), Error);
    CHECK_NOTHROW(resolve_family("null/mobius/seed=3"));
    CHECK_NOTHROW(resolve_family("null/zero-jet"));
}

TEST_CASE("seeded mobius paths are reproducible")
{
    const MobiusPath a = seeded_mobius_path(42, false);
    const MobiusPath b = seeded_mobius_path(42, false);
    CHECK(a.m1.a == b.m1.a);
    CHECK(a.m2.d == b.m2.d);
    const MobiusPath aff = seeded_mobius_path(42, true);
    CHECK(aff.m1.c == Complex{});
    CHECK(aff.m2.c == Complex{});
    CHECK(mobius_null_family(42)(0.1).x == mobius_null_family(42)(0.1).x);
}
