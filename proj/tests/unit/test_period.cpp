#include "doctest.h"

#include <cmath>
#include <fstream>

#include "json.hpp"

#include "rcperiod/catalog.hpp"
#include "rcperiod/error.hpp"
#include "rcperiod/expression.hpp"
#include "rcperiod/period.hpp"

using namespace rcp;
using namespace std::complex_literals;

namespace {

MultiPoly poly(const char* src) { return Expr::parse(src).to_multipoly(5); }

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

std::vector<Complex> eight_samples()
{
    std::vector<Complex> out;
    for (int k = 0; k < 8; ++k)
        out.push_back(0.3 * (k + 1) / 8.0 * std::polar(1.0, std::numbers::pi * k / 4));
    return out;
}

} // namespace

TEST_CASE("worked example matches the frozen oracle value")
{
    std::ifstream in(std::string(RCPERIOD_FIXTURE_DIR) + "/period_corrected_s0.1.json");
    REQUIRE(in.good());
    const auto j = nlohmann::json::parse(in);
    const auto& tot = j.at("total");
    const Complex expected(tot.at(0).get<double>(), tot.at(1).get<double>());

    const auto rep = period_at(fermat_hypersurface(3, 5), poly("x1^3*x2^2"),
                               paper_line_slice(1, SliceMode::Corrected), 0.1);
    CHECK(std::abs(rep.total - expected) < 1e-8 * std::max(1.0, std::abs(expected)));
    CHECK(rep.diagnostics.backend_max_disagreement < 1e-8);
    CHECK(rep.pairs.size() == 10);
    CHECK(rep.diagnostics.collisions > 0);
    CHECK_FALSE(rep.vanishes());
}

TEST_CASE("null families")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const MultiPoly P = poly("x1^3*x2^2");
    const auto z = period_at(X, P, zero_jet_family(), 0.1);
    CHECK(z.total == Complex{});
    for (std::uint64_t seed : {1u, 2u, 5u}) {
        const auto sw = sweep(X, P, mobius_null_family(seed), eight_samples());
        CHECK(sw.vanishes_identically);
        for (const auto& r : sw.samples)
            CHECK(std::abs(r.total) < 1e-9);
    }
}

TEST_CASE("collision policy error")
{
    PeriodOptions opts;
    opts.collisions = CollisionPolicy::Error;
    CHECK(code_of([&] {
              period_at(fermat_hypersurface(3, 5), poly("x1^3*x2^2"), paper_line_slice(1, SliceMode::Corrected),
                        0.1, opts);
          }) == Errc::BaseLocusCollision);
}

TEST_CASE("degree checks and empty sweeps")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const auto fam = paper_line_slice(1, SliceMode::Corrected);
    CHECK(code_of([&] { period_at(X, poly("x1^4"), fam, 0.1); }) == Errc::DegreeError);
    CHECK(code_of([&] { sweep(X, poly("x1^5"), fam, {}); }) == Errc::InputError);
    CHECK(code_of([&] { monomial_scan(X, fam, {0.1}, 4); }) == Errc::DegreeError);
}

TEST_CASE("corrected slice does not vanish identically")
{
    const auto sw = sweep(fermat_hypersurface(3, 5), poly("x1^3*x2^2"), paper_line_slice(1, SliceMode::Corrected),
                          eight_samples());
    CHECK_FALSE(sw.vanishes_identically);
    for (const auto& r : sw.samples) {
        CHECK(r.diagnostics.backend_max_disagreement < 1e-8);
        CHECK(r.diagnostics.dual_max < 1e-8);
    }
}

TEST_CASE("reparametrization invariance and linearity")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const auto fam = paper_line_slice(1, SliceMode::Corrected);
    const MultiPoly P = poly("x1^3*x2^2");
    const MultiPoly Q = poly("x0*x1*x2*x3*x4");
    const MobiusMap A{2.0, 1.0, 1.0, 3.0};
    const auto moved = mobius_reparam(fam, A);
    for (const Complex s : {Complex(0.1), 0.2i, 0.15 + 0.1i}) {
        const Complex a = period_at(X, P, fam, s).total;
        const Complex b = period_at(X, P, moved, s).total;
        CHECK(std::abs(a - b) < 1e-8 * std::max(1.0, std::abs(a)));
        const Complex lhs = period_at(X, 2.0 * P + (1.0 - 1i) * Q, fam, s).total;
        const Complex rhs = 2.0 * a + (1.0 - 1i) * period_at(X, Q, fam, s).total;
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("closed-form comparison")
{
    std::vector<Complex> ref, computed;
    for (const Complex s : eight_samples()) {
        ref.push_back(closed_form_g(s, {zeta5(1), 0.0}));
        computed.push_back((2.0 - 3i) * ref.back());
    }
    auto c = compare_values(computed, ref);
    CHECK(c.verdict == Verdict::Proportional);
    CHECK(std::abs(c.constant - (2.0 - 3i)) < 1e-12);
    CHECK(c.max_rel_deviation < 1e-12);
    computed[3] *= 1.01;
    c = compare_values(computed, ref);
    CHECK(c.verdict == Verdict::Mismatch);
    CHECK(std::abs(c.constant - (2.0 - 3i)) < 1e-12);
    CHECK(std::string(verdict_name(Verdict::Mismatch)) == "MISMATCH");
}

TEST_CASE("geometric median is robust to one outlier")
{
    const auto m = geometric_median({1.0, 1.0, 1.0, 1.0, 50.0 + 3i});
    CHECK(std::abs(m - 1.0) < 1e-9);
}

TEST_CASE("monomial scans")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const std::vector<Complex> samples{0.1, 0.2i};
    const auto mob = monomial_scan(X, mobius_null_family(4), samples, 5);
    REQUIRE(mob.rows.size() == 126);
    for (const auto& row : mob.rows)
        CHECK(row.vanishes);
    const auto cor = monomial_scan(X, paper_line_slice(1, SliceMode::Corrected), samples, 5, {}, 3);
    REQUIRE(cor.rows.size() == 126);
    CHECK(cor.rows.front().monomial == Exponent{5, 0, 0, 0, 0});
    int live = 0;
    for (const auto& row : cor.rows)
        live += row.vanishes ? 0 : 1;
    CHECK(live > 0);
    const auto single = monomial_scan(X, paper_line_slice(1, SliceMode::Corrected), samples, 5, {}, 1);
    for (std::size_t i = 0; i < cor.rows.size(); ++i)
        CHECK(cor.rows[i].values == single.rows[i].values);
}
