#include "doctest.h"

#include "rcperiod/catalog.hpp"
#include "rcperiod/error.hpp"
#include "rcperiod/expression.hpp"
#include "rcperiod/griffiths.hpp"

using namespace rcp;

namespace {

MultiPoly poly(const char* src) { return Expr::parse(src).to_multipoly(5); }

void all_index_lists(int n, int max_len, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (!cur.empty())
        out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len)
        return;
    for (int i = cur.empty() ? 0 : cur.back() + 1; i < n; ++i) {
        cur.push_back(i);
        all_index_lists(n, max_len, cur, out);
        cur.pop_back();
    }
}

} // namespace

TEST_CASE("j2 star ranks")
{
    CHECK(j2star(4, 1, 2, 5) == 2);
    CHECK(j2star(2, 1, 4, 5) == 1);
    CHECK(j2star(0, 2, 3, 5) == 0);
    CHECK(j2star(0, 1, 4, 5) == 0);
    CHECK_THROWS_AS(j2star(1, 1, 2, 5), Error);
}

TEST_CASE("contraction signs")
{
    const std::vector<int> a{1, 2};
    auto r = contraction_sign(a, 3);
    CHECK(r.sign == 1);
    CHECK(r.complement == std::vector<int>{0, 3, 4});
    const std::vector<int> b{0, 1};
    r = contraction_sign(b, 3);
    CHECK(r.sign == 1);
    CHECK(r.complement == std::vector<int>{2, 3, 4});
    const std::vector<int> c{0};
    CHECK(contract_bruteforce(c, 1).sign == contraction_sign(c, 1).sign);
    const std::vector<int> d{0, 1, 2, 3};
    const auto full = contract_bruteforce(d, 3);
    CHECK(full.complement == std::vector<int>{4});
    CHECK(full.sign == contraction_sign(d, 3).sign);
}

TEST_CASE("closed-form contraction sign matches the exterior algebra")
{
    for (int m = 1; m <= 5; ++m) {
        std::vector<std::vector<int>> lists;
        std::vector<int> cur;
        all_index_lists(m + 2, 4, cur, lists);
        for (const auto& J : lists) {
            const auto closed = contraction_sign(J, m);
            const auto brute = contract_bruteforce(J, m);
            CHECK(closed.sign == brute.sign);
            CHECK(closed.complement == brute.complement);
        }
    }
}

TEST_CASE("residue cocycle pieces")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const CechCocycle c = residue_cocycle(poly("x1^3*x2^2"), X, 1);
    REQUIRE(c.pieces.size() == 10);
    for (const auto& piece : c.pieces) {
        CHECK(piece.J.size() == 2);
        CHECK(piece_weight(piece, X, 1) == 0);
        const MultiPoly den = piece_denominator(X, piece.J);
        CHECK(den.term_count() == 1);
        Exponent e(5, 0);
        e[static_cast<std::size_t>(piece.J[0])] = 4;
        e[static_cast<std::size_t>(piece.J[1])] = 4;
        CHECK(den.coeff(e) == Complex(25.0));
    }
    const CechCocycle zero = residue_cocycle(MultiPoly::constant(5, 1.0), X, 0);
    CHECK(zero.pieces.size() == 5);
    try {
        residue_cocycle(poly("x1^4"), X, 1);
        FAIL("expected a degree error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeError);
    }
}

TEST_CASE("gauss-manin step on a monomial")
{
    const MultiPoly P = MultiPoly::constant(5, 1.0);
    const auto step = gm_monomial_derivative(P, 1, {5, 0, 0, 0, 0});
    CHECK(step.k == 2);
    CHECK(step.P == poly("-x0^5"));
    try {
        gm_monomial_derivative(poly("x0"), 1, {5, 0, 0, 0, 0});
        FAIL("expected a degree error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeError);
    }
}

TEST_CASE("pair integrands")
{
    const Hypersurface X = fermat_hypersurface(3, 5);
    const MultiPoly P = poly("x1^3*x2^2");
    const CurveJet jet = paper_line_slice(1, SliceMode::Corrected)(0.1);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            const auto pi = pair_integrand(X, P, jet, a, b);
            const auto swapped = pair_integrand(X, P, jet, b, a);
            CHECK((pi.numerator - swapped.numerator).scale() <= 1e-14 * std::max(1.0, pi.numerator.scale()));
            CHECK(fermat_denominator_defect(X, jet, a, b) < 1e-12);
            const auto displayed = pair_integrand(X, P, jet, a, b, SignConvention::Displayed);
            CHECK(std::abs(displayed.sign) == 1);
            const auto reused = with_numerator(pi, P, jet);
            CHECK(reused.numerator == pi.numerator);
        }

    CurveJet still = jet;
    for (auto& y : still.y)
        y = BinaryForm::zero(still.degree);
    CHECK(pair_integrand(X, P, still, 0, 2).numerator.is_zero());

    const CurveJet mob = mobius_null_family(3)(0.2);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            const auto pi = pair_integrand(X, P, mob, a, b);
            CHECK(pi.numerator.scale() <= 1e-10 * std::max(1.0, pi.numerator_scale));
        }
}
