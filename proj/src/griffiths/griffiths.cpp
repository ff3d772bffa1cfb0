#include "rcperiod/griffiths.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "rcperiod/error.hpp"

namespace rcp {

namespace {

void check_index_list(std::span<const int> J, int m)
{
    if (J.empty())
        throw Error(Errc::IndexError, "empty index list");
    for (std::size_t i = 0; i < J.size(); ++i) {
        if (J[i] < 0 || J[i] > m + 1)
            throw Error(Errc::IndexError, "index " + std::to_string(J[i]) + " outside 0.." + std::to_string(m + 1));
        if (i > 0 && J[i] <= J[i - 1])
            throw Error(Errc::IndexError, "index list must be strictly increasing");
    }
}

std::vector<int> complement_of(std::span<const int> J, int n)
{
    std::vector<int> out;
    for (int k = 0; k < n; ++k)
        if (std::find(J.begin(), J.end(), k) == J.end())
            out.push_back(k);
    return out;
}

} // namespace

int j2star(int j2, int j0, int j1, int n_coords)
{
    if (j0 == j1 || j2 == j0 || j2 == j1)
        throw Error(Errc::IndexError, "j2star needs three distinct indices");
    for (int j : {j0, j1, j2})
        if (j < 0 || j >= n_coords)
            throw Error(Errc::IndexError, "index out of range in j2star");
    int rank = 0;
    for (int k = 0; k < j2; ++k)
        if (k != j0 && k != j1)
            ++rank;
    return rank;
}

ContractionResult contraction_sign(std::span<const int> J, int m)
{
    check_index_list(J, m);
    const int q = static_cast<int>(J.size()) - 1;
    if (q == m + 1)
        return {0, {}, {J.begin(), J.end()}};
    const int exponent = std::accumulate(J.begin(), J.end(), 0) + (q + 2) * (q + 1) / 2;
    return {exponent % 2 == 0 ? 1 : -1, complement_of(J, m + 2), {J.begin(), J.end()}};
}

ContractionResult contract_bruteforce(std::span<const int> J, int m)
{
    check_index_list(J, m);
    const int n = m + 2;
    // form: (coefficient variable, sorted wedge indices) -> integer coefficient
    using Key = std::pair<int, std::vector<int>>;
    std::map<Key, int> form;
    for (int i = 0; i < n; ++i) {
        std::vector<int> w;
        for (int k = 0; k < n; ++k)
            if (k != i)
                w.push_back(k);
        form[{i, w}] += (i % 2 == 0) ? 1 : -1;
    }
    for (int j : J) {
        std::map<Key, int> next;
        for (const auto& [key, c] : form) {
            const auto& w = key.second;
            auto it = std::find(w.begin(), w.end(), j);
            if (it == w.end())
                continue;
            const auto pos = it - w.begin();
            std::vector<int> rest(w.begin(), w.end());
            rest.erase(rest.begin() + pos);
            next[{key.first, rest}] += (pos % 2 == 0) ? c : -c;
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        form = std::move(next);
    }

    ContractionResult out;
    out.J.assign(J.begin(), J.end());
    out.complement = complement_of(J, n);
    // compare with sum_l (-1)^l x_{k_l} (complement minus k_l)
    int sign = 0;
    for (std::size_t l = 0; l < out.complement.size(); ++l) {
        const int k = out.complement[l];
        std::vector<int> w;
        for (int other : out.complement)
            if (other != k)
                w.push_back(other);
        auto it = form.find({k, w});
        if (it == form.end() || std::abs(it->second) != 1)
            throw Error(Errc::IndexError, "contraction did not reduce to the canonical form");
        const int canonical = (l % 2 == 0) ? 1 : -1;
        const int ratio = it->second * canonical;
        if (sign != 0 && ratio != sign)
            throw Error(Errc::IndexError, "contraction is not a multiple of the canonical form");
        sign = ratio;
    }
    if (form.size() != out.complement.size())
        throw Error(Errc::IndexError, "contraction left stray terms");
    out.sign = sign;
    return out;
}

MultiPoly piece_denominator(const Hypersurface& X, std::span<const int> J)
{
    MultiPoly d = MultiPoly::constant(X.nvars(), 1.0);
    for (int j : J)
        d = d * X.partial(j);
    return d;
}

int piece_weight(const CocyclePiece& piece, const Hypersurface& X, int q)
{
    const int num = piece.numerator.is_zero() ? 0 : piece.numerator.total_degree();
    return num + (X.m() + 1 - q) - static_cast<int>(piece.J.size()) * (X.degree() - 1);
}

CechCocycle residue_cocycle(const MultiPoly& P, const Hypersurface& X, int q)
{
    const int m = X.m();
    const int d = X.degree();
    if (q < 0 || q > m)
        throw Error(Errc::DegreeError, "q must lie in 0.." + std::to_string(m));
    const int expected = d * (q + 1) - m - 2;
    if (P.nvars() != X.nvars())
        throw Error(Errc::DimensionMismatch, "P and F have different numbers of variables");
    if (P.is_zero() || !P.is_homogeneous() || P.total_degree() != expected)
        throw Error(Errc::DegreeError, "P must be homogeneous of degree " + std::to_string(expected));

    double factorial = 1.0;
    for (int k = 2; k <= q; ++k)
        factorial *= k;
    const double global = ((m % 2 == 0) ? 1.0 : -1.0) / factorial;

    CechCocycle out;
    out.q = q;
    out.m = m;
    std::vector<int> J(static_cast<std::size_t>(q + 1));
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == q + 1) {
            const auto c = contraction_sign(J, m);
            out.pieces.push_back({J, Complex(global * c.sign), P, c.complement});
            return;
        }
        for (int k = start; k < m + 2; ++k) {
            J[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, k + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

GaussManinStep gm_monomial_derivative(const MultiPoly& P, int k, const Exponent& beta)
{
    const int N = P.nvars();
    if (static_cast<int>(beta.size()) != N)
        throw Error(Errc::DimensionMismatch, "beta has the wrong length");
    const int d = std::accumulate(beta.begin(), beta.end(), 0);
    if (k < 1)
        throw Error(Errc::DegreeError, "pole order k must be positive");
    const int expected = k * d - N;
    if (P.is_zero() || !P.is_homogeneous() || P.total_degree() != expected)
        throw Error(Errc::DegreeError, "deg P must equal k*d - (2n+3) = " + std::to_string(expected));
    return {MultiPoly::monomial(beta, Complex(-static_cast<double>(k))) * P, k + 1};
}

namespace {

struct WedgeData {
    UniPoly wedge;
    double scale = 0.0;
};

WedgeData wedge_sum(const CurveJet& jet, int j0, int j1)
{
    const int n = jet.ncoords();
    std::vector<UniPoly> x, dx, y;
    for (int i = 0; i < n; ++i) {
        x.push_back(jet.x_chart(i));
        dx.push_back(jet.dx_chart(i));
        y.push_back(jet.y_chart(i));
    }
    WedgeData out;
    for (int j2 = 0; j2 < n; ++j2) {
        if (j2 == j0 || j2 == j1)
            continue;
        std::vector<int> rest;
        for (int k = 0; k < n; ++k)
            if (k != j0 && k != j1 && k != j2)
                rest.push_back(k);
        const int j3 = rest[0], j4 = rest[1];
        const auto s3 = static_cast<std::size_t>(j3), s4 = static_cast<std::size_t>(j4);
        const auto s2 = static_cast<std::size_t>(j2);
        UniPoly term = x[s2] * (dx[s3] * y[s4] - dx[s4] * y[s3]);
        if (j2star(j2, j0, j1, n) % 2 == 1)
            term = -term;
        out.wedge += term;
        out.scale += x[s2].scale() * (dx[s3].scale() * y[s4].scale() + dx[s4].scale() * y[s3].scale());
    }
    return out;
}

} // namespace

PairIntegrand pair_integrand(const Hypersurface& X, const MultiPoly& P, const CurveJet& jet, int j0, int j1,
                             SignConvention convention)
{
    if (X.m() != 3)
        throw Error(Errc::UnsupportedShape, "pair integrands are implemented for m = 3 (P^4) only");
    if (jet.ncoords() != X.nvars() || P.nvars() != X.nvars())
        throw Error(Errc::DimensionMismatch, "jet, P and X disagree on the number of coordinates");
    jet.validate();
    if (j0 == j1 || j0 < 0 || j1 < 0 || j0 >= X.nvars() || j1 >= X.nvars())
        throw Error(Errc::IndexError, "pair indices must be distinct coordinates");

    PairIntegrand out;
    out.j0 = j0;
    out.j1 = j1;
    if (convention == SignConvention::Cocycle) {
        const int J[2] = {std::min(j0, j1), std::max(j0, j1)};
        out.sign = contraction_sign(J, X.m()).sign;
    }
    out.A = X.partial(j0).compose(jet.x);
    out.B = X.partial(j1).compose(jet.x);
    out.degenerate = out.A.is_zero() || out.B.is_zero();
    const WedgeData w = wedge_sum(jet, j0, j1);
    out.wedge = w.wedge;
    out.wedge_scale = w.scale;
    if (out.degenerate)
        return out;
    return with_numerator(out, P, jet);
}

PairIntegrand with_numerator(const PairIntegrand& prepared, const MultiPoly& P, const CurveJet& jet)
{
    PairIntegrand out = prepared;
    if (out.degenerate)
        return out;
    std::vector<UniPoly> x;
    for (int i = 0; i < jet.ncoords(); ++i)
        x.push_back(jet.x_chart(i));
    const UniPoly Px = P.compose(x);
    out.numerator = Px * out.wedge * Complex(static_cast<double>(out.sign));
    // nominal size: |P(x)| terms times the uncancelled wedge magnitude
    double pscale = 0.0;
    {
        std::vector<UniPoly> ax;
        for (const auto& xi : x) {
            std::vector<Complex> c;
            for (const auto& v : xi.coeffs())
                c.emplace_back(std::abs(v));
            ax.emplace_back(std::move(c));
        }
        MultiPoly absP(P.nvars());
        for (const auto& [e, c] : P.terms())
            absP.add_term(e, std::abs(c));
        pscale = absP.compose(ax).scale();
    }
    out.numerator_scale = pscale * prepared.wedge_scale;
    out.rf = RationalFunction(out.numerator, (out.A * out.B).dehomogenize());
    return out;
}

double fermat_denominator_defect(const Hypersurface& X, const CurveJet& jet, int j0, int j1)
{
    const int d = X.degree();
    const BinaryForm AB = X.partial(j0).compose(jet.x) * X.partial(j1).compose(jet.x);
    const BinaryForm ref = jet.x.at(static_cast<std::size_t>(j0)).pow(d - 1) * jet.x.at(static_cast<std::size_t>(j1)).pow(d - 1)
        * Complex(static_cast<double>(d * d));
    const double norm = std::max(ref.scale(), 1e-300);
    return (AB - ref).scale() / norm;
}

} // namespace rcp
