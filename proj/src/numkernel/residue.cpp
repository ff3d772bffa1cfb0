#include "rcperiod/residue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rcperiod/error.hpp"

namespace rcp {

RationalFunction::RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw Error(Errc::InputError, "rational function with zero denominator");
}

namespace {

// divide p by (t - r)^k by synthetic division, discarding the remainder
UniPoly deflate(const UniPoly& p, Complex r, int k)
{
    std::vector<Complex> c = p.coeffs();
    for (int i = 0; i < k && c.size() > 1; ++i) {
        std::vector<Complex> q(c.size() - 1);
        Complex acc{};
        for (std::size_t j = c.size() - 1; j >= 1; --j) {
            acc = acc * r + c[j];
            q[j - 1] = acc;
        }
        c = std::move(q);
    }
    return UniPoly(std::move(c));
}

} // namespace

RationalFunction RationalFunction::reduced(const RootOptions& opts) const
{
    if (num_.is_zero())
        return RationalFunction(UniPoly{}, UniPoly::constant(1.0));
    UniPoly n = num_;
    UniPoly d = den_;
    for (const auto& site : poly_roots(den_, opts)) {
        const int common = std::min(site.multiplicity, vanishing_order(n, site.root, opts.multiplicity_tol));
        if (common > 0) {
            n = deflate(n, site.root, common);
            d = deflate(d, site.root, common);
        }
    }
    return RationalFunction(std::move(n), std::move(d));
}

Complex residue_analytic(const RationalFunction& f, Complex t0, int den_order)
{
    if (den_order < 1)
        throw Error(Errc::PoleMismatch, "declared pole order must be positive");
    const int local = vanishing_order(f.den(), t0);
    if (local != den_order)
        throw Error(Errc::PoleMismatch, "denominator vanishes to order " + std::to_string(local) + ", declared "
                                            + std::to_string(den_order));
    return residue_laurent(f, t0, den_order);
}

Complex residue_laurent(const RationalFunction& f, Complex t0, int den_order)
{
    if (f.num().is_zero())
        return {};
    const UniPoly num = f.num().taylor_shift(t0);
    const UniPoly den = f.den().taylor_shift(t0);
    if (den_order > den.degree())
        throw Error(Errc::PoleMismatch, "pole order exceeds the denominator degree");
    // den(t0 + h) = L(h) + h^k H(h) with L = b_0 + ... + b_{k-1} h^{k-1} small:
    // the k roots near t0 form one cluster, and the sum of their residues is
    //   sum_m [h^{k(m+1)-1}] num (-L)^m / H^{m+1}
    const int k = den_order;
    const std::vector<Complex> H(den.coeffs().begin() + k, den.coeffs().end());
    std::vector<Complex> negL(den.coeffs().begin(), den.coeffs().begin() + k);
    bool exact = true;
    for (auto& c : negL) {
        exact = exact && c == Complex{};
        c = -c;
    }
    if (exact)
        return series_divide(num.coeffs(), H, k).back();

    constexpr int max_terms = 12;
    const std::size_t n = static_cast<std::size_t>(k) * (max_terms + 1);
    std::vector<Complex> S = series_divide(num.coeffs(), H, static_cast<int>(n));
    Complex acc = S[static_cast<std::size_t>(k - 1)];
    for (int m = 1; m <= max_terms; ++m) {
        std::vector<Complex> prod(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < negL.size() && i + j < n; ++j)
                prod[i + j] += S[i] * negL[j];
        S = series_divide(prod, H, static_cast<int>(n));
        const Complex term = S[static_cast<std::size_t>(k * (m + 1) - 1)];
        acc += term;
        if (std::abs(term) <= 1e-18 * std::abs(acc))
            break;
    }
    return acc;
}

int order_at_infinity(const RationalFunction& f)
{
    if (f.num().is_zero())
        return 0;
    return std::max(0, f.num().degree() - f.den().degree() + 2);
}

Complex residue_at_infinity(const RationalFunction& f)
{
    const int k = order_at_infinity(f);
    if (k == 0)
        return {};
    // f(1/u) (-1/u^2) = -rev(num)(u) / (u^k rev(den)(u))
    const UniPoly rn = f.num().reversed(f.num().degree());
    const UniPoly rd = f.den().reversed(f.den().degree());
    const auto q = series_divide(rn.coeffs(), rd.coeffs(), k);
    return -q.back();
}

double quadrature_radius(Complex center, std::span<const Complex> other_poles)
{
    double r = 0.5;
    for (const auto& p : other_poles)
        r = std::min(r, 0.5 * std::abs(p - center));
    return r;
}

QuadratureResult residue_quadrature(const std::function<Complex(Complex)>& f, Complex center, double radius,
                                    std::span<const Complex> other_poles, int nodes)
{
    if (!(radius > 0.0))
        throw Error(Errc::InputError, "quadrature radius must be positive");
    for (const auto& p : other_poles)
        if (std::abs(p - center) < 2.0 * radius * (1.0 - 1e-12))
            throw Error(Errc::RadiusCollision, "pole within twice the quadrature radius of the center");
    Complex acc{};
    double mag = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const Complex w = std::polar(radius, 2.0 * std::numbers::pi * k / nodes);
        const Complex v = f(center + w) * w;
        acc += v;
        mag += std::abs(v);
    }
    return {acc / static_cast<double>(nodes), mag / nodes};
}

std::vector<PoleSite> finite_poles(const RationalFunction& f, const RootOptions& opts)
{
    std::vector<PoleSite> out;
    if (f.den().degree() < 1)
        return out;
    for (const auto& site : poly_roots(f.den(), opts)) {
        const int num_order = std::min(vanishing_order(f.num(), site.root, opts.multiplicity_tol), site.multiplicity);
        const int order = site.multiplicity - num_order;
        if (order <= 0)
            continue;
        out.push_back({site.root, order, residue_analytic(f, site.root, site.multiplicity)});
    }
    return out;
}

ZeroResidues residues_at_zeros(const RationalFunction& f, const BinaryForm& z, const BinaryForm* partner,
                               const RootOptions& opts)
{
    if (z.is_zero())
        throw Error(Errc::InputError, "residues_at_zeros: form is identically zero");
    ZeroResidues out;
    const UniPoly affine = z.dehomogenize();
    const UniPoly partner_affine = partner ? partner->dehomogenize() : UniPoly{};
    if (affine.degree() >= 1) {
        for (const auto& zero : poly_roots(affine, opts)) {
            if (partner && !partner->is_zero() && vanishing_order(partner_affine, zero.root) > 0)
                throw Error(Errc::BaseLocusCollision, "zero t=" + std::to_string(zero.root.real()) + "+"
                                                          + std::to_string(zero.root.imag()) + "i is shared");
            const int den_order = vanishing_order(f.den(), zero.root);
            if (den_order == 0)
                continue;
            const int num_order = std::min(vanishing_order(f.num(), zero.root), den_order);
            if (den_order - num_order <= 0)
                continue;
            PoleSite site{zero.root, den_order - num_order, residue_analytic(f, zero.root, den_order)};
            out.sum += site.residue;
            out.sites.push_back(site);
        }
    }
    if (z.degree() > 0 && z.order_at_infinity() > 0) {
        if (partner && !partner->is_zero() && partner->order_at_infinity() > 0)
            throw Error(Errc::BaseLocusCollision, "zero at infinity is shared");
        const int k = order_at_infinity(f);
        if (k > 0) {
            PoleSite site{std::nullopt, k, residue_at_infinity(f)};
            out.sum += site.residue;
            out.sites.push_back(site);
        }
    }
    return out;
}

double residue_sum_check(const RationalFunction& f, const RootOptions& opts)
{
    Complex acc = residue_at_infinity(f);
    for (const auto& p : finite_poles(f, opts))
        acc += p.residue;
    return std::abs(acc);
}

} // namespace rcp
