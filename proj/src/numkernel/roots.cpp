#include "rcperiod/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "rcperiod/error.hpp"

namespace rcp {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// |b_j| bounds for the Taylor shift of p at t0: sum_i |a_i| C(i,j) |t0|^(i-j)
std::vector<double> shift_magnitudes(const UniPoly& p, Complex t0)
{
    std::vector<Complex> mags;
    mags.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        mags.emplace_back(std::abs(c));
    const UniPoly shifted = UniPoly(std::move(mags)).taylor_shift(std::abs(t0));
    std::vector<double> out;
    for (const auto& c : shifted.coeffs())
        out.push_back(c.real());
    return out;
}

double backward_bound(const UniPoly& p, Complex z)
{
    double acc = 0.0;
    const double r = std::abs(z);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * r + std::abs(*it);
    return acc;
}

bool residual_ok(const UniPoly& p, Complex z, const RootOptions& opts)
{
    const double bound = opts.residual_tol * p.scale() * std::pow(1.0 + std::abs(z), p.degree());
    return std::abs(p(z)) <= bound;
}

// Newton on the (mult-1)th derivative, where a root of multiplicity mult is simple.
Complex polish_multiple(const UniPoly& q, Complex c, int mult, double max_move)
{
    UniPoly dk = q;
    for (int k = 1; k < mult; ++k)
        dk = dk.derivative();
    const UniPoly dk1 = dk.derivative();
    const Complex start = c;
    for (int k = 0; k < 4; ++k) {
        const Complex d = dk1(c);
        if (d == Complex{})
            break;
        const Complex cand = c - dk(c) / d;
        if (!(std::abs(dk(cand)) < std::abs(dk(c))) || std::abs(cand - start) > max_move)
            break;
        c = cand;
    }
    return c;
}

} // namespace

int vanishing_order(const UniPoly& p, Complex t0, double tol)
{
    if (p.is_zero())
        return std::numeric_limits<int>::max();
    const UniPoly shifted = p.taylor_shift(t0);
    const std::vector<double> mags = shift_magnitudes(p, t0);
    int k = 0;
    while (k <= p.degree()) {
        const double b = std::abs(shifted.coeff(k));
        const double bound = tol * mags[static_cast<std::size_t>(k)];
        if (b > bound)
            break;
        ++k;
    }
    return std::min(k, p.degree());
}

bool aberth(const UniPoly& p, std::vector<Complex>& z, int max_iterations)
{
    const int n = p.degree();
    const UniPoly dp = p.derivative();
    if (static_cast<int>(z.size()) != n) {
        // initial guesses on a circle of radius |a0/an|^(1/n), rotated off the axes
        const double rad = std::max(std::pow(std::abs(p.coeff(0) / p.leading()), 1.0 / n), 1e-3);
        z.resize(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            z[static_cast<std::size_t>(k)] = std::polar(rad, 2.0 * std::numbers::pi * k / n + 0.4);
    }
    std::vector<bool> done(z.size(), false);
    for (int it = 0; it < max_iterations; ++it) {
        bool all_done = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i])
                continue;
            const Complex pv = p(z[i]);
            if (std::abs(pv) <= 4.0 * eps * backward_bound(p, z[i])) {
                done[i] = true;
                continue;
            }
            all_done = false;
            const Complex ratio = pv / dp(z[i]);
            Complex sum{};
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i)
                    sum += 1.0 / (z[i] - z[j]);
            Complex w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                w = Complex(1e-8 * (1.0 + std::abs(z[i])), 0.0);
            z[i] -= w;
            if (std::abs(w) <= 2.0 * eps * std::abs(z[i]))
                done[i] = true;
        }
        if (all_done)
            return true;
    }
    return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

std::vector<Complex> companion_roots(const UniPoly& p)
{
    const int n = p.degree();
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i)
        c(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i)
        c(i, n - 1) = -p.coeff(i) / p.leading();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
    std::vector<Complex> out;
    for (int i = 0; i < n; ++i)
        out.push_back(solver.eigenvalues()(i));
    return out;
}

std::vector<RootSite> poly_roots(const UniPoly& p, const RootOptions& opts)
{
    if (p.is_zero())
        throw Error(Errc::InputError, "poly_roots of the zero polynomial");

    std::vector<RootSite> sites;
    const int zeros = p.trailing_zeros();
    if (zeros > 0)
        sites.push_back({0.0, zeros});
    const UniPoly q = p.shifted_down(zeros) * (1.0 / p.leading());
    const int n = q.degree();
    if (n == 0)
        return sites;
    if (n == 1) {
        sites.push_back({-q.coeff(0), 1});
        return sites;
    }

    std::vector<Complex> z;
    bool ok = aberth(q, z, opts.max_iterations);
    if (ok)
        ok = std::all_of(z.begin(), z.end(), [&](Complex r) { return residual_ok(q, r, opts); });
    if (!ok) {
        z = companion_roots(q);
        for (auto& r : z) {
            // a few Newton steps to polish eigenvalues
            const UniPoly dq = q.derivative();
            for (int k = 0; k < 3; ++k) {
                const Complex d = dq(r);
                if (d == Complex{})
                    break;
                const Complex step = q(r) / d;
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
                    break;
                const Complex cand = r - step;
                if (std::abs(q(cand)) < std::abs(q(r)))
                    r = cand;
            }
        }
        if (!std::all_of(z.begin(), z.end(), [&](Complex r) { return residual_ok(q, r, opts); }))
            throw Error(Errc::NonConvergence, "root finder failed after " + std::to_string(opts.max_iterations)
                                                  + " iterations (degree " + std::to_string(n) + ")");
    }

    // Cluster: a group of k nearby approximations is one root of multiplicity k
    // if the first k Taylor coefficients of q at its centroid vanish numerically.
    double maxabs = 0.0;
    for (const auto& r : z)
        maxabs = std::max(maxabs, std::abs(r));
    const double merge_dist = opts.cluster_tol * (1.0 + maxabs);

    std::vector<bool> used(z.size(), false);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (used[i])
            continue;
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (!used[j] && j != i)
                order.push_back(j);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return std::abs(z[a] - z[i]) < std::abs(z[b] - z[i]); });

        std::size_t best = 0; // number of neighbours joined
        Complex centre = z[i];
        for (std::size_t k = order.size(); k >= 1; --k) {
            Complex c = z[i];
            for (std::size_t m = 0; m < k; ++m)
                c += z[order[m]];
            c /= static_cast<double>(k + 1);
            const double spread = std::abs(z[order[k - 1]] - z[i]);
            if (spread <= merge_dist) {
                best = k;
                centre = c;
                break;
            }
            // a numerically multiple root is a tight group, well separated from the rest
            double radius = std::abs(z[i] - c);
            for (std::size_t m = 0; m < k; ++m)
                radius = std::max(radius, std::abs(z[order[m]] - c));
            double gap = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i && std::find(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), j)
                        == order.begin() + static_cast<std::ptrdiff_t>(k))
                    gap = std::min(gap, std::abs(z[j] - c));
            if (gap <= 4.0 * radius)
                continue;
            const Complex polished = polish_multiple(q, c, static_cast<int>(k + 1), radius);
            if (vanishing_order(q, polished, opts.multiplicity_tol) >= static_cast<int>(k + 1)) {
                best = k;
                centre = polished;
                break;
            }
        }
        used[i] = true;
        for (std::size_t m = 0; m < best; ++m)
            used[order[m]] = true;
        const int mult = static_cast<int>(best + 1);
        const Complex c = centre;
        sites.push_back({c, mult});
    }
    return sites;
}

} // namespace rcp
