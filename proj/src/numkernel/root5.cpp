#include "rcperiod/root5.hpp"

#include <cmath>
#include <numbers>

#include "rcperiod/error.hpp"

namespace rcp {

Complex principal_root5(Complex z)
{
    if (z == Complex{})
        return {};
    // arg in (-pi, pi]: the negative real axis (including -0.0 imaginary part) maps to +pi
    double a = std::arg(z);
    if (a <= -std::numbers::pi)
        a = std::numbers::pi;
    if (z.imag() == 0.0 && z.real() < 0.0)
        a = std::numbers::pi;
    return std::polar(std::pow(std::abs(z), 0.2), a / 5.0);
}

namespace {

constexpr int max_depth = 48;

// w^5 = arg(s0) given; returns the continued root at s1
Complex step(const std::function<Complex(Complex)>& arg, Complex s0, Complex a0, Complex w0, Complex s1, int depth)
{
    const Complex a1 = arg(s1);
    if (std::abs(a1) <= 1e-14 * (1.0 + std::abs(a0)))
        throw Error(Errc::BranchError, "root5 argument vanishes on the continuation path");
    const Complex ratio = a1 / a0;
    if (std::abs(ratio - 1.0) < 0.25)
        return w0 * principal_root5(ratio);
    if (depth >= max_depth)
        throw Error(Errc::BranchError, "root5 continuation did not resolve the branch");
    const Complex mid = 0.5 * (s0 + s1);
    const Complex am = arg(mid);
    if (std::abs(am) <= 1e-14 * (1.0 + std::abs(a0)))
        throw Error(Errc::BranchError, "root5 argument vanishes on the continuation path");
    const Complex wm = step(arg, s0, a0, w0, mid, depth + 1);
    return step(arg, mid, am, wm, s1, depth + 1);
}

} // namespace

Complex continue_root5(const std::function<Complex(Complex)>& arg, Complex s, Complex anchor,
                       std::optional<Complex> anchor_value)
{
    const Complex a0 = arg(anchor);
    if (a0 == Complex{})
        throw Error(Errc::BranchError, "root5 argument vanishes at the anchor");
    const Complex w0 = anchor_value.value_or(principal_root5(a0));
    if (s == anchor)
        return w0;
    // a few fixed substeps keep the recursion shallow for smooth paths
    constexpr int substeps = 8;
    Complex sp = anchor;
    Complex ap = a0;
    Complex wp = w0;
    for (int k = 1; k <= substeps; ++k) {
        const Complex sk = anchor + (s - anchor) * (static_cast<double>(k) / substeps);
        wp = step(arg, sp, ap, wp, sk, 0);
        sp = sk;
        ap = arg(sk);
    }
    return wp;
}

} // namespace rcp
