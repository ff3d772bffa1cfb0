#include "rcperiod/unipoly.hpp"

#include <algorithm>
#include <cmath>

#include "rcperiod/error.hpp"

namespace rcp {

UniPoly::UniPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<Complex> coeffs) : c_(coeffs) { normalize(); }

void UniPoly::normalize()
{
    for (const auto& c : c_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw Error(Errc::InputError, "non-finite polynomial coefficient");
    while (!c_.empty() && c_.back() == Complex{})
        c_.pop_back();
}

UniPoly UniPoly::constant(Complex c) { return UniPoly(std::vector<Complex>{c}); }

UniPoly UniPoly::monomial(Complex c, int power)
{
    std::vector<Complex> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Complex>& roots, Complex lead)
{
    std::vector<Complex> v{lead};
    for (const auto& r : roots) {
        v.push_back(0.0);
        for (std::size_t k = v.size() - 1; k > 0; --k)
            v[k] = v[k - 1] - r * v[k];
        v[0] = -r * v[0];
    }
    return UniPoly(std::move(v));
}

Complex UniPoly::coeff(int k) const noexcept
{
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return {};
    return c_[static_cast<std::size_t>(k)];
}

Complex UniPoly::operator()(Complex t) const noexcept
{
    // long double accumulation: expanded products of clustered roots lose digits in double
    using XC = std::complex<long double>;
    const XC tx(t);
    XC acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * tx + XC(*it);
    return Complex(acc);
}

UniPoly UniPoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * c_[k];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::taylor_shift(Complex t0) const
{
    // repeated synthetic division (Horner scheme), O(n^2)
    using XC = std::complex<long double>;
    std::vector<XC> a(c_.begin(), c_.end());
    const XC tx(t0);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k > i; --k)
            a[k - 1] += tx * a[k];
    return UniPoly(std::vector<Complex>(a.begin(), a.end()));
}

UniPoly UniPoly::reversed(int n) const
{
    std::vector<Complex> r(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= degree(); ++k)
        r[static_cast<std::size_t>(n - k)] = c_[static_cast<std::size_t>(k)];
    return UniPoly(std::move(r));
}

int UniPoly::trailing_zeros() const noexcept
{
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(k)] == Complex{})
        ++k;
    return k;
}

UniPoly UniPoly::shifted_down(int k) const
{
    if (k >= static_cast<int>(c_.size()))
        return {};
    return UniPoly(std::vector<Complex>(c_.begin() + k, c_.end()));
}

double UniPoly::scale() const noexcept
{
    double m = 0.0;
    for (const auto& c : c_)
        m = std::max(m, std::abs(c));
    return m;
}

UniPoly UniPoly::trimmed(double rel_tol) const
{
    const double cut = rel_tol * scale();
    std::vector<Complex> v = c_;
    while (!v.empty() && std::abs(v.back()) <= cut)
        v.pop_back();
    return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(Complex c)
{
    for (auto& x : c_)
        x *= c;
    normalize();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Complex> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(int k) const
{
    UniPoly result = constant(1.0);
    UniPoly base = *this;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

std::vector<Complex> series_divide(const std::vector<Complex>& num, const std::vector<Complex>& den, int terms)
{
    std::vector<Complex> q(static_cast<std::size_t>(std::max(terms, 0)));
    for (int k = 0; k < terms; ++k) {
        Complex acc = k < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(k)] : Complex{};
        for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
            acc -= den[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
        q[static_cast<std::size_t>(k)] = acc / den[0];
    }
    return q;
}

} // namespace rcp
