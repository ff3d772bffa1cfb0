#include "rcperiod/binary_form.hpp"

#include <algorithm>
#include <cmath>

#include "rcperiod/error.hpp"

namespace rcp {

MobiusMap MobiusMap::compose(const MobiusMap& in) const noexcept
{
    return {a * in.a + b * in.c, a * in.b + b * in.d, c * in.a + d * in.c, c * in.b + d * in.d};
}

BinaryForm::BinaryForm(int degree, std::vector<Complex> coeffs) : degree_(degree), c_(std::move(coeffs))
{
    if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1)
        throw Error(Errc::DimensionMismatch, "binary form of degree " + std::to_string(degree) + " needs "
                                                 + std::to_string(degree + 1) + " coefficients");
    for (const auto& c : c_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw Error(Errc::InputError, "non-finite binary form coefficient");
}

BinaryForm BinaryForm::zero(int degree)
{
    return BinaryForm(degree, std::vector<Complex>(static_cast<std::size_t>(degree) + 1));
}

BinaryForm BinaryForm::from_affine(const UniPoly& p, int degree)
{
    if (p.degree() > degree)
        throw Error(Errc::DimensionMismatch, "polynomial of degree " + std::to_string(p.degree())
                                                 + " does not fit a binary form of degree " + std::to_string(degree));
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= p.degree(); ++k)
        c[static_cast<std::size_t>(k)] = p.coeff(k);
    return BinaryForm(degree, std::move(c));
}

bool BinaryForm::is_zero() const noexcept
{
    return std::all_of(c_.begin(), c_.end(), [](Complex c) { return c == Complex{}; });
}

Complex BinaryForm::operator()(Complex x, Complex y) const noexcept
{
    // sum c_k x^k y^(D-k)
    Complex acc{};
    Complex ypow = 1.0;
    std::vector<Complex> yp(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) {
        yp[c_.size() - 1 - k] = ypow;
        ypow *= y;
    }
    Complex xpow = 1.0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        acc += c_[k] * xpow * yp[k];
        xpow *= x;
    }
    return acc;
}

UniPoly BinaryForm::dehomogenize() const { return UniPoly(c_); }

int BinaryForm::order_at_infinity() const noexcept
{
    int k = 0;
    for (auto it = c_.rbegin(); it != c_.rend() && *it == Complex{}; ++it)
        ++k;
    return k;
}

BinaryForm BinaryForm::d_dx() const
{
    if (degree_ == 0)
        return zero(0);
    std::vector<Complex> d(static_cast<std::size_t>(degree_));
    for (int k = 1; k <= degree_; ++k)
        d[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * c_[static_cast<std::size_t>(k)];
    return BinaryForm(degree_ - 1, std::move(d));
}

BinaryForm BinaryForm::d_dy() const
{
    if (degree_ == 0)
        return zero(0);
    std::vector<Complex> d(static_cast<std::size_t>(degree_));
    for (int k = 0; k < degree_; ++k)
        d[static_cast<std::size_t>(k)] = static_cast<double>(degree_ - k) * c_[static_cast<std::size_t>(k)];
    return BinaryForm(degree_ - 1, std::move(d));
}

BinaryForm BinaryForm::substitute(const MobiusMap& m) const
{
    const BinaryForm lx(1, {m.b, m.a}); // a x + b y
    const BinaryForm ly(1, {m.d, m.c}); // c x + d y
    BinaryForm out = zero(degree_);
    for (int k = 0; k <= degree_; ++k) {
        if (c_[static_cast<std::size_t>(k)] == Complex{})
            continue;
        out += c_[static_cast<std::size_t>(k)] * (lx.pow(k) * ly.pow(degree_ - k));
    }
    return out;
}

double BinaryForm::scale() const noexcept
{
    double m = 0.0;
    for (const auto& c : c_)
        m = std::max(m, std::abs(c));
    return m;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o)
{
    if (o.degree_ != degree_)
        throw Error(Errc::DimensionMismatch, "adding binary forms of different degrees");
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] += o.c_[k];
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o)
{
    if (o.degree_ != degree_)
        throw Error(Errc::DimensionMismatch, "subtracting binary forms of different degrees");
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] -= o.c_[k];
    return *this;
}

BinaryForm& BinaryForm::operator*=(Complex c)
{
    for (auto& x : c_)
        x *= c;
    return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b)
{
    BinaryForm r = BinaryForm::zero(a.degree_ + b.degree_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == Complex{})
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

BinaryForm BinaryForm::pow(int k) const
{
    BinaryForm r(0, {1.0});
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

} // namespace rcp
