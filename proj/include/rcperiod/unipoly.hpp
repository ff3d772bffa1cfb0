#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace rcp {

using Complex = std::complex<double>;

// Dense univariate polynomial, ascending coefficients. Exact zero leading
// coefficients are stripped, so the zero polynomial has no coefficients and
// degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Complex> coeffs);
    UniPoly(std::initializer_list<Complex> coeffs);

    static UniPoly constant(Complex c);
    static UniPoly monomial(Complex c, int power);
    // lead * prod (t - r_i)
    static UniPoly from_roots(const std::vector<Complex>& roots, Complex lead = 1.0);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Complex>& coeffs() const noexcept { return c_; }
    Complex coeff(int k) const noexcept;
    Complex leading() const noexcept { return c_.empty() ? Complex{} : c_.back(); }

    Complex operator()(Complex t) const noexcept;
    UniPoly derivative() const;
    // q(h) = p(t0 + h)
    UniPoly taylor_shift(Complex t0) const;
    // t^n p(1/t); n must be >= degree()
    UniPoly reversed(int n) const;
    // number of exactly vanishing low-order coefficients
    int trailing_zeros() const noexcept;
    UniPoly shifted_down(int k) const;

    // max |coefficient|
    double scale() const noexcept;
    // drop leading coefficients below rel_tol * scale()
    UniPoly trimmed(double rel_tol) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(Complex c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, Complex c) { return a *= c; }
    friend UniPoly operator*(Complex c, UniPoly a) { return a *= c; }
    friend UniPoly operator-(UniPoly a) { return a *= -1.0; }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly pow(int k) const;

private:
    void normalize();

    std::vector<Complex> c_;
};

// Power series in h truncated to `terms` coefficients: num / den with den[0] != 0.
std::vector<Complex> series_divide(const std::vector<Complex>& num, const std::vector<Complex>& den, int terms);

} // namespace rcp
