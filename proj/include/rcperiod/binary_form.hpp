#pragma once

#include <vector>

#include "rcperiod/unipoly.hpp"

namespace rcp {

// [x:y] -> [a x + b y : c x + d y]; on the chart t = x/y this is t -> (a t + b)/(c t + d).
struct MobiusMap {
    Complex a{1.0}, b{}, c{}, d{1.0};

    static MobiusMap identity() { return {}; }
    Complex det() const noexcept { return a * d - b * c; }
    Complex operator()(Complex t) const noexcept { return (a * t + b) / (c * t + d); }
    MobiusMap compose(const MobiusMap& inner) const noexcept;
};

// Homogeneous form of degree D in (x, y): coeff(k) multiplies x^k y^(D-k).
// Exactly D+1 coefficients are stored; zeros are allowed anywhere, so a form
// whose top coefficient vanishes has a zero at [1:0].
class BinaryForm {
public:
    BinaryForm() = default;
    BinaryForm(int degree, std::vector<Complex> coeffs);

    static BinaryForm zero(int degree);
    // homogenize p (deg p <= degree) with respect to the chart y = 1
    static BinaryForm from_affine(const UniPoly& p, int degree);

    int degree() const noexcept { return degree_; }
    const std::vector<Complex>& coeffs() const noexcept { return c_; }
    Complex coeff(int k) const noexcept { return c_[static_cast<std::size_t>(k)]; }
    bool is_zero() const noexcept;

    Complex operator()(Complex x, Complex y) const noexcept;
    // chart y = 1, t = x
    UniPoly dehomogenize() const;
    // multiplicity of the zero at [1:0]; 0 if none. Undefined (returns degree+1) for the zero form.
    int order_at_infinity() const noexcept;

    BinaryForm d_dx() const;
    BinaryForm d_dy() const;
    BinaryForm substitute(const MobiusMap& m) const;

    double scale() const noexcept;

    BinaryForm& operator+=(const BinaryForm& o);
    BinaryForm& operator-=(const BinaryForm& o);
    BinaryForm& operator*=(Complex c);
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(BinaryForm a, Complex c) { return a *= c; }
    friend BinaryForm operator*(Complex c, BinaryForm a) { return a *= c; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

    BinaryForm pow(int k) const;

private:
    int degree_ = 0;
    std::vector<Complex> c_{Complex{}};
};

} // namespace rcp
