#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "rcperiod/binary_form.hpp"
#include "rcperiod/unipoly.hpp"

namespace rcp {

using Exponent = std::vector<int>;

// Graded order on exponent vectors: total degree first, then lexicographic
// with x0 most significant. `a` precedes `b` in grlex listing when grlex_less(b, a).
bool grlex_less(const Exponent& a, const Exponent& b);

// All exponent vectors of total degree `degree` in `nvars` variables, listed
// in descending lex order (x0^d first).
std::vector<Exponent> monomials_of_degree(int nvars, int degree);

std::string monomial_string(const Exponent& e);

// Sparse polynomial in x0..x_{n-1} with complex coefficients; exact zero
// coefficients are never stored.
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, Complex c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly monomial(const Exponent& e, Complex c = 1.0);

    int nvars() const noexcept { return nvars_; }
    const std::map<Exponent, Complex>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Complex coeff(const Exponent& e) const;
    void add_term(const Exponent& e, Complex c);

    // -1 for the zero polynomial
    int total_degree() const;
    bool is_homogeneous() const;
    double scale() const noexcept;

    MultiPoly partial(int index) const;
    Complex operator()(std::span<const Complex> point) const;
    // homogeneous polynomial of degree k composed with degree-D forms -> degree kD form
    BinaryForm compose(std::span<const BinaryForm> forms) const;
    UniPoly compose(std::span<const UniPoly> polys) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(Complex c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, Complex c) { return a *= c; }
    friend MultiPoly operator*(Complex c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    MultiPoly pow(int k) const;

    // terms in grlex-descending order, e.g. "x0^5+x1^5+(0+2i)*x2*x3^4"
    std::string to_string() const;

private:
    void check_vars(const MultiPoly& o) const;

    int nvars_;
    std::map<Exponent, Complex> terms_;
};

std::string format_complex(Complex c);

} // namespace rcp
