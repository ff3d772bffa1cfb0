#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rcperiod/binary_form.hpp"
#include "rcperiod/roots.hpp"
#include "rcperiod/unipoly.hpp"

namespace rcp {

class RationalFunction {
public:
    RationalFunction(UniPoly num, UniPoly den);

    const UniPoly& num() const noexcept { return num_; }
    const UniPoly& den() const noexcept { return den_; }
    Complex operator()(Complex t) const noexcept { return num_(t) / den_(t); }

    // Divide out numerically common roots of num and den.
    RationalFunction reduced(const RootOptions& opts = {}) const;

private:
    UniPoly num_;
    UniPoly den_;
};

// A pole of f(t) dt. location == nullopt means the point at infinity.
struct PoleSite {
    std::optional<Complex> location;
    int order = 1;
    Complex residue{};

    bool at_infinity() const noexcept { return !location.has_value(); }
};

// Coefficient of (t - t0)^-1 of f at t0, where den has a root of multiplicity
// den_order there. Throws Errc::PoleMismatch if den's local multiplicity differs.
Complex residue_analytic(const RationalFunction& f, Complex t0, int den_order);

// As residue_analytic, trusting den_order without checking it.
Complex residue_laurent(const RationalFunction& f, Complex t0, int den_order);

// Residue of f(t) dt at t = infinity (u = 1/t, dt = -du/u^2).
Complex residue_at_infinity(const RationalFunction& f);
// Pole order of f(t) dt at infinity, 0 if regular there.
int order_at_infinity(const RationalFunction& f);

struct QuadratureResult {
    Complex value;
    // r * mean |f| on the circle: the magnitude quadrature noise scales with
    double magnitude = 0.0;
};

// (1/2 pi i) \oint f dt on |t - center| = radius with a uniform trapezoid rule.
// Throws Errc::RadiusCollision if any of other_poles lies within 2 * radius.
QuadratureResult residue_quadrature(const std::function<Complex(Complex)>& f, Complex center, double radius,
                                    std::span<const Complex> other_poles = {}, int nodes = 256);

// Half the distance to the nearest other pole, capped at 0.5.
double quadrature_radius(Complex center, std::span<const Complex> other_poles);

// Finite poles of f with effective orders (den multiplicity minus num vanishing order).
std::vector<PoleSite> finite_poles(const RationalFunction& f, const RootOptions& opts = {});

struct ZeroResidues {
    Complex sum{};
    std::vector<PoleSite> sites;
};

// Sum of residues of f dt over the zeros of z on P^1, including [1:0] when z
// vanishes there. If partner is given, a zero of z where partner also vanishes
// raises Errc::BaseLocusCollision.
ZeroResidues residues_at_zeros(const RationalFunction& f, const BinaryForm& z, const BinaryForm* partner = nullptr,
                               const RootOptions& opts = {});

// |sum of finite residues + residue at infinity|
double residue_sum_check(const RationalFunction& f, const RootOptions& opts = {});

} // namespace rcp
