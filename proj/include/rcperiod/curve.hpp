#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rcperiod/binary_form.hpp"
#include "rcperiod/expression.hpp"

namespace rcp {

// First-order data of a family of rational curves at parameter s:
// coordinates x_i(t) and their s-derivatives y_i(t), all binary forms of one degree.
struct CurveJet {
    Complex s{};
    int degree = 0;
    std::vector<BinaryForm> x;
    std::vector<BinaryForm> y;

    int ncoords() const noexcept { return static_cast<int>(x.size()); }
    void validate() const;

    // chart y = 1 views
    UniPoly x_chart(int i) const { return x.at(static_cast<std::size_t>(i)).dehomogenize(); }
    UniPoly dx_chart(int i) const { return x_chart(i).derivative(); }
    UniPoly y_chart(int i) const { return y.at(static_cast<std::size_t>(i)).dehomogenize(); }
};

enum class FamilyKind { Analytic, FiniteDifference, Mobius, Expression };

struct CurveFamily {
    std::string name;
    std::function<CurveJet(Complex)> jet_at;
    FamilyKind kind = FamilyKind::Analytic;
    // root5 continuation anchor in s
    Complex anchor{};

    CurveJet operator()(Complex s) const { return jet_at(s); }
};

// M(s) = m0 + s m1 + s^2 m2 entrywise.
struct MobiusPath {
    MobiusMap m0 = MobiusMap::identity();
    MobiusMap m1{0.0, 0.0, 0.0, 0.0};
    MobiusMap m2{0.0, 0.0, 0.0, 0.0};

    MobiusMap at(Complex s) const noexcept;
    // entrywise dM/ds
    MobiusMap derivative(Complex s) const noexcept;
};

// Family x_i(s, .) = x_i o M(s) of a fixed base curve. The jet's y is the exact
// s-derivative of the substituted binary forms.
CurveFamily mobius_deformation(const CurveJet& base, const MobiusPath& path, std::string name = "mobius");

// Replace t by A(t) in every jet (binary-form substitution, both x and y).
CurveJet reparam_jet(const CurveJet& jet, const MobiusMap& A);
CurveFamily mobius_reparam(const CurveFamily& fam, const MobiusMap& A);

// Family given only by coordinates at each s; y by central differences.
using CoordinateSampler = std::function<std::vector<BinaryForm>(Complex)>;
CurveJet finite_difference_jet(const CoordinateSampler& coords, Complex s, double h);
CurveFamily finite_difference_family(std::string name, CoordinateSampler coords, double h = 1e-5);

// Coordinates as expressions in s and t (zeta fixed); degree is the binary-form degree.
CurveFamily expression_family(std::string name, std::vector<Expr> coords, int degree, Complex zeta,
                              Complex anchor = 0.0, double h = 1e-5);

} // namespace rcp
