#include "rcperiod/curve.hpp"

#include <cmath>

#include "rcperiod/error.hpp"

namespace rcp {

void CurveJet::validate() const
{
    if (x.size() != y.size())
        throw Error(Errc::DimensionMismatch, "jet has " + std::to_string(x.size()) + " coordinates but "
                                                 + std::to_string(y.size()) + " derivatives");
    bool all_zero = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].degree() != degree || y[i].degree() != degree)
            throw Error(Errc::DimensionMismatch, "jet coordinate " + std::to_string(i) + " has the wrong degree");
        all_zero = all_zero && x[i].is_zero();
    }
    if (all_zero)
        throw Error(Errc::InputError, "all curve coordinates vanish identically");
}

MobiusMap MobiusPath::at(Complex s) const noexcept
{
    return {m0.a + s * (m1.a + s * m2.a), m0.b + s * (m1.b + s * m2.b), m0.c + s * (m1.c + s * m2.c),
            m0.d + s * (m1.d + s * m2.d)};
}

MobiusMap MobiusPath::derivative(Complex s) const noexcept
{
    return {m1.a + 2.0 * s * m2.a, m1.b + 2.0 * s * m2.b, m1.c + 2.0 * s * m2.c, m1.d + 2.0 * s * m2.d};
}

namespace {

void require_nondegenerate(const MobiusMap& m)
{
    const double norm = std::abs(m.a) + std::abs(m.b) + std::abs(m.c) + std::abs(m.d);
    if (std::abs(m.det()) <= 1e-12 * norm * norm)
        throw Error(Errc::DegenerateMap, "Mobius map has vanishing determinant");
}

} // namespace

CurveFamily mobius_deformation(const CurveJet& base, const MobiusPath& path, std::string name)
{
    base.validate();
    const MobiusMap id = path.at(0.0);
    if (id.a != 1.0 || id.b != 0.0 || id.c != 0.0 || id.d != 1.0)
        throw Error(Errc::InputError, "Mobius path must start at the identity");
    CurveFamily fam;
    fam.name = std::move(name);
    fam.kind = FamilyKind::Mobius;
    fam.jet_at = [base, path](Complex s) {
        const MobiusMap m = path.at(s);
        require_nondegenerate(m);
        const MobiusMap dm = path.derivative(s);
        CurveJet jet;
        jet.s = s;
        jet.degree = base.degree;
        const BinaryForm vx(1, {dm.b, dm.a}); // a' x + b' y
        const BinaryForm vy(1, {dm.d, dm.c}); // c' x + d' y
        for (const auto& xi : base.x) {
            jet.x.push_back(xi.substitute(m));
            if (base.degree == 0) {
                jet.y.push_back(BinaryForm::zero(0));
                continue;
            }
            jet.y.push_back(xi.d_dx().substitute(m) * vx + xi.d_dy().substitute(m) * vy);
        }
        return jet;
    };
    return fam;
}

CurveJet reparam_jet(const CurveJet& jet, const MobiusMap& A)
{
    require_nondegenerate(A);
    CurveJet out;
    out.s = jet.s;
    out.degree = jet.degree;
    for (const auto& xi : jet.x)
        out.x.push_back(xi.substitute(A));
    for (const auto& yi : jet.y)
        out.y.push_back(yi.substitute(A));
    return out;
}

CurveFamily mobius_reparam(const CurveFamily& fam, const MobiusMap& A)
{
    require_nondegenerate(A);
    CurveFamily out = fam;
    out.name = fam.name + "/reparam";
    out.jet_at = [inner = fam.jet_at, A](Complex s) { return reparam_jet(inner(s), A); };
    return out;
}

CurveJet finite_difference_jet(const CoordinateSampler& coords, Complex s, double h)
{
    const auto x0 = coords(s);
    const auto xp = coords(s + h);
    const auto xm = coords(s - h);
    if (x0.empty() || xp.size() != x0.size() || xm.size() != x0.size())
        throw Error(Errc::DimensionMismatch, "coordinate sampler returned inconsistent sizes");
    CurveJet jet;
    jet.s = s;
    jet.degree = x0.front().degree();
    jet.x = x0;
    for (std::size_t i = 0; i < x0.size(); ++i)
        jet.y.push_back((xp[i] - xm[i]) * Complex(1.0 / (2.0 * h)));
    jet.validate();
    return jet;
}

CurveFamily finite_difference_family(std::string name, CoordinateSampler coords, double h)
{
    CurveFamily fam;
    fam.name = std::move(name);
    fam.kind = FamilyKind::FiniteDifference;
    fam.jet_at = [coords = std::move(coords), h](Complex s) { return finite_difference_jet(coords, s, h); };
    return fam;
}

CurveFamily expression_family(std::string name, std::vector<Expr> coords, int degree, Complex zeta, Complex anchor,
                              double h)
{
    if (coords.empty())
        throw Error(Errc::InputError, "curve needs at least one coordinate");
    CoordinateSampler sampler = [coords, degree, zeta, anchor](Complex s) {
        Env env;
        env.s = s;
        env.zeta = zeta;
        std::vector<BinaryForm> out;
        for (const auto& e : coords)
            out.push_back(BinaryForm::from_affine(e.to_unipoly_in_t(env, anchor), degree));
        return out;
    };
    CurveFamily fam = finite_difference_family(std::move(name), std::move(sampler), h);
    fam.kind = FamilyKind::Expression;
    fam.anchor = anchor;
    return fam;
}

} // namespace rcp
