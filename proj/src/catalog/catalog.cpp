#include "rcperiod/catalog.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <regex>

#include "rcperiod/error.hpp"
#include "rcperiod/root5.hpp"

namespace rcp {

namespace {

Complex c_of(Complex s)
{
    return continue_root5([](Complex z) { return -1.0 - std::pow(z, 5); }, s, 0.0);
}

BinaryForm lin(Complex x, Complex y)
{
    return BinaryForm(1, {y, x});
}

double unit(std::mt19937_64& g)
{
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

std::string zeta_text(int k)
{
    return "zeta=" + std::to_string(k);
}

int parse_int(const std::string& s, const std::string& id)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw Error(Errc::ConfigError, "bad number in catalog id '" + id + "'");
    }
}

} // namespace

Hypersurface fermat_hypersurface(int m, int d)
{
    if (m < 1 || d < 2)
        throw Error(Errc::InputError, "fermat_hypersurface needs m >= 1 and d >= 2");
    const int n = m + 2;
    MultiPoly F(n);
    for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = d;
        F.add_term(e, 1.0);
    }
    return Hypersurface(F, "fermat/m=" + std::to_string(m) + "/d=" + std::to_string(d));
}

Hypersurface shioda_quintic()
{
    MultiPoly F(5);
    F.add_term({5, 0, 0, 0, 0}, 1.0);
    F.add_term({0, 1, 4, 0, 0}, 1.0);
    F.add_term({0, 0, 1, 4, 0}, 1.0);
    F.add_term({0, 0, 0, 1, 4}, 1.0);
    F.add_term({0, 4, 0, 0, 1}, 1.0);
    return Hypersurface(F, "shioda-quintic");
}

Complex zeta5(int k)
{
    if (k < 0 || k > 4)
        throw Error(Errc::IndexError, "zeta index must be in 0..4");
    if (k == 0)
        return 1.0;
    return std::polar(1.0, 2.0 * std::numbers::pi * k / 5.0);
}

AbcPoint abc_path(Complex s)
{
    return {1.0, s, c_of(s)};
}

AbcPoint abc_path_derivative(Complex s)
{
    const Complex c = c_of(s);
    return {0.0, 1.0, -std::pow(s, 4) / std::pow(c, 4)};
}

std::string LineFamilyDescriptor::id() const
{
    return "fermat-line/pair=" + std::to_string(i) + "," + std::to_string(j) + "/" + zeta_text(zeta_index)
        + "/corrected";
}

std::vector<LineFamilyDescriptor> line_families()
{
    std::vector<LineFamilyDescriptor> out;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = 0; k < 5; ++k)
                out.push_back({i, j, k});
    return out;
}

CurveFamily line_family(const LineFamilyDescriptor& desc)
{
    if (desc.i < 0 || desc.j <= desc.i || desc.j > 4)
        throw Error(Errc::IndexError, "line family pair must satisfy 0 <= i < j <= 4");
    const Complex zeta = desc.zeta();
    const int i = desc.i, j = desc.j;
    CurveFamily fam;
    fam.name = desc.id();
    fam.kind = FamilyKind::Analytic;
    fam.jet_at = [=](Complex s) {
        const AbcPoint p = abc_path(s);
        const AbcPoint dp = abc_path_derivative(s);
        const Complex vals[3] = {p.a, p.b, p.c};
        const Complex dvals[3] = {dp.a, dp.b, dp.c};
        CurveJet jet;
        jet.s = s;
        jet.degree = 1;
        int slot = 0;
        for (int k = 0; k < 5; ++k) {
            if (k == i) {
                jet.x.push_back(lin(1.0, 0.0));
                jet.y.push_back(BinaryForm::zero(1));
            } else if (k == j) {
                jet.x.push_back(lin(-zeta, 0.0));
                jet.y.push_back(BinaryForm::zero(1));
            } else {
                jet.x.push_back(lin(0.0, vals[slot]));
                jet.y.push_back(lin(0.0, dvals[slot]));
                ++slot;
            }
        }
        return jet;
    };
    return fam;
}

const char* slice_mode_name(SliceMode m) noexcept
{
    return m == SliceMode::PaperLiteral ? "literal" : "corrected";
}

CurveFamily paper_line_slice(int zeta_index, SliceMode mode)
{
    const Complex zeta = zeta5(zeta_index);
    CurveFamily fam;
    fam.name = "fermat-slice/" + zeta_text(zeta_index) + "/" + slice_mode_name(mode);
    fam.kind = FamilyKind::Analytic;
    if (mode == SliceMode::Corrected) {
        const CurveFamily inner = line_family({0, 1, zeta_index});
        fam.jet_at = inner.jet_at;
        return fam;
    }
    fam.jet_at = [=](Complex s) {
        CurveJet jet;
        jet.s = s;
        jet.degree = 1;
        jet.x = {lin(1.0, 0.0), lin(0.0, -zeta), lin(0.0, 1.0), lin(0.0, s), lin(0.0, c_of(s))};
        jet.y = {BinaryForm::zero(1), BinaryForm::zero(1), BinaryForm::zero(1), lin(0.0, 1.0), BinaryForm::zero(1)};
        return jet;
    };
    return fam;
}

Complex closed_form_g(Complex s, const ClosedFormRef& ref)
{
    if (std::abs(std::pow(ref.zeta, 5) - 1.0) > 1e-12)
        throw Error(Errc::InputError, "zeta must be a fifth root of unity");
    const Complex r = continue_root5([](Complex z) { return -1.0 - std::pow(z, 5); }, s, ref.anchor);
    return r / (ref.zeta * ref.zeta) + std::pow(ref.zeta, 3) / std::pow(r, 4);
}

std::vector<MultiPoly> mustata_conic_equations()
{
    const int n = 8;
    const auto v = [](int k) { return MultiPoly::variable(n, k); };
    const MultiPoly x0 = v(0), x1 = v(1), x2 = v(2), x3 = v(3), x4 = v(4);
    const MultiPoly a = v(5), b = v(6), c = v(7);
    const Complex I{0.0, 1.0};
    const MultiPoly q01 = x0 * x0 + x1 * x1;
    const MultiPoly q23 = x2 * x2 + x3 * x3;
    return {
        a * a * (x0 + x1) - b * b * (x2 + x3),
        b * x4 - c * (x0 + x1),
        b * q01 - I * (a * q23),
        b * q01 + I * (a * q23),
        a.pow(10) + b.pow(10) - Complex(4.0) * (b.pow(5) * c.pow(5)),
    };
}

CurveJet null_base_jet()
{
    return paper_line_slice(0, SliceMode::Corrected)(0.1);
}

MobiusPath seeded_mobius_path(std::uint64_t seed, bool affine)
{
    std::mt19937_64 g(seed);
    const auto draw = [&g] { return Complex(unit(g) - 0.5, unit(g) - 0.5); };
    MobiusPath p;
    p.m1 = {draw(), draw(), draw(), draw()};
    p.m2 = {draw(), draw(), draw(), draw()};
    if (affine) {
        p.m1.c = p.m1.d = 0.0;
        p.m2.c = p.m2.d = 0.0;
    }
    return p;
}

CurveFamily mobius_null_family(std::uint64_t seed, bool affine)
{
    const std::string name = std::string(affine ? "null/mobius-affine/seed=" : "null/mobius/seed=") + std::to_string(seed);
    return mobius_deformation(null_base_jet(), seeded_mobius_path(seed, affine), name);
}

CurveFamily zero_jet_family()
{
    const CurveFamily inner = paper_line_slice(0, SliceMode::Corrected);
    CurveFamily fam;
    fam.name = "null/zero-jet";
    fam.kind = FamilyKind::Analytic;
    fam.jet_at = [inner](Complex s) {
        CurveJet jet = inner(s);
        for (auto& y : jet.y)
            y = BinaryForm::zero(jet.degree);
        return jet;
    };
    return fam;
}

std::vector<Complex> standard_samples()
{
    return {0.0, Complex(0.0, 0.05), 0.1, std::polar(0.2, std::numbers::pi / 7.0), 0.3};
}

std::vector<CatalogEntry> catalog_entries()
{
    std::vector<CatalogEntry> out;
    out.push_back({"fermat-quintic", "hypersurface", "x0^5 + x1^5 + x2^5 + x3^5 + x4^5 in P^4"});
    out.push_back({"fermat/m=M/d=D", "hypersurface", "Fermat hypersurface of dimension M and degree D"});
    out.push_back({"shioda-quintic", "hypersurface", "x0^5 + x1*x2^4 + x2*x3^4 + x3*x4^4 + x4*x1^4"});
    for (const auto& d : line_families())
        out.push_back({d.id(), "family", "line x in slot " + std::to_string(d.i) + ", -zeta x in slot " + std::to_string(d.j)
                                              + ", (1, s, root5(-1-s^5)) y elsewhere"});
    for (int k = 0; k < 5; ++k) {
        out.push_back({"fermat-slice/" + zeta_text(k) + "/literal", "family", "(t, -zeta, 1, s, root5(-1-s^5)) with y = e3"});
        out.push_back({"fermat-slice/" + zeta_text(k) + "/corrected", "family", "(t, -zeta t, 1, s, root5(-1-s^5))"});
    }
    out.push_back({"null/zero-jet", "family", "corrected slice with y = 0"});
    out.push_back({"null/mobius/seed=N", "family", "seeded PSL2 reparametrization path of a fixed line"});
    out.push_back({"null/mobius-affine/seed=N", "family", "seeded affine reparametrization path of a fixed line"});
    return out;
}

Hypersurface resolve_hypersurface(const std::string& id)
{
    if (id == "fermat-quintic")
        return fermat_hypersurface(3, 5);
    if (id == "shioda-quintic")
        return shioda_quintic();
    static const std::regex fermat(R"(fermat/m=(\d+)/d=(\d+))");
    std::smatch m;
    if (std::regex_match(id, m, fermat))
        return fermat_hypersurface(parse_int(m[1], id), parse_int(m[2], id));
    throw Error(Errc::ConfigError, "unknown hypersurface id '" + id + "'");
}

CurveFamily resolve_family(const std::string& id)
{
    static const std::regex line(R"(fermat-line/pair=(\d),(\d)/zeta=(\d)/corrected)");
    static const std::regex slice(R"(fermat-slice/zeta=(\d)/(literal|corrected))");
    static const std::regex mobius(R"(null/mobius(-affine)?/seed=(\d+))");
    std::smatch m;
    if (std::regex_match(id, m, line)) {
        const LineFamilyDescriptor d{parse_int(m[1], id), parse_int(m[2], id), parse_int(m[3], id)};
        if (d.i >= d.j || d.j > 4 || d.zeta_index > 4)
            throw Error(Errc::ConfigError, "no line family '" + id + "'");
        return line_family(d);
    }
    if (std::regex_match(id, m, slice)) {
        const int k = parse_int(m[1], id);
        if (k > 4)
            throw Error(Errc::ConfigError, "zeta index out of range in '" + id + "'");
        return paper_line_slice(k, m[2] == "literal" ? SliceMode::PaperLiteral : SliceMode::Corrected);
    }
    if (std::regex_match(id, m, mobius))
        return mobius_null_family(std::stoull(m[2]), m[1].matched);
    if (id == "null/zero-jet")
        return zero_jet_family();
    throw Error(Errc::ConfigError, "unknown family id '" + id + "'");
}

} // namespace rcp
