#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcperiod/curve.hpp"
#include "rcperiod/hypersurface.hpp"

namespace rcp {

// F = x_0^d + ... + x_{m+1}^d
Hypersurface fermat_hypersurface(int m, int d);
// x0^5 + x1 x2^4 + x2 x3^4 + x3 x4^4 + x4 x1^4
Hypersurface shioda_quintic();

// e^{2 pi i k / 5}
Complex zeta5(int k);

struct AbcPoint {
    Complex a, b, c;
};

// a = 1, b = s, c = root5(-1 - s^5) continued from s = 0
AbcPoint abc_path(Complex s);
// derivative along the path
AbcPoint abc_path_derivative(Complex s);

// [x:y] -> x in slot i, -zeta x in slot j, a y, b y, c y in the remaining slots (ascending)
struct LineFamilyDescriptor {
    int i = 0;
    int j = 1;
    int zeta_index = 0;

    Complex zeta() const { return zeta5(zeta_index); }
    std::string id() const;
    friend bool operator==(const LineFamilyDescriptor&, const LineFamilyDescriptor&) = default;
};

// 10 coordinate pairs x 5 roots of unity
std::vector<LineFamilyDescriptor> line_families();
CurveFamily line_family(const LineFamilyDescriptor& desc);

enum class SliceMode { PaperLiteral, Corrected };
const char* slice_mode_name(SliceMode m) noexcept;

// PaperLiteral: x = (t, -zeta, 1, s, c), y = (0, 0, 0, 1, 0), fails containment.
// Corrected:    x = (t, -zeta t, 1, s, c), y = (0, 0, 0, 1, c'(s)).
CurveFamily paper_line_slice(int zeta_index, SliceMode mode);

struct ClosedFormRef {
    Complex zeta{1.0};
    // root5(-1 - s^5) is the principal root at the anchor and continued from there
    Complex anchor{};
};

// root5(-1-s^5) / zeta^2 + zeta^3 / root5(-1-s^5)^4
Complex closed_form_g(Complex s, const ClosedFormRef& ref);

// Relations in the 8 variables x0..x4, a, b, c (indices 0..4, 5, 6, 7):
//   a^2 (x0 + x1) - b^2 (x2 + x3)
//   b x4 - c (x0 + x1)
//   b (x0^2 + x1^2) - i a (x2^2 + x3^2)
//   b (x0^2 + x1^2) + i a (x2^2 + x3^2)
//   a^10 + b^10 - 4 b^5 c^5
std::vector<MultiPoly> mustata_conic_equations();

// base curve of the null families: the corrected slice (zeta index 0) at s = 0.1
CurveJet null_base_jet();
// reparametrizations x o M(s) of the base curve; y is the exact s-derivative
MobiusPath seeded_mobius_path(std::uint64_t seed, bool affine);
CurveFamily mobius_null_family(std::uint64_t seed, bool affine = false);
// the corrected slice with y replaced by 0
CurveFamily zero_jet_family();

// {0, 0.05i, 0.1, 0.2 e^{i pi/7}, 0.3}
std::vector<Complex> standard_samples();

struct CatalogEntry {
    std::string id;
    std::string kind; // "hypersurface" or "family"
    std::string description;
};

std::vector<CatalogEntry> catalog_entries();
Hypersurface resolve_hypersurface(const std::string& id);
CurveFamily resolve_family(const std::string& id);

} // namespace rcp
