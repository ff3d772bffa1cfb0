#pragma once

#include <span>
#include <vector>

#include "rcperiod/curve.hpp"
#include "rcperiod/hypersurface.hpp"
#include "rcperiod/residue.hpp"

namespace rcp {

// Omega_J = sign * sum_l (-1)^l x_{k_l} dx_{k_0} ^ ... (omit k_l) ... ^ dx_{k_{m-q}}
struct ContractionResult {
    int sign = 1;
    std::vector<int> complement;
    std::vector<int> J;
};

// rank of j2 in the sorted complement of {j0, j1} in 0..n_coords-1
int j2star(int j2, int j0, int j1, int n_coords);

// closed form (-1)^{j_0 + ... + j_q + C(q+2, 2)}; sign 0 when J is every coordinate (Omega_J = 0)
ContractionResult contraction_sign(std::span<const int> J, int m);

// Iterated interior products applied literally to Omega = sum_i (-1)^i x_i dx_0^..^dx_i-hat^..^dx_{m+1},
// innermost d/dx_{j_0} first; the sign is read off against the canonical form.
ContractionResult contract_bruteforce(std::span<const int> J, int m);

struct CocyclePiece {
    std::vector<int> J;
    // (-1)^m / q! times the contraction sign
    Complex coefficient;
    MultiPoly numerator;
    // k_0 < ... < k_{m-q}; the piece is coefficient * P * Omega_canonical(complement) / F_J
    std::vector<int> complement;
};

struct CechCocycle {
    int q = 0;
    int m = 0;
    // one piece per strictly increasing J with q+1 entries, in lexicographic order
    std::vector<CocyclePiece> pieces;
};

// Residue of P Omega / F^{q+1} as a Cech cocycle on the Jacobian covering.
// Throws Errc::DegreeError unless deg P = d(q+1) - m - 2.
CechCocycle residue_cocycle(const MultiPoly& P, const Hypersurface& X, int q);

// F_J = F_{j0} ... F_{jq}
MultiPoly piece_denominator(const Hypersurface& X, std::span<const int> J);

// deg(numerator) + (m + 1 - q) - deg(F_J); zero for every piece of a valid cocycle
int piece_weight(const CocyclePiece& piece, const Hypersurface& X, int q);

struct GaussManinStep {
    MultiPoly P;
    int k = 0;
};

// d omega_P = dt ^ omega_{-k x^beta P} for F = F_0 + t x^beta: P' = -k x^beta P, k' = k + 1.
// Requires deg P = k d - N with d = |beta| and N = P.nvars() (= 2n + 3).
GaussManinStep gm_monomial_derivative(const MultiPoly& P, int k, const Exponent& beta);

enum class SignConvention {
    // each pair carries the Omega_J sign, so the period is the trace of residue_cocycle
    Cocycle,
    // Fermat specialization carrying only (-1)^{j2*}, no pair-dependent factor
    Displayed,
};

struct PairIntegrand {
    int j0 = 0;
    int j1 = 0;
    int sign = 1;
    // F_{j0}(x(t)), F_{j1}(x(t)) as binary forms of degree (d-1) D
    BinaryForm A;
    BinaryForm B;
    // sum_{j2} (-1)^{j2*} x_{j2} (x'_{j3} y_{j4} - x'_{j4} y_{j3}) in the chart y = 1
    UniPoly wedge;
    UniPoly numerator;
    double wedge_scale = 0.0;
    // magnitude the numerator would have without cancellation
    double numerator_scale = 0.0;
    // true when A or B vanishes identically (curve misses U_{j0} or U_{j1})
    bool degenerate = false;
    RationalFunction rf{UniPoly{}, UniPoly::constant(1.0)};
};

// Period integrand of the pair (j0, j1) for m = 3, q = 1. The order of j0, j1
// does not affect the result.
PairIntegrand pair_integrand(const Hypersurface& X, const MultiPoly& P, const CurveJet& jet, int j0, int j1,
                             SignConvention convention = SignConvention::Cocycle);

// Same, reusing the wedge part (independent of P) from a prepared integrand.
PairIntegrand with_numerator(const PairIntegrand& prepared, const MultiPoly& P, const CurveJet& jet);

// For Fermat X of degree d: max over coefficients of |A B - d^2 x_{j0}^{d-1} x_{j1}^{d-1}|, relative.
double fermat_denominator_defect(const Hypersurface& X, const CurveJet& jet, int j0, int j1);

} // namespace rcp
