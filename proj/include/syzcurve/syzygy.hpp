#pragma once

#include <optional>

#include "syzcurve/arrangement.hpp"

namespace syz {

/// A degree-d syzygy of the k-th power system, stored through its restriction
/// to L: binary forms g_I|_L with
///   Sum_I g_I|_L * w^I = h * f|_L,   w = grad(f)|_L,
/// for some binary cofactor h (h = 0 for an exact annihilator of the w^I),
/// i.e. the residual vanishes at the parameters of the arrangement points on
/// L. Components are indexed by the degree-k multi-indices in graded-lex
/// descending order (monomial_exponents<3>(k)).
struct SyzygyVector {
    int k = 0;
    int d = 0;
    std::vector<Poly2> restricted;
    bool reduced = false;
    Poly2 line_cofactor;                       // h above, on L
    std::optional<std::vector<Poly3>> global;  // ternary lift, when known
    Poly3 cofactor;                            // g with Sum g_I (grad f)^I + g L = 0
};

/// Generator E_{I'} of the derivation module: |I'| = k-1 and the component
/// at I' + e_m is the m-th variable, all other components zero.
struct DerGenerator {
    int k = 0;
    Expo<3> index;               // I', degree k-1
    std::vector<Poly3> components;  // over the degree-k multi-indices
};

// Deterministic basis of the degree-d syzygies on L, taken modulo the
// submodule generated by the restricted derivation generators E_j (their
// contributions to constructed curves vanish identically). Each returned
// tuple is the canonical representative of its class: reduced against the
// echelonized E-span, then re-echelonized. line_cofactor records the
// quotient (Sum_I g_I w^I) / f|_L, which is checked exactly. Empty when no
// syzygy class exists in degree d.
std::vector<SyzygyVector> restricted_syzygies(const Arrangement& arr, const GenericLine& line, int k, int d);

// Divides out the common binary gcd of the components; the degree drop is
// visible as the difference of the d fields. Identity on reduced inputs.
// line_cofactor is not carried through the division and is left zero.
SyzygyVector reduce_syzygy(const SyzygyVector& s);

// R = Sum_I candidate[I] (grad f)^I; true with cofactor g = -R/L when L
// divides R (including R = 0). Throws math_error on degree mismatch.
std::pair<bool, Poly3> verify_global_syzygy(const Arrangement& arr, const GenericLine& line, int k,
                                            const std::vector<Poly3>& candidate);

// Cofactor h with Sum_I candidate[I] (grad f)^I = h * f, when f divides the
// sum (h = 0 for an exact syzygy of J^k). nullopt otherwise. This identifies
// tuples that are syzygies modulo f, e.g. images of derivation generators.
std::optional<Poly3> syzygy_mod_f_cofactor(const Arrangement& arr, int k, const std::vector<Poly3>& candidate);

// Ternary form of degree deg(b) restricting to the binary form b on L, built
// from linear forms u0, u1 with u0|_L = l, u1|_L = m.
Poly3 lift_restricted(const GenericLine& line, const Poly2& b);

/// Parameter on L at which the evaluated tuple G(Q) is proportional to the
/// Veronese tuple of Q, so the linear system for the curve value at Q is not
/// determined. Certified to lie on the arrangement.
struct NonDeterminedPoint {
    size_t line_index;  // index into the arrangement
    Cyclo l0, m0;       // parameter, point is l0*p0 + m0*p1
    ProjPoint point;
    Poly3 dual_line;  // the line L_{Q} in the curve plane
};

// Requires s reduced. Finds the common roots of the 2x2 minors of
// (G, Veronese) via binary gcd and certifies each lies on A cap L; throws
// math_error when a root does not (residual factor of positive degree).
std::vector<NonDeterminedPoint> non_determined_points(const SyzygyVector& s, const Arrangement& arr,
                                                      const GenericLine& line);

// All C(k+1,2) derivation generators, indexed by the degree-(k-1)
// multi-indices in canonical order.
std::vector<DerGenerator> e_generators(int k);

// Canonical representative of a tuple of degree-d binary forms modulo the
// span on L of the derivation generators E_j with degree-(d-1) coefficients.
// Tuples in the same class reduce to the same representative.
std::vector<Poly2> e_reduce(const GenericLine& line, int k, int d, const std::vector<Poly2>& tuple);

// Checks Sum_m x_m f_{x_m} (grad f)^{I'} = deg(f) * f * (grad f)^{I'}.
bool phi_e_identity(const Arrangement& arr, const DerGenerator& gen);

// Multinomial coefficient k! / (i1! i2! i3!) for |I| = k.
long multinomial(const Expo<3>& e);

// Veronese tuple of the parameterized point Q(l,m) = l*p0 + m*p1: the
// coefficient of x^I in (Q_x x + Q_y y + Q_z z)^k, a binary form of degree k.
std::vector<Poly2> veronese_tuple(const GenericLine& line, int k);

}  // namespace syz
