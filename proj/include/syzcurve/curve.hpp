#pragma once

#include "syzcurve/syzygy.hpp"

namespace syz {

/// Constructed or verified curve with its full multiplicity profile.
struct CurveReport {
    Poly3 curve;  // normalized, integer-content-free
    int k = 0;
    int d = 0;            // degree of the (reduced) syzygy used
    int degree = 0;       // deg curve = d + k after reduction
    int degree_drop = 0;  // amount the gcd reduction lowered the degree
    ProjPoint general_point;
    int mult_at_p = 0;
    std::vector<int> multiplicities_at_z;  // aligned with the configuration
    std::vector<NonDeterminedPoint> non_determined;
    std::vector<Poly3> line_components;  // dual lines of the non-determined points
};

// C_L = Sum_I g_I|_L(lambda(x,y,z), mu(x,y,z)) * x^I, with all report fields
// computed directly. A non-reduced syzygy is replaced by its gcd-free
// quotient first; the resulting degree drop is recorded, never silent.
// Throws math_error when the assembled curve vanishes identically.
CurveReport construct_curve(const SyzygyVector& s, const Arrangement& arr, const GenericLine& line);

// Multiplicity profile of an externally supplied curve at Z and at P.
CurveReport verify_curve(const Poly3& c, const PointConfig& z, const ProjPoint& p, int d);

// True iff the dual line of every non-determined point divides the curve.
bool line_component_check(const CurveReport& report);

// Normalization used for golden comparisons: integer-content-free with
// positive leading coefficient in the rational case, else leading
// coefficient 1.
Poly3 normalize_output(const Poly3& c);

// Deterministic basis of exact degree-d syzygies of J^k: ternary tuples g_I
// with Sum_I g_I (grad f)^I = 0.
std::vector<std::vector<Poly3>> exact_global_syzygies(const Arrangement& arr, int k, int d);

// Runs the construction with the line's dual point as a symbolic triple
// (a, b, c), using a line-independent global tuple, and checks that every
// (x,y,z)-derivative of order <= d evaluated at (a,b,c) agrees with the
// corresponding (a,b,c)-derivative evaluated at (x,y,z), up to one global
// scalar. Throws math_error when deg f > 9 or k > 2.
bool duality_check(const Arrangement& arr, int k, int d, const std::vector<Poly3>& global_tuple);

}  // namespace syz
