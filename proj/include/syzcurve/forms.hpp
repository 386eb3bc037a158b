#pragma once

#include <array>

#include "syzcurve/poly.hpp"

namespace syz {

// Point of P^2 with coordinates in Q(zeta_n).
using ProjPoint = std::array<Cyclo, 3>;

// Canonical representative: first nonzero coordinate scaled to 1.
ProjPoint normalize_point(const ProjPoint& p);
bool points_equal(const ProjPoint& a, const ProjPoint& b);
Cyclo dot(const ProjPoint& a, const ProjPoint& b);
ProjPoint cross(const ProjPoint& a, const ProjPoint& b);
bool point_is_zero(const ProjPoint& p);

// The linear form px + qy + rz dual to the point (p, q, r).
Poly3 dual_form(const ProjPoint& p);

Cyclo evaluate_at_point(const Poly3& p, const ProjPoint& pt);

// The binary form (l, m) -> p(l*p0 + m*p1); degree deg(p).
// Throws math_error when p0 and p1 coincide projectively.
Poly2 restrict_to_line(const Poly3& p, const ProjPoint& p0, const ProjPoint& p1);

// Largest m such that all partials of order < m vanish at pt; 0 iff p(pt) != 0.
// Throws math_error for the zero form.
int multiplicity_at(const Poly3& p, const ProjPoint& pt);

template <int N>
bool divides(const Poly<N>& divisor, const Poly<N>& p) {
    if (divisor.is_zero() || p.is_zero()) throw math_error("divisibility test needs nonzero forms");
    return p.divide_exact(divisor).has_value();
}

// Gcd of two binary forms (Euclid on the dehomogenization plus monomial
// content), normalized with leading coefficient 1.
Poly2 binary_gcd(const Poly2& a, const Poly2& b);

}  // namespace syz
