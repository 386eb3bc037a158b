#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syzcurve/forms.hpp"

namespace syz {

/// Point set Z in the dual plane; coordinates live in Q(zeta_order).
struct PointConfig {
    int order = 1;
    std::vector<ProjPoint> points;

    size_t size() const { return points.size(); }
};

/// Dual line arrangement of a point configuration: the linear forms, their
/// product f and the Jacobian triple (f_x, f_y, f_z).
struct Arrangement {
    PointConfig config;
    std::vector<Poly3> linear_forms;
    Poly3 f;
    std::array<Poly3, 3> jacobian;

    size_t size() const { return config.size(); }
};

/// A line L in P^2 with dual point (alpha, beta, gamma), a chosen pair of
/// points spanning it, and the linear forms (lambda, mu) solving
/// (alpha,beta,gamma) x (x,y,z) = lambda*p0 + mu*p1. Both lambda and mu
/// vanish at the dual point, which is what forces the d-fold point there.
struct GenericLine {
    ProjPoint dual_point;
    ProjPoint p0, p1;
    Poly3 lambda, mu;
};

// Builds forms, product and Jacobian; checks the Euler identity
// x f_x + y f_y + z f_z = |Z| f exactly. Throws math_error on duplicates.
Arrangement build_arrangement(const PointConfig& z);

// The nine B3 dual points (all rational).
PointConfig b3();

// The n^2+3 points dual to the lines x, y, z, x + e^i y + e^j z over
// Q(zeta_n); requires n >= 3.
PointConfig fermat_dual(int n);

// Random rational line avoiding the crossing points of the arrangement and
// the coordinate triangle. Deterministic in the seed; throws genericity_error
// after 1000 rejections.
GenericLine make_generic_line(const Arrangement& arr, uint64_t seed, int bound);

// Line through a user-supplied dual point, validated with the same
// genericity filter.
GenericLine line_from_dual_point(const Arrangement& arr, const ProjPoint& dual);

// Parameter (l0 : m0) of the intersection of line index i of the arrangement
// with L, so that the point is l0*p0 + m0*p1.
std::pair<Cyclo, Cyclo> intersection_parameter(const Arrangement& arr, const GenericLine& line, size_t i);

// JSON ingestion: { "order": n, "points": [["1","e","e^2"], ...] }.
PointConfig config_from_json(const std::string& json_text);

}  // namespace syz
