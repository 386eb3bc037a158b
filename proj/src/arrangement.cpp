#include "syzcurve/arrangement.hpp"

#include <json.hpp>

#include "syzcurve/errors.hpp"
#include "syzcurve/parse.hpp"
#include "syzcurve/random.hpp"

namespace syz {

Arrangement build_arrangement(const PointConfig& z) {
    if (z.points.empty()) throw math_error("empty point configuration");
    Arrangement arr;
    arr.config.order = z.order;
    for (const ProjPoint& p : z.points) arr.config.points.push_back(normalize_point(p));
    for (size_t i = 0; i < arr.config.points.size(); ++i) {
        for (size_t j = i + 1; j < arr.config.points.size(); ++j) {
            if (arr.config.points[i] == arr.config.points[j])
                throw math_error("duplicate point in configuration at indices " + std::to_string(i) + "," +
                                 std::to_string(j));
        }
    }
    arr.f = Poly3::constant(Cyclo(1));
    for (const ProjPoint& p : arr.config.points) {
        arr.linear_forms.push_back(dual_form(p));
        arr.f *= arr.linear_forms.back();
    }
    for (int v = 0; v < 3; ++v) arr.jacobian[v] = arr.f.differentiate(v);
    // Euler identity x f_x + y f_y + z f_z = |Z| f
    Poly3 euler;
    for (int v = 0; v < 3; ++v) euler += Poly3::variable(v) * arr.jacobian[v];
    if (euler != arr.f.scaled(Cyclo((long)arr.size()))) throw math_error("Euler identity failed");
    return arr;
}

PointConfig b3() {
    PointConfig z;
    z.order = 1;
    auto pt = [](long a, long b, long c) { return ProjPoint{Cyclo(a), Cyclo(b), Cyclo(c)}; };
    z.points = {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 0), pt(1, -1, 0),
                pt(1, 0, 1), pt(1, 0, -1), pt(0, 1, 1), pt(0, 1, -1)};
    return z;
}

PointConfig fermat_dual(int n) {
    if (n < 3) throw math_error("fermat_dual needs n >= 3");
    PointConfig z;
    z.order = n;
    z.points.push_back({Cyclo(1), Cyclo(0), Cyclo(0)});
    z.points.push_back({Cyclo(0), Cyclo(1), Cyclo(0)});
    z.points.push_back({Cyclo(0), Cyclo(0), Cyclo(1)});
    Cyclo e = Cyclo::zeta(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            z.points.push_back({Cyclo(1), e.pow(i), e.pow(j)});
        }
    }
    return z;
}

namespace {

GenericLine line_from_point_unchecked(const ProjPoint& dual) {
    GenericLine line;
    line.dual_point = normalize_point(dual);
    const ProjPoint& v = line.dual_point;
    // Two independent points spanning the plane orthogonal to v.
    bool have_p0 = false;
    for (int i = 0; i < 3 && !have_p0; ++i) {
        ProjPoint ei{};
        ei[i] = Cyclo(1);
        ProjPoint c = cross(v, ei);
        if (!point_is_zero(c) && !point_is_zero(cross(v, c))) {
            line.p0 = normalize_point(c);
            line.p1 = normalize_point(cross(v, c));
            have_p0 = true;
        }
    }
    if (!have_p0) throw math_error("could not span the line (isotropic dual point)");

    // Solve (v x (x,y,z)) = lambda*p0 + mu*p1 coordinatewise.
    std::array<Poly3, 3> q;  // components of the cross product, linear forms
    q[0] = Poly3::monomial({0, 0, 1}, v[1]) - Poly3::monomial({0, 1, 0}, v[2]);
    q[1] = Poly3::monomial({1, 0, 0}, v[2]) - Poly3::monomial({0, 0, 1}, v[0]);
    q[2] = Poly3::monomial({0, 1, 0}, v[0]) - Poly3::monomial({1, 0, 0}, v[1]);
    int m1 = -1, m2 = -1;
    Cyclo det;
    for (int i = 0; i < 3 && m1 < 0; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Cyclo d = line.p0[i] * line.p1[j] - line.p0[j] * line.p1[i];
            if (!d.is_zero()) {
                m1 = i;
                m2 = j;
                det = d;
                break;
            }
        }
    }
    Cyclo det_inv = det.inv();
    line.lambda = (q[m1].scaled(line.p1[m2]) - q[m2].scaled(line.p1[m1])).scaled(det_inv);
    line.mu = (q[m2].scaled(line.p0[m1]) - q[m1].scaled(line.p0[m2])).scaled(det_inv);
    for (int i = 0; i < 3; ++i) {
        Poly3 rebuilt = line.lambda.scaled(line.p0[i]) + line.mu.scaled(line.p1[i]);
        if (rebuilt != q[i]) throw math_error("lambda/mu decomposition failed");
    }
    return line;
}

bool line_is_generic(const Arrangement& arr, const ProjPoint& dual) {
    for (int i = 0; i < 3; ++i)
        if (dual[i].is_zero()) return false;
    // Avoid every crossing point of the arrangement, so that A meets L in
    // |Z| distinct smooth points.
    for (size_t i = 0; i < arr.size(); ++i) {
        for (size_t j = i + 1; j < arr.size(); ++j) {
            ProjPoint crossing = cross(arr.config.points[i], arr.config.points[j]);
            if (!dot(dual, crossing).is_zero()) continue;
            return false;
        }
    }
    return true;
}

}  // namespace

GenericLine make_generic_line(const Arrangement& arr, uint64_t seed, int bound) {
    if (bound < 2) throw math_error("sampling bound must be at least 2");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ProjPoint dual{Cyclo(random_rational(rng, bound)), Cyclo(random_rational(rng, bound)),
                       Cyclo(random_rational(rng, bound))};
        if (!line_is_generic(arr, dual)) continue;
        return line_from_point_unchecked(dual);
    }
    throw genericity_error("no generic line found after 1000 samples; increase the bound");
}

GenericLine line_from_dual_point(const Arrangement& arr, const ProjPoint& dual) {
    if (!line_is_generic(arr, dual))
        throw genericity_error("supplied line fails the genericity filter for this arrangement");
    return line_from_point_unchecked(dual);
}

std::pair<Cyclo, Cyclo> intersection_parameter(const Arrangement& arr, const GenericLine& line, size_t i) {
    const ProjPoint& v = arr.config.points[i];  // coefficients of ell_i
    Cyclo l0 = dot(v, line.p1);
    Cyclo m0 = -dot(v, line.p0);
    if (l0.is_zero() && m0.is_zero()) throw math_error("line of the arrangement coincides with L");
    // Canonical representative of the parameter.
    Cyclo s = (l0.is_zero() ? m0 : l0).inv();
    return {l0 * s, m0 * s};
}

PointConfig config_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    PointConfig z;
    z.order = j.value("order", 1);
    if (z.order < 1) throw math_error("order must be positive");
    for (const auto& pt : j.at("points")) {
        if (pt.size() != 3) throw math_error("points must have 3 coordinates");
        ProjPoint p;
        for (int i = 0; i < 3; ++i) p[i] = parse_scalar(pt[i].get<std::string>(), z.order);
        z.points.push_back(p);
    }
    return z;
}

}  // namespace syz
