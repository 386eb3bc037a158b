#include "syzcurve/curve.hpp"

#include "syzcurve/errors.hpp"
#include "syzcurve/linalg.hpp"

namespace syz {

Poly3 normalize_output(const Poly3& c) {
    if (c.is_zero()) return c;
    bool all_rational = true;
    for (const auto& [e, v] : c.terms())
        if (!v.is_rational()) {
            all_rational = false;
            break;
        }
    if (!all_rational) return c.normalized();
    // Scale to coprime integer coefficients with positive leading term.
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, v] : c.terms()) {
        Rat r = v.rational_value();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (c.leading_coeff().rational_value() < 0) scale = -scale;
    return c.scaled(Cyclo(scale));
}

CurveReport construct_curve(const SyzygyVector& s, const Arrangement& arr, const GenericLine& line) {
    SyzygyVector red = s.reduced ? s : reduce_syzygy(s);
    auto indices = monomial_exponents<3>(red.k);
    if (red.restricted.size() != indices.size()) throw math_error("syzygy has wrong number of components");
    std::array<Poly3, 2> lm = {line.lambda, line.mu};
    Poly3 c;
    for (size_t a = 0; a < indices.size(); ++a) {
        if (red.restricted[a].is_zero()) continue;
        c += red.restricted[a].substitute<3>({lm[0], lm[1]}) * Poly3::monomial(indices[a], Cyclo(1));
    }
    if (c.is_zero()) throw math_error("constructed curve vanishes identically (degenerate syzygy)");

    CurveReport report;
    report.curve = normalize_output(c);
    report.k = red.k;
    report.d = red.d;
    report.degree = report.curve.degree();
    report.degree_drop = s.d + s.k - report.degree;
    report.general_point = normalize_point(line.dual_point);
    report.mult_at_p = multiplicity_at(report.curve, report.general_point);
    for (const ProjPoint& z : arr.config.points)
        report.multiplicities_at_z.push_back(multiplicity_at(report.curve, z));
    report.non_determined = non_determined_points(red, arr, line);
    for (const NonDeterminedPoint& q : report.non_determined) report.line_components.push_back(q.dual_line);
    return report;
}

CurveReport verify_curve(const Poly3& c, const PointConfig& z, const ProjPoint& p, int d) {
    if (c.is_zero()) throw math_error("cannot verify the zero curve");
    CurveReport report;
    report.curve = normalize_output(c);
    report.d = d;
    report.k = report.curve.degree() - d;
    report.degree = report.curve.degree();
    report.general_point = normalize_point(p);
    report.mult_at_p = multiplicity_at(report.curve, report.general_point);
    for (const ProjPoint& pt : z.points) report.multiplicities_at_z.push_back(multiplicity_at(report.curve, pt));
    return report;
}

bool line_component_check(const CurveReport& report) {
    for (const Poly3& line : report.line_components)
        if (!divides(line, report.curve)) return false;
    return true;
}

std::vector<std::vector<Poly3>> exact_global_syzygies(const Arrangement& arr, int k, int d) {
    if (k < 1 || d < 0) throw math_error("exact_global_syzygies needs k >= 1, d >= 0");
    auto indices = monomial_exponents<3>(k);
    std::array<std::vector<Poly3>, 3> pows;
    for (int v = 0; v < 3; ++v) {
        pows[v].push_back(Poly3::constant(Cyclo(1)));
        for (int e = 1; e <= k; ++e) pows[v].push_back(pows[v].back() * arr.jacobian[v]);
    }
    std::vector<Poly3> wpow;
    for (const Expo<3>& I : indices) wpow.push_back(pows[0][I[0]] * pows[1][I[1]] * pows[2][I[2]]);

    auto unknowns = monomial_exponents<3>(d);
    int prod_deg = d + k * ((int)arr.size() - 1);
    auto rows_monos = monomial_exponents<3>(prod_deg);
    std::map<Expo<3>, int, GrlexDesc<3>> row_of;
    for (size_t r = 0; r < rows_monos.size(); ++r) row_of[rows_monos[r]] = (int)r;

    Matrix m((int)rows_monos.size(), (int)(indices.size() * unknowns.size()));
    for (size_t a = 0; a < indices.size(); ++a) {
        for (const auto& [we, wc] : wpow[a].terms()) {
            for (size_t u = 0; u < unknowns.size(); ++u) {
                Expo<3> e;
                for (int i = 0; i < 3; ++i) e[i] = we[i] + unknowns[u][i];
                m.at(row_of.at(e), (int)(a * unknowns.size() + u)) += wc;
            }
        }
    }
    auto kernel = kernel_basis(std::move(m));
    std::vector<std::vector<Poly3>> out;
    for (const auto& vec : kernel) {
        std::vector<Poly3> tuple;
        for (size_t a = 0; a < indices.size(); ++a) {
            Poly3 g;
            for (size_t u = 0; u < unknowns.size(); ++u) {
                const Cyclo& cf = vec[a * unknowns.size() + u];
                if (!cf.is_zero()) g += Poly3::monomial(unknowns[u], cf);
            }
            tuple.push_back(std::move(g));
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

bool duality_check(const Arrangement& arr, int k, int d, const std::vector<Poly3>& global_tuple) {
    if ((int)arr.size() > 9 || k > 2) throw math_error("duality check restricted to deg f <= 9, k <= 2");
    auto indices = monomial_exponents<3>(k);
    if (global_tuple.size() != indices.size()) throw math_error("tuple has wrong number of components");

    // Variables 0..2 are x,y,z; 3..5 the symbolic dual point a,b,c.
    auto var6 = [](int i) { return Poly6::variable(i); };
    std::array<Poly6, 3> q;  // (a,b,c) x (x,y,z)
    q[0] = var6(4) * var6(2) - var6(5) * var6(1);
    q[1] = var6(5) * var6(0) - var6(3) * var6(2);
    q[2] = var6(3) * var6(1) - var6(4) * var6(0);
    Poly6 biform;
    for (size_t a = 0; a < indices.size(); ++a) {
        if (global_tuple[a].is_zero()) continue;
        Expo<6> xmono{};
        for (int i = 0; i < 3; ++i) xmono[i] = indices[a][i];
        biform += global_tuple[a].substitute<6>({q[0], q[1], q[2]}) * Poly6::monomial(xmono, Cyclo(1));
    }
    if (biform.is_zero()) throw math_error("symbolic curve vanishes identically");

    // Identify both triples: the substitution sends x,a -> u0; y,b -> u1;
    // z,c -> u2, turning the biform into a ternary polynomial.
    std::array<Poly3, 6> diag = {Poly3::variable(0), Poly3::variable(1), Poly3::variable(2),
                                 Poly3::variable(0), Poly3::variable(1), Poly3::variable(2)};

    std::optional<Cyclo> scalar;
    for (int order = 0; order <= d; ++order) {
        for (const Expo<3>& mi : monomial_exponents<3>(order)) {
            Poly6 dx = biform, da = biform;
            for (int v = 0; v < 3; ++v) {
                for (int r = 0; r < mi[v]; ++r) {
                    dx = dx.differentiate(v);
                    da = da.differentiate(v + 3);
                }
            }
            Poly3 lhs = dx.substitute<3>(diag);
            Poly3 rhs = da.substitute<3>(diag);
            if (lhs.is_zero() != rhs.is_zero()) return false;
            if (lhs.is_zero()) continue;
            if (!scalar) {
                if (!lhs.proportional_to(rhs)) return false;
                scalar = rhs.leading_coeff() / lhs.leading_coeff();
            }
            if (lhs.scaled(*scalar) != rhs) return false;
        }
    }
    return true;
}

}  // namespace syz
