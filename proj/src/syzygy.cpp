#include "syzcurve/syzygy.hpp"

#include "syzcurve/errors.hpp"
#include "syzcurve/linalg.hpp"

namespace syz {

namespace {

// Powers of the restricted partials, w^I for every |I| = k.
std::vector<Poly2> restricted_partial_powers(const Arrangement& arr, const GenericLine& line, int k) {
    std::array<Poly2, 3> w;
    for (int v = 0; v < 3; ++v) w[v] = restrict_to_line(arr.jacobian[v], line.p0, line.p1);
    std::array<std::vector<Poly2>, 3> pows;
    for (int v = 0; v < 3; ++v) {
        pows[v].push_back(Poly2::constant(Cyclo(1)));
        for (int e = 1; e <= k; ++e) pows[v].push_back(pows[v].back() * w[v]);
    }
    std::vector<Poly2> out;
    for (const Expo<3>& I : monomial_exponents<3>(k)) out.push_back(pows[0][I[0]] * pows[1][I[1]] * pows[2][I[2]]);
    return out;
}

Poly2 components_gcd(const std::vector<Poly2>& comps) {
    Poly2 g;
    for (const Poly2& c : comps) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.normalized() : binary_gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

// Coefficient layout for a tuple of degree-d binary forms: the coefficient of
// l^{d-j} m^j in component a sits at a*(d+1) + j.
std::vector<Poly2> unpack_tuple(const std::vector<Cyclo>& v, int n_idx, int d) {
    std::vector<Poly2> out;
    for (int a = 0; a < n_idx; ++a) {
        Poly2 g;
        for (int j = 0; j <= d; ++j) {
            if (!v[(size_t)a * (d + 1) + j].is_zero()) g += Poly2::monomial({d - j, j}, v[(size_t)a * (d + 1) + j]);
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Cyclo> pack_tuple(const std::vector<Poly2>& tuple, int d) {
    std::vector<Cyclo> v(tuple.size() * (d + 1));
    for (size_t a = 0; a < tuple.size(); ++a) {
        for (const auto& [e, c] : tuple[a].terms()) v[a * (d + 1) + e[1]] = c;
    }
    return v;
}

// Echelonized span on L of the derivation generators with degree-(d-1)
// coefficients, in the coefficient space of degree-d tuples over the |I| = k
// multi-indices. The generator indexed by I' has the restricted coordinate
// q_m = p0[m] l + p1[m] m at component I' + e_m.
std::vector<std::vector<Cyclo>> e_span_echelon(const GenericLine& line, int k, int d) {
    auto indices = monomial_exponents<3>(k);
    auto lower = monomial_exponents<3>(k - 1);
    int n_idx = (int)indices.size();
    if (d < 1) return {};
    Matrix m((int)lower.size() * d, n_idx * (d + 1));
    int row = 0;
    for (const Expo<3>& ip : lower) {
        for (int t = 0; t < d; ++t, ++row) {
            for (int v = 0; v < 3; ++v) {
                Expo<3> full = ip;
                full[v] += 1;
                for (int a = 0; a < n_idx; ++a) {
                    if (indices[a] != full) continue;
                    // s = l^{d-1-t} m^t times q_v.
                    m.at(row, a * (d + 1) + t) += line.p0[v];
                    m.at(row, a * (d + 1) + t + 1) += line.p1[v];
                }
            }
        }
    }
    return reduced_row_basis(std::move(m));
}

void reduce_against(const std::vector<std::vector<Cyclo>>& echelon, std::vector<Cyclo>& v) {
    for (const auto& row : echelon) {
        size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        if (p >= row.size() || v[p].is_zero()) continue;
        Cyclo f = v[p];
        for (size_t c = p; c < row.size(); ++c)
            if (!row[c].is_zero()) v[c] -= f * row[c];
    }
}

}  // namespace

std::vector<SyzygyVector> restricted_syzygies(const Arrangement& arr, const GenericLine& line, int k, int d) {
    if (k < 1 || d < 0) throw math_error("restricted_syzygies needs k >= 1, d >= 0");
    std::vector<Poly2> wpow = restricted_partial_powers(arr, line, k);
    int n_idx = (int)wpow.size();
    int g_cols = n_idx * (d + 1);
    Poly2 fr = restrict_to_line(arr.f, line.p0, line.p1);
    // The residual Sum_I g_I w^I must be divisible by f|_L, which is
    // squarefree with roots exactly at the intersection parameters of the
    // arrangement lines with L. Equivalently, one evaluation condition on
    // the g coefficients per arrangement line; the division is still checked
    // exactly on every returned element below.
    Matrix m((int)arr.size(), g_cols);
    for (size_t i = 0; i < arr.size(); ++i) {
        auto [l0, m0] = intersection_parameter(arr, line, i);
        ProjPoint q;
        for (int c = 0; c < 3; ++c) q[c] = l0 * line.p0[c] + m0 * line.p1[c];
        std::array<std::vector<Cyclo>, 3> wp;  // powers of the partial values
        for (int v = 0; v < 3; ++v) {
            wp[v].push_back(Cyclo(1));
            Cyclo val = evaluate_at_point(arr.jacobian[v], q);
            for (int e = 1; e <= k; ++e) wp[v].push_back(wp[v].back() * val);
        }
        std::vector<Cyclo> lp{Cyclo(1)}, mp{Cyclo(1)};
        for (int j = 1; j <= d; ++j) {
            lp.push_back(lp.back() * l0);
            mp.push_back(mp.back() * m0);
        }
        auto indices = monomial_exponents<3>(k);
        for (int a = 0; a < n_idx; ++a) {
            Cyclo wI = wp[0][indices[a][0]] * wp[1][indices[a][1]] * wp[2][indices[a][2]];
            for (int j = 0; j <= d; ++j) m.at((int)i, a * (d + 1) + j) = wI * lp[d - j] * mp[j];
        }
    }
    auto sections = kernel_basis(std::move(m));

    // Quotient by the echelonized span of the derivation generators, whose
    // contributions to constructed curves vanish identically.
    auto espan = e_span_echelon(line, k, d);
    Matrix qm((int)sections.size(), g_cols);
    for (int r = 0; r < (int)sections.size(); ++r) {
        reduce_against(espan, sections[r]);
        for (int c = 0; c < g_cols; ++c) qm.at(r, c) = sections[r][c];
    }
    auto classes = reduced_row_basis(std::move(qm));

    std::vector<SyzygyVector> out;
    for (const auto& vec : classes) {
        SyzygyVector s;
        s.k = k;
        s.d = d;
        s.restricted = unpack_tuple(vec, n_idx, d);
        Poly2 check;
        for (int a = 0; a < n_idx; ++a) check += s.restricted[a] * wpow[a];
        if (!check.is_zero()) {
            auto q = check.divide_exact(fr);
            if (!q) throw math_error("syzygy residual not divisible by the restricted arrangement form");
            s.line_cofactor = std::move(*q);
        }
        Poly2 g = components_gcd(s.restricted);
        s.reduced = g.degree() <= 0;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Poly2> e_reduce(const GenericLine& line, int k, int d, const std::vector<Poly2>& tuple) {
    auto indices = monomial_exponents<3>(k);
    if (tuple.size() != indices.size()) throw math_error("tuple has wrong number of components");
    for (const Poly2& g : tuple)
        if (!g.is_zero() && g.degree() != d) throw math_error("tuple component of wrong degree");
    std::vector<Cyclo> v = pack_tuple(tuple, d);
    reduce_against(e_span_echelon(line, k, d), v);
    return unpack_tuple(v, (int)indices.size(), d);
}

SyzygyVector reduce_syzygy(const SyzygyVector& s) {
    Poly2 g = components_gcd(s.restricted);
    if (g.degree() <= 0) {
        SyzygyVector r = s;
        r.reduced = true;
        return r;
    }
    SyzygyVector r;
    r.k = s.k;
    r.d = s.d - g.degree();
    r.reduced = true;
    for (const Poly2& c : s.restricted) {
        if (c.is_zero()) {
            r.restricted.push_back(c);
            continue;
        }
        auto q = c.divide_exact(g);
        if (!q) throw math_error("component gcd does not divide a component");
        r.restricted.push_back(*q);
    }
    return r;
}

std::pair<bool, Poly3> verify_global_syzygy(const Arrangement& arr, const GenericLine& line, int k,
                                            const std::vector<Poly3>& candidate) {
    auto indices = monomial_exponents<3>(k);
    if (candidate.size() != indices.size()) throw math_error("candidate has wrong number of components");
    int deg = -1;
    for (const Poly3& c : candidate) {
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) throw math_error("candidate component not homogeneous");
        if (deg >= 0 && c.degree() != deg) throw math_error("candidate components of unequal degree");
        deg = c.degree();
    }
    std::array<std::vector<Poly3>, 3> pows;
    for (int v = 0; v < 3; ++v) {
        pows[v].push_back(Poly3::constant(Cyclo(1)));
        for (int e = 1; e <= k; ++e) pows[v].push_back(pows[v].back() * arr.jacobian[v]);
    }
    Poly3 r;
    for (size_t a = 0; a < indices.size(); ++a) {
        if (candidate[a].is_zero()) continue;
        const Expo<3>& I = indices[a];
        r += candidate[a] * pows[0][I[0]] * pows[1][I[1]] * pows[2][I[2]];
    }
    if (r.is_zero()) return {true, Poly3()};
    auto q = r.divide_exact(dual_form(line.dual_point));
    if (!q) return {false, Poly3()};
    return {true, -*q};
}

std::optional<Poly3> syzygy_mod_f_cofactor(const Arrangement& arr, int k, const std::vector<Poly3>& candidate) {
    auto indices = monomial_exponents<3>(k);
    if (candidate.size() != indices.size()) throw math_error("candidate has wrong number of components");
    std::array<std::vector<Poly3>, 3> pows;
    for (int v = 0; v < 3; ++v) {
        pows[v].push_back(Poly3::constant(Cyclo(1)));
        for (int e = 1; e <= k; ++e) pows[v].push_back(pows[v].back() * arr.jacobian[v]);
    }
    Poly3 r;
    for (size_t a = 0; a < indices.size(); ++a) {
        if (candidate[a].is_zero()) continue;
        const Expo<3>& I = indices[a];
        r += candidate[a] * pows[0][I[0]] * pows[1][I[1]] * pows[2][I[2]];
    }
    if (r.is_zero()) return Poly3();
    return r.divide_exact(arr.f);
}

Poly3 lift_restricted(const GenericLine& line, const Poly2& b) {
    // u0, u1, u2: the dual basis rows of the matrix with rows p0, p1, v, so
    // that u0(l*p0 + m*p1) = l and u1(l*p0 + m*p1) = m.
    Matrix m(3, 6);
    const ProjPoint rows[3] = {line.p0, line.p1, line.dual_point};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) m.at(r, c) = rows[r][c];
        m.at(r, 3 + r) = Cyclo(1);
    }
    // Invert by solving: reduce [M | I]; M is invertible since v is not in
    // the span of p0, p1.
    for (int col = 0; col < 3; ++col) {
        int piv = -1;
        for (int r = col; r < 3; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw math_error("line frame not invertible");
        if (piv != col)
            for (int c = 0; c < 6; ++c) std::swap(m.at(piv, c), m.at(col, c));
        Cyclo inv = m.at(col, col).inv();
        for (int c = 0; c < 6; ++c) m.at(col, c) *= inv;
        for (int r = 0; r < 3; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            Cyclo factor = m.at(r, col);
            for (int c = 0; c < 6; ++c) m.at(r, c) -= factor * m.at(col, c);
        }
    }
    // Column j of the inverse gives u_j; u_j(x) = sum_i inv[i][j] x_i.
    std::array<Poly3, 2> u;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 3; ++i) u[j] += Poly3::variable(i).scaled(m.at(i, 3 + j));
    return b.substitute<3>({u[0], u[1]});
}

std::vector<NonDeterminedPoint> non_determined_points(const SyzygyVector& s, const Arrangement& arr,
                                                      const GenericLine& line) {
    if (!s.reduced) throw math_error("non_determined_points needs a reduced syzygy");
    std::vector<Poly2> ver = veronese_tuple(line, s.k);
    size_t n = s.restricted.size();
    if (ver.size() != n) throw math_error("component count mismatch");
    Poly2 g;
    bool any_nonzero_minor = false;
    for (size_t a = 0; a < n && (!any_nonzero_minor || g.degree() > 0); ++a) {
        for (size_t b = a + 1; b < n; ++b) {
            Poly2 minor = s.restricted[a] * ver[b] - s.restricted[b] * ver[a];
            if (minor.is_zero()) continue;
            any_nonzero_minor = true;
            g = g.is_zero() ? minor.normalized() : binary_gcd(g, minor);
            if (g.degree() == 0) break;
        }
    }
    if (!any_nonzero_minor) throw math_error("tuple globally proportional to the Veronese tuple");
    std::vector<NonDeterminedPoint> out;
    if (g.degree() <= 0) return out;
    for (size_t i = 0; i < arr.size(); ++i) {
        auto [l0, m0] = intersection_parameter(arr, line, i);
        // Linear factor vanishing at (l0 : m0).
        Poly2 lin = Poly2::monomial({1, 0}, m0) - Poly2::monomial({0, 1}, l0);
        bool root = false;
        while (true) {
            auto q = g.divide_exact(lin);
            if (!q) break;
            root = true;
            g = *q;
        }
        if (!root) continue;
        NonDeterminedPoint p;
        p.line_index = i;
        p.l0 = l0;
        p.m0 = m0;
        for (int c = 0; c < 3; ++c) p.point[c] = l0 * line.p0[c] + m0 * line.p1[c];
        p.point = normalize_point(p.point);
        if (!evaluate_at_point(arr.f, p.point).is_zero())
            throw math_error("non-determined point fails f(Q) = 0 certification");
        p.dual_line = dual_form(p.point);
        out.push_back(std::move(p));
        if (g.degree() == 0) break;
    }
    if (g.degree() > 0)
        throw math_error("minor gcd has roots off the arrangement; line may be non-generic");
    return out;
}

std::vector<DerGenerator> e_generators(int k) {
    if (k < 1) throw math_error("e_generators needs k >= 1");
    auto indices = monomial_exponents<3>(k);
    std::vector<DerGenerator> out;
    for (const Expo<3>& ip : monomial_exponents<3>(k - 1)) {
        DerGenerator gen;
        gen.k = k;
        gen.index = ip;
        gen.components.assign(indices.size(), Poly3());
        for (int m = 0; m < 3; ++m) {
            Expo<3> full = ip;
            full[m] += 1;
            for (size_t a = 0; a < indices.size(); ++a)
                if (indices[a] == full) gen.components[a] = Poly3::variable(m);
        }
        out.push_back(std::move(gen));
    }
    return out;
}

bool phi_e_identity(const Arrangement& arr, const DerGenerator& gen) {
    auto cof = syzygy_mod_f_cofactor(arr, gen.k, gen.components);
    if (!cof) return false;
    // Expect cofactor deg(f) * (grad f)^{I'}.
    Poly3 expect = Poly3::constant(Cyclo((long)arr.size()));
    for (int v = 0; v < 3; ++v) expect *= arr.jacobian[v].pow(gen.index[v]);
    return *cof == expect;
}

long multinomial(const Expo<3>& e) {
    long k = e[0] + e[1] + e[2];
    long r = 1, n = k;
    for (int v = 0; v < 3; ++v) {
        for (long i = 1; i <= e[v]; ++i) {
            r = r * n / i;
            --n;
        }
    }
    return r;
}

std::vector<Poly2> veronese_tuple(const GenericLine& line, int k) {
    std::array<Poly2, 3> q;
    for (int c = 0; c < 3; ++c)
        q[c] = Poly2::monomial({1, 0}, line.p0[c]) + Poly2::monomial({0, 1}, line.p1[c]);
    std::vector<Poly2> out;
    for (const Expo<3>& I : monomial_exponents<3>(k)) {
        Poly2 t = Poly2::constant(Cyclo(multinomial(I)));
        for (int c = 0; c < 3; ++c)
            if (I[c] > 0) t *= q[c].pow(I[c]);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace syz
