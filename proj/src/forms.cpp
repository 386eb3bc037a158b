#include "syzcurve/forms.hpp"

#include <algorithm>

namespace syz {

ProjPoint normalize_point(const ProjPoint& p) {
    for (int i = 0; i < 3; ++i) {
        if (!p[i].is_zero()) {
            Cyclo s = p[i].inv();
            return {p[0] * s, p[1] * s, p[2] * s};
        }
    }
    throw math_error("projective point with all coordinates zero");
}

bool point_is_zero(const ProjPoint& p) {
    return p[0].is_zero() && p[1].is_zero() && p[2].is_zero();
}

bool points_equal(const ProjPoint& a, const ProjPoint& b) {
    return normalize_point(a) == normalize_point(b);
}

Cyclo dot(const ProjPoint& a, const ProjPoint& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

ProjPoint cross(const ProjPoint& a, const ProjPoint& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Poly3 dual_form(const ProjPoint& p) {
    Poly3 f;
    for (int i = 0; i < 3; ++i) {
        Expo<3> e{};
        e[i] = 1;
        f += Poly3::monomial(e, p[i]);
    }
    return f;
}

Cyclo evaluate_at_point(const Poly3& p, const ProjPoint& pt) {
    ProjPoint q = normalize_point(pt);
    return p.evaluate({q[0], q[1], q[2]});
}

Poly2 restrict_to_line(const Poly3& p, const ProjPoint& p0, const ProjPoint& p1) {
    if (points_equal(p0, p1)) throw math_error("restriction line needs two distinct points");
    std::array<Poly2, 3> subst;
    for (int i = 0; i < 3; ++i) {
        subst[i] = Poly2::monomial({1, 0}, p0[i]) + Poly2::monomial({0, 1}, p1[i]);
    }
    return p.substitute<2>(subst);
}

int multiplicity_at(const Poly3& p, const ProjPoint& pt) {
    if (p.is_zero()) throw math_error("multiplicity of the zero form");
    // Move pt to the first basis vector; multiplicity is then the lowest
    // total degree in the other two coordinates.
    ProjPoint q = normalize_point(pt);
    std::array<ProjPoint, 3> basis;
    basis[0] = q;
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i) {
        for (int j = i + 1; j < 3 && !found; ++j) {
            ProjPoint ei{}, ej{};
            ei[i] = Cyclo(1);
            ej[j] = Cyclo(1);
            // determinant of (q, ei, ej) via triple product
            if (!dot(q, cross(ei, ej)).is_zero()) {
                basis[1] = ei;
                basis[2] = ej;
                found = true;
            }
        }
    }
    if (!found) throw math_error("degenerate point");
    std::array<Poly3, 3> subst;
    for (int i = 0; i < 3; ++i) {
        subst[i] = Poly3::monomial({1, 0, 0}, basis[0][i]) + Poly3::monomial({0, 1, 0}, basis[1][i]) +
                   Poly3::monomial({0, 0, 1}, basis[2][i]);
    }
    Poly3 shifted = p.substitute<3>(subst);
    int best = shifted.degree() + 1;
    for (const auto& [e, c] : shifted.terms()) best = std::min(best, e[1] + e[2]);
    return best;
}

namespace {

using UC = std::vector<Cyclo>;  // univariate over Q(zeta), coeff[i] * t^i

void trim(UC& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UC uc_mod(UC a, const UC& b) {
    trim(a);
    while (a.size() >= b.size()) {
        Cyclo q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

UC uc_gcd(UC a, UC b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UC r = uc_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Cyclo s = a.back().inv();
        for (Cyclo& c : a) c *= s;
    }
    return a;
}

}  // namespace

Poly2 binary_gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) throw math_error("gcd of zero binary form");
    auto split = [](const Poly2& p, int& l_min, int& m_min, UC& deh) {
        l_min = p.degree();
        m_min = p.degree();
        for (const auto& [e, c] : p.terms()) {
            l_min = std::min(l_min, e[0]);
            m_min = std::min(m_min, e[1]);
        }
        // strip the monomial content, then dehomogenize in the second variable
        deh.assign(p.degree() - l_min - m_min + 1, Cyclo());
        for (const auto& [e, c] : p.terms()) deh[e[0] - l_min] = c;
    };
    int al, am, bl, bm;
    UC ad, bd;
    split(a, al, am, ad);
    split(b, bl, bm, bd);
    UC g = uc_gcd(ad, bd);
    int gl = std::min(al, bl), gm = std::min(am, bm);
    Poly2 result;
    int gdeg = (int)g.size() - 1;
    for (int i = 0; i <= gdeg; ++i) {
        if (g[i].is_zero()) continue;
        result += Poly2::monomial({i + gl, gdeg - i + gm}, g[i]);
    }
    return result;
}

}  // namespace syz
