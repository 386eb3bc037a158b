#include "syzcurve/fatpoint.hpp"

#include "syzcurve/errors.hpp"

namespace syz {

namespace {

// Powers of the coordinates of a point, pows[i][e] = p[i]^e.
std::array<std::vector<Cyclo>, 3> coordinate_powers(const ProjPoint& p, int max_deg) {
    std::array<std::vector<Cyclo>, 3> pows;
    for (int i = 0; i < 3; ++i) {
        pows[i].resize(max_deg + 1);
        pows[i][0] = Cyclo(1);
        for (int e = 1; e <= max_deg; ++e) pows[i][e] = pows[i][e - 1] * p[i];
    }
    return pows;
}

void fill_evaluation_row(Matrix& m, int row, const ProjPoint& p, const std::vector<Expo<3>>& monomials) {
    auto pows = coordinate_powers(normalize_point(p), monomials.empty() ? 0 : expo_degree<3>(monomials[0]));
    for (size_t c = 0; c < monomials.size(); ++c) {
        const Expo<3>& e = monomials[c];
        m.at(row, (int)c) = pows[0][e[0]] * pows[1][e[1]] * pows[2][e[2]];
    }
}

}  // namespace

int ideal_dimension(const PointConfig& z, int t) {
    auto monomials = monomial_exponents<3>(t);
    Matrix m((int)z.size(), (int)monomials.size());
    for (size_t r = 0; r < z.size(); ++r) fill_evaluation_row(m, (int)r, z.points[r], monomials);
    return (int)monomials.size() - rank(std::move(m));
}

bool imposes_independent(const PointConfig& z, int t) {
    auto monomials = monomial_exponents<3>(t);
    Matrix m((int)z.size(), (int)monomials.size());
    for (size_t r = 0; r < z.size(); ++r) fill_evaluation_row(m, (int)r, z.points[r], monomials);
    return rank(std::move(m)) == (int)z.size();
}

int fatpoint_dimension(const PointConfig& z, const ProjPoint& p, int j, int t) {
    if (j < 0 || t < 0) throw math_error("negative degree in fat-point dimension");
    auto monomials = monomial_exponents<3>(t);
    auto derivs = j > 0 ? monomial_exponents<3>(j - 1) : std::vector<Expo<3>>{};
    Matrix m((int)z.size() + (int)derivs.size(), (int)monomials.size());
    for (size_t r = 0; r < z.size(); ++r) fill_evaluation_row(m, (int)r, z.points[r], monomials);
    ProjPoint q = normalize_point(p);
    auto pows = coordinate_powers(q, t);
    for (size_t dr = 0; dr < derivs.size(); ++dr) {
        const Expo<3>& d = derivs[dr];
        int row = (int)z.size() + (int)dr;
        for (size_t c = 0; c < monomials.size(); ++c) {
            const Expo<3>& e = monomials[c];
            bool ok = true;
            long factor = 1;
            for (int i = 0; i < 3 && ok; ++i) {
                if (e[i] < d[i]) {
                    ok = false;
                    break;
                }
                for (int v = e[i]; v > e[i] - d[i]; --v) factor *= v;
            }
            if (!ok) continue;
            Cyclo val(factor);
            for (int i = 0; i < 3; ++i) val *= pows[i][e[i] - d[i]];
            m.at(row, (int)c) = val;
        }
    }
    return (int)monomials.size() - rank(std::move(m));
}

ProjPoint random_point(Rng& rng, int bound) {
    return {Cyclo(random_rational(rng, bound)), Cyclo(random_rational(rng, bound)), Cyclo(1)};
}

DimTable dim_table(const PointConfig& z, int k, uint64_t seed, int samples) {
    if (samples < 2) throw math_error("need at least 2 samples for the genericity certificate");
    if (k < 0) throw math_error("negative k");
    Rng rng(seed);
    std::vector<ProjPoint> pts;
    for (int s = 0; s < samples; ++s) pts.push_back(random_point(rng, 100));

    DimTable table;
    table.k = k;
    table.samples = samples;
    int j_max = (int)z.size() + k;
    for (int j = 0; j <= j_max; ++j) {
        int value = fatpoint_dimension(z, pts[0], j, j + k);
        for (int s = 1; s < samples; ++s) {
            if (fatpoint_dimension(z, pts[s], j, j + k) != value)
                throw genericity_error("generic points disagree at j=" + std::to_string(j) +
                                       "; retry with a different seed");
        }
        table.entries.push_back(value);
        if (table.delta(j) == k + 1) {
            table.converged = true;
            break;
        }
    }
    return table;
}

}  // namespace syz
