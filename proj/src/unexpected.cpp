#include "syzcurve/unexpected.hpp"

#include <algorithm>

#include "syzcurve/errors.hpp"

namespace syz {

int expected_dimension(const PointConfig& z, int d, int k) {
    if (d < 1 || k < 1) throw math_error("expected_dimension needs d, k >= 1");
    return std::max(0, ideal_dimension(z, d + k) - (int)binom(d + 1, 2));
}

UnexpectednessVerdict is_unexpected_direct(const PointConfig& z, int d, int k, uint64_t seed, int samples) {
    if (samples < 2) throw math_error("need at least 2 samples for the genericity certificate");
    UnexpectednessVerdict v;
    v.d = d;
    v.k = k;
    v.expected_dim = expected_dimension(z, d, k);
    Rng rng(seed);
    int value = -1;
    for (int s = 0; s < samples; ++s) {
        ProjPoint p = random_point(rng, 100);
        int dim = fatpoint_dimension(z, p, d, d + k);
        if (s == 0)
            value = dim;
        else if (dim != value)
            throw genericity_error("generic points disagree on dim [I_{Z+dP}]; retry with a different seed");
    }
    v.actual_dim = value;
    v.independent = imposes_independent(z, d + k);
    v.verdict_direct = v.actual_dim > v.expected_dim;
    v.starred = v.verdict_direct && !v.independent;
    return v;
}

bool criterion_simple(const SplittingType& st, int i) {
    if (i < 0 || i >= (int)st.exponents.size()) throw math_error("exponent index out of range");
    long sum = 0;
    for (int a : st.exponents) sum += a;
    return (long)(st.exponents[i] + 1) * (st.k + 1) <= sum;
}

bool criterion_epsilon(const SplittingType& st, int j) {
    if (j < 0 || j >= (int)st.eps.size()) throw math_error("gap index out of range");
    long sum = 0;
    for (int i = j + 1; i < (int)st.eps.size(); ++i) sum += (long)st.mult[i] * (st.eps[i] - st.eps[j] - 1);
    return sum > 0;
}

UnexpectednessVerdict analyze(const PointConfig& z, const SplittingType& st, int d, int k, uint64_t seed,
                              int samples) {
    UnexpectednessVerdict v = is_unexpected_direct(z, d, k, seed, samples);
    for (int i = 0; i < (int)st.exponents.size(); ++i) {
        if (st.exponents[i] == d) {
            v.verdict_simple = criterion_simple(st, i);
            break;
        }
    }
    for (int j = 0; j < (int)st.eps.size(); ++j) {
        if (st.base + st.eps[j] == d) {
            v.verdict_epsilon = criterion_epsilon(st, j);
            break;
        }
    }
    // The criteria assume independence; under it they must agree with the
    // direct count.
    if (v.independent && v.verdict_epsilon && *v.verdict_epsilon != v.verdict_direct)
        throw math_error("epsilon criterion disagrees with the direct count under independence");
    return v;
}

std::vector<UnexpectedType> unexpected_types(const PointConfig& z, const SplittingType& st, uint64_t seed,
                                             int samples) {
    (void)seed;
    (void)samples;
    std::vector<UnexpectedType> out;
    for (int j = 0; j < (int)st.eps.size(); ++j) {
        if (!criterion_epsilon(st, j)) continue;
        UnexpectedType t;
        t.d = st.base + st.eps[j];
        t.degree = t.d + st.k;
        if (t.d < 1) continue;
        // Star marks the types whose conditions are dependent in degree d+k;
        // there the criterion's hypothesis fails and only the direct count
        // decides actual unexpectedness.
        t.starred = !imposes_independent(z, t.degree);
        out.push_back(t);
    }
    return out;
}

}  // namespace syz
