#include "syzcurve/splitting.hpp"

#include <algorithm>

#include "syzcurve/errors.hpp"

namespace syz {

int SplittingType::predicted_dimension(int j) const {
    int sum = 0;
    for (int a : exponents) sum += std::max(0, j - a + 1);
    return sum;
}

void epsilon_decomposition(SplittingType& st) {
    st.base = st.exponents.front();
    st.eps.clear();
    st.mult.clear();
    for (int a : st.exponents) {
        int e = a - st.base;
        if (st.eps.empty() || st.eps.back() != e) {
            st.eps.push_back(e);
            st.mult.push_back(1);
        } else {
            st.mult.back() += 1;
        }
    }
}

bool chern_sum_check(const SplittingType& st, int size_z) {
    long sum = 0;
    for (int a : st.exponents) sum += a;
    return sum == (long)size_z - (long)st.k * (st.k + 1) / 2;
}

SplittingType splitting_from_table(const DimTable& table, int size_z) {
    if (!table.converged)
        throw math_error("dimension table did not converge up to j = |Z| + k; splitting type not recovered");
    SplittingType st;
    st.k = table.k;
    int prev_delta = 0;
    for (int j = 0; j < (int)table.entries.size(); ++j) {
        int delta = table.delta(j);
        if (delta < prev_delta)
            throw math_error("dimension table first differences decreased at j=" + std::to_string(j));
        // delta(j) counts the exponents <= j, so each increment adds a_i = j.
        for (int r = 0; r < delta - prev_delta; ++r) st.exponents.push_back(j);
        prev_delta = delta;
    }
    if ((int)st.exponents.size() != st.k + 1)
        throw math_error("recovered " + std::to_string(st.exponents.size()) + " exponents, expected k+1");
    // Round trip: the recovered type must reproduce the whole table.
    for (int j = 0; j < (int)table.entries.size(); ++j) {
        if (st.predicted_dimension(j) != table.entries[j])
            throw math_error("splitting type does not reproduce the dimension table at j=" + std::to_string(j));
    }
    epsilon_decomposition(st);
    st.chern_consistent = chern_sum_check(st, size_z);
    return st;
}

SplittingType splitting_type(const PointConfig& z, int k, uint64_t seed, int samples) {
    if (k < 1) throw math_error("k must be at least 1");
    if (!in_validity_range(k, (int)z.size()))
        throw math_error("non-convergent: k(k+1)/2 >= |Z|, outside the validity range of the recovery");
    DimTable table = dim_table(z, k, seed, samples);
    return splitting_from_table(table, (int)z.size());
}

}  // namespace syz
