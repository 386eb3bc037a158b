#pragma once

#include "syzcurve/fatpoint.hpp"

namespace syz {

/// Splitting type a_1 <= ... <= a_{k+1} of the restricted syzygy bundle,
/// together with its (epsilon, t) decomposition: a + eps_i occurs t_i times,
/// eps_0 = 0 < eps_1 < ... < eps_s.
struct SplittingType {
    int k = 0;
    std::vector<int> exponents;  // sorted, length k+1
    int base = 0;                // a = a_1
    std::vector<int> eps;        // eps_0 .. eps_s
    std::vector<int> mult;       // t_0 .. t_s, sums to k+1
    bool chern_consistent = false;

    // Sum max(0, j - a_i + 1): the dimension the splitting type predicts.
    int predicted_dimension(int j) const;
};

// Fills base/eps/mult from the exponents.
void epsilon_decomposition(SplittingType& st);

// Chern-sum identity sum a_i = |Z| - k(k+1)/2.
bool chern_sum_check(const SplittingType& st, int size_z);

// Builds the splitting type from a converged dimension table; checks the
// round trip against every computed entry and the Chern sum.
SplittingType splitting_from_table(const DimTable& table, int size_z);

// Recover the splitting type from fat-point dimensions at generic points.
// Throws math_error when the table does not converge (e.g. outside the
// validity range k(k+1)/2 < |Z|) and genericity_error on sample disagreement.
SplittingType splitting_type(const PointConfig& z, int k, uint64_t seed, int samples);

// Validity range of the recovery: C(k+1,2) < |Z|.
inline bool in_validity_range(int k, int size_z) { return (long)k * (k + 1) / 2 < (long)size_z; }

}  // namespace syz
