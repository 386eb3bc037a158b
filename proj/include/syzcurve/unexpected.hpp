#pragma once

#include "syzcurve/splitting.hpp"

namespace syz {

/// Verdict on whether Z admits an unexpected curve of type (d+k, d),
/// computed by direct dimension comparison and, when a splitting type is
/// available, by the two splitting criteria.
struct UnexpectednessVerdict {
    int d = 0, k = 0;
    int actual_dim = 0;
    int expected_dim = 0;
    bool independent = false;    // Z imposes independent conditions in degree d+k
    bool verdict_direct = false;  // actual_dim > expected_dim
    std::optional<bool> verdict_simple;
    std::optional<bool> verdict_epsilon;
    bool starred = false;  // unexpected with dependent conditions
};

// max(0, dim [I_Z]_{d+k} - C(d+1,2)).
int expected_dimension(const PointConfig& z, int d, int k);

// Direct route: actual_dim from fat-point interpolation at generic P with a
// resampling agreement certificate.
UnexpectednessVerdict is_unexpected_direct(const PointConfig& z, int d, int k, uint64_t seed, int samples);

// (a_i + 1)(k + 1) <= sum_j a_j, for the type with d = a_i. Index 0-based.
bool criterion_simple(const SplittingType& st, int i);

// 0 < sum_{i > j} t_i (eps_i - eps_j - 1), for the type with d = a + eps_j.
// Throws math_error when j is out of range.
bool criterion_epsilon(const SplittingType& st, int j);

// All three routes with reconciliation; fills verdict_simple/verdict_epsilon
// when d matches an exponent / a gap value of the splitting type.
UnexpectednessVerdict analyze(const PointConfig& z, const SplittingType& st, int d, int k, uint64_t seed,
                              int samples);

/// One entry of the unexpected-types column of a splitting table.
struct UnexpectedType {
    int degree = 0;  // d + k
    int d = 0;
    bool starred = false;
};

// The types the splitting type yields through the epsilon criterion: one
// entry per gap index with d >= 1 passing the inequality, starred when Z
// imposes dependent conditions in degree d+k (the criterion's independence
// hypothesis fails there, so the direct count is the arbiter).
std::vector<UnexpectedType> unexpected_types(const PointConfig& z, const SplittingType& st, uint64_t seed,
                                             int samples);

}  // namespace syz
