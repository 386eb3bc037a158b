#pragma once

#include <cstdint>
#include <vector>

#include "syzcurve/arrangement.hpp"
#include "syzcurve/linalg.hpp"
#include "syzcurve/random.hpp"

namespace syz {

/// dim[I_{Z+jP}]_{j+k} for j = 0, 1, ..., sampled at `samples` independent
/// generic points; an entry is recorded only when all samples agree.
struct DimTable {
    int k = 0;
    std::vector<int> entries;  // entries[j]
    bool converged = false;    // first difference reached k+1 within range
    int samples = 0;

    int delta(int j) const { return entries[j] - (j > 0 ? entries[j - 1] : 0); }
};

// dim [I_Z]_t = C(t+2,2) - rank of the evaluation matrix of Z on degree-t
// monomials.
int ideal_dimension(const PointConfig& z, int t);

// True iff the evaluation matrix has rank |Z|.
bool imposes_independent(const PointConfig& z, int t);

// dim [I_{Z+jP}]_t: evaluation rows for Z plus the C(j+1,2) rows of
// order-(j-1) partials at P (lower orders follow from the Euler relation).
int fatpoint_dimension(const PointConfig& z, const ProjPoint& p, int j, int t);

// Random generic point, deterministic in the rng state.
ProjPoint random_point(Rng& rng, int bound);

// Table of fatpoint_dimension(z, P, j, j+k) for successive j, stopping once
// the first difference reaches k+1 (the splitting type is then determined) or
// j exceeds |Z| + k. Throws genericity_error when samples disagree.
DimTable dim_table(const PointConfig& z, int k, uint64_t seed, int samples);

}  // namespace syz
