#include "syzcurve/linalg.hpp"

#include <utility>

namespace syz {

namespace {

// Row echelon reduction in place. Returns the pivot column of each pivot row.
// When full_reduce is set the result is the reduced echelon form with unit
// pivots, which makes kernel extraction deterministic.
std::vector<int> echelon(Matrix& m, bool full_reduce) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (!m.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != row) {
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(row, c));
        }
        Cyclo inv = m.at(row, col).inv();
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        int start = full_reduce ? 0 : row + 1;
        for (int r = start; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Cyclo f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) {
                if (m.at(row, c).is_zero()) continue;
                m.at(r, c) -= f * m.at(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(Matrix m) { return (int)echelon(m, false).size(); }

std::vector<std::vector<Cyclo>> kernel_basis(Matrix m) {
    std::vector<int> pivots = echelon(m, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Cyclo>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Cyclo> v(m.cols());
        v[free] = Cyclo(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at((int)r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Cyclo>> reduced_row_basis(Matrix m) {
    std::vector<int> pivots = echelon(m, true);
    std::vector<std::vector<Cyclo>> rows;
    for (int r = 0; r < (int)pivots.size(); ++r) {
        std::vector<Cyclo> v((size_t)m.cols());
        for (int c = 0; c < m.cols(); ++c) v[c] = m.at(r, c);
        rows.push_back(std::move(v));
    }
    return rows;
}

}  // namespace syz
