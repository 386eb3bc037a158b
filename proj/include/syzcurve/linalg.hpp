#pragma once

#include <vector>

#include "syzcurve/cyclo.hpp"

namespace syz {

/// Dense matrix over Q(zeta_n). Small sizes, exactness over speed.
class Matrix {
public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Cyclo& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
    const Cyclo& at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

private:
    int rows_, cols_;
    std::vector<Cyclo> a_;
};

int rank(Matrix m);

// Basis of the right null space in reduced echelon form: free columns are
// taken in increasing index order and each basis vector has a 1 in its free
// column and 0 in the other free columns.
std::vector<std::vector<Cyclo>> kernel_basis(Matrix m);

// Nonzero rows of the reduced echelon form: a deterministic basis of the row
// space, each row with a unit leading entry and zeros above its pivot.
std::vector<std::vector<Cyclo>> reduced_row_basis(Matrix m);

}  // namespace syz
