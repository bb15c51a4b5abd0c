#pragma once

#include <cstdint>
#include <vector>

#include "stressfree/field.hpp"

namespace sf {

// Dense row-major matrix over the prime field.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint64_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    uint64_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<uint64_t> column(int c) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint64_t> a_;
};

FieldMatrix transpose(const FieldMatrix& m);

// Exact rank by Gaussian elimination, pivoting on the first nonzero entry of
// each column.
int rank(FieldMatrix m);

// cols - rank.
int kernel_dimension(const FieldMatrix& m);

// Scans columns in the given order (a permutation of 0..cols-1) and keeps a
// column iff it is independent of the columns kept before it. Returns kept
// indices in scan order.
std::vector<int> greedy_independent_columns(const FieldMatrix& m,
                                            const std::vector<int>& order);

// Incremental column-space basis used by the greedy scan; also handy for
// feeding columns that are produced on the fly instead of stored.
class ColumnSpace {
public:
    // True (and absorbs the column) iff v is independent of the span so far.
    bool absorb(std::vector<uint64_t> v);
    int dimension() const { return static_cast<int>(basis_.size()); }

private:
    std::vector<std::vector<uint64_t>> basis_;  // reduced, pivot normalized to 1
    std::vector<int> pivots_;
};

}  // namespace sf
