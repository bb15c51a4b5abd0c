#include "stressfree/matrix.hpp"

#include <stdexcept>

namespace sf {

std::vector<uint64_t> FieldMatrix::column(int c) const {
    std::vector<uint64_t> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

FieldMatrix transpose(const FieldMatrix& m) {
    FieldMatrix t(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
    return t;
}

int rank(FieldMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        uint64_t piv_inv = field::inv(m.at(r, c));
        for (int i = r + 1; i < m.rows(); ++i) {
            uint64_t f = m.at(i, c);
            if (f == 0) continue;
            f = field::mul(f, piv_inv);
            m.at(i, c) = 0;
            for (int j = c + 1; j < m.cols(); ++j)
                m.at(i, j) = field::sub(m.at(i, j), field::mul(f, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

int kernel_dimension(const FieldMatrix& m) { return m.cols() - rank(m); }

bool ColumnSpace::absorb(std::vector<uint64_t> v) {
    for (size_t k = 0; k < basis_.size(); ++k) {
        uint64_t f = v[pivots_[k]];
        if (f == 0) continue;
        const auto& b = basis_[k];
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = field::sub(v[i], field::mul(f, b[i]));
    }
    int pivot = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            pivot = static_cast<int>(i);
            break;
        }
    }
    if (pivot < 0) return false;
    uint64_t piv_inv = field::inv(v[pivot]);
    for (auto& x : v) x = field::mul(x, piv_inv);
    basis_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

std::vector<int> greedy_independent_columns(const FieldMatrix& m,
                                            const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != m.cols())
        throw std::invalid_argument("greedy_independent_columns: order must permute 0..cols-1");
    std::vector<char> seen(m.cols(), 0);
    for (int c : order) {
        if (c < 0 || c >= m.cols() || seen[c])
            throw std::invalid_argument("greedy_independent_columns: order must permute 0..cols-1");
        seen[c] = 1;
    }
    ColumnSpace space;
    std::vector<int> kept;
    for (int c : order)
        if (space.absorb(m.column(c))) kept.push_back(c);
    return kept;
}

}  // namespace sf
