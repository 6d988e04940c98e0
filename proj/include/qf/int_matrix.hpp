#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "qf/common.hpp"

namespace qf {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over Z with exact (unbounded) entries. Row-major storage;
/// matrices act on column vectors.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        require(rows >= 0 && cols >= 0, "ShapeMismatch", "negative matrix dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const Int& v : a_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        require(cols_ == o.rows_, "ShapeMismatch", "matrix product dimension mismatch");
        IntMatrix p(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j) p.at(i, j) += v * o.at(k, j);
            }
        return p;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        require(static_cast<int>(v.size()) == cols_, "ShapeMismatch", "matrix-vector dimension mismatch");
        std::vector<Int> out(rows_, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0) out[i] += at(i, j) * v[j];
        return out;
    }

    /// Exact determinant (Bareiss fraction-free elimination). Square only.
    Int determinant() const {
        require(rows_ == cols_, "ShapeMismatch", "determinant of non-square matrix");
        int n = rows_;
        if (n == 0) return 1;
        IntMatrix m = *this;
        Int sign = 1, prev = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (m.at(k, k) == 0) {
                int p = -1;
                for (int i = k + 1; i < n; ++i)
                    if (m.at(i, k) != 0) { p = i; break; }
                if (p < 0) return 0;
                for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            prev = m.at(k, k);
        }
        return sign * m.at(n - 1, n - 1);
    }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

} // namespace qf
