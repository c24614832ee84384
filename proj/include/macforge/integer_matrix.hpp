#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "errors.hpp"

namespace macforge {

using Int = boost::multiprecision::cpp_int;

/// Dense row-major matrix over Z with arbitrary-precision entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;

    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw validation_error("negative matrix dimension");
        data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    }

    static IntegerMatrix identity(int n) {
        IntegerMatrix out(n, n);
        for (int i = 0; i < n; ++i) out.at(i, i) = 1;
        return out;
    }

    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
        IntegerMatrix out(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw validation_error("ragged row lengths");
            for (int j = 0; j < c; ++j)
                out.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return out;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }
    const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }

    bool is_zero() const {
        for (const Int& x : data_)
            if (x != 0) return false;
        return true;
    }

    IntegerMatrix transpose() const {
        IntegerMatrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    IntegerMatrix multiply(const IntegerMatrix& other) const {
        if (cols_ != other.rows_) throw validation_error("matrix shape mismatch in multiply");
        IntegerMatrix out(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < other.cols_; ++j) {
                    const Int& b = other.at(k, j);
                    if (b != 0) out.at(i, j) += a * b;
                }
            }
        return out;
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }
    /// row[a] += q * row[b]
    void add_row_multiple(int a, int b, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < cols_; ++j) at(a, j) += q * at(b, j);
    }
    /// col[a] += q * col[b]
    void add_col_multiple(int a, int b, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < rows_; ++i) at(i, a) += q * at(i, b);
    }
    void negate_row(int a) {
        for (int j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i < rows_; ++i) {
            out += "[";
            for (int j = 0; j < cols_; ++j) {
                if (j) out += " ";
                out += at(i, j).str();
            }
            out += "]\n";
        }
        return out;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// Rank over Q of an integer matrix, by fraction-free (Bareiss) elimination.
/// Exact for any input; used where only the rank is needed.
inline int rational_rank(IntegerMatrix a) {
    const int rows = a.rows(), cols = a.cols();
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        a.swap_rows(rank, pivot);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a.at(i, j) = (a.at(rank, col) * a.at(i, j) - a.at(i, col) * a.at(rank, j)) / prev;
            a.at(i, col) = 0;
        }
        prev = a.at(rank, col);
        ++rank;
    }
    return rank;
}

}  // namespace macforge
