#pragma once

#include <vector>

#include "integer_matrix.hpp"

namespace macforge {

/// Diagonal of the Smith normal form: the nonzero invariant factors
/// d_1 | d_2 | ... | d_r, all positive.  rank == invariant_factors.size().
struct SmithResult {
    std::vector<Int> invariant_factors;
    int rank = 0;
};

namespace detail {

inline SmithResult smith_impl(IntegerMatrix a, IntegerMatrix* u_out, IntegerMatrix* v_out) {
    const int rows = a.rows(), cols = a.cols();
    const bool track = (u_out != nullptr) || (v_out != nullptr);
    IntegerMatrix u, v;
    if (track) {
        u = IntegerMatrix::identity(rows);
        v = IntegerMatrix::identity(cols);
    }

    // Invariant: a_current = u * a_original * v.
    auto row_swap = [&](int x, int y) {
        a.swap_rows(x, y);
        if (track) u.swap_rows(x, y);
    };
    auto col_swap = [&](int x, int y) {
        a.swap_cols(x, y);
        if (track) v.swap_cols(x, y);
    };
    auto row_add = [&](int x, int y, const Int& q) {
        a.add_row_multiple(x, y, q);
        if (track) u.add_row_multiple(x, y, q);
    };
    auto col_add = [&](int x, int y, const Int& q) {
        a.add_col_multiple(x, y, q);
        if (track) v.add_col_multiple(x, y, q);
    };
    auto row_negate = [&](int x) {
        a.negate_row(x);
        if (track) u.negate_row(x);
    };

    std::vector<Int> diag;
    int s = 0;
    while (s < rows && s < cols) {
        // Pick the submatrix entry of minimal absolute value as the pivot.
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = s; i < rows; ++i)
            for (int j = s; j < cols; ++j) {
                const Int& x = a.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (pi < 0 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // submatrix is zero
        row_swap(s, pi);
        col_swap(s, pj);
        if (a.at(s, s) < 0) row_negate(s);

        // Reduce the pivot row and column.  Any nonzero remainder is a
        // strictly smaller entry, so repicking the pivot terminates.
        bool leftover = false;
        for (int i = s + 1; i < rows; ++i) {
            const Int& x = a.at(i, s);
            if (x == 0) continue;
            row_add(i, s, -Int(x / a.at(s, s)));
            if (a.at(i, s) != 0) leftover = true;
        }
        for (int j = s + 1; j < cols; ++j) {
            const Int& x = a.at(s, j);
            if (x == 0) continue;
            col_add(j, s, -Int(x / a.at(s, s)));
            if (a.at(s, j) != 0) leftover = true;
        }
        if (leftover) continue;

        // Pivot is alone in its row and column; make it divide everything
        // that remains by folding an offending row into row s.
        const Int p = a.at(s, s);
        bool fixed = false;
        for (int i = s + 1; i < rows && !fixed; ++i)
            for (int j = s + 1; j < cols && !fixed; ++j)
                if (a.at(i, j) % p != 0) {
                    row_add(s, i, 1);
                    fixed = true;
                }
        if (fixed) continue;

        diag.push_back(p);
        ++s;
    }

    if (u_out) *u_out = std::move(u);
    if (v_out) *v_out = std::move(v);
    SmithResult out;
    out.rank = static_cast<int>(diag.size());
    out.invariant_factors = std::move(diag);
    return out;
}

}  // namespace detail

inline SmithResult smith_normal_form(IntegerMatrix a) {
    return detail::smith_impl(std::move(a), nullptr, nullptr);
}

/// Variant that also produces unimodular U, V with U * A * V in Smith form.
inline SmithResult smith_normal_form(IntegerMatrix a, IntegerMatrix& u, IntegerMatrix& v) {
    return detail::smith_impl(std::move(a), &u, &v);
}

}  // namespace macforge
