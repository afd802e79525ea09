#include "qtorus/lattice.hpp"

#include "qtorus/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace qtorus {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(ErrorCode::internal_inconsistency, "integer overflow in lattice reduction");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        fail(ErrorCode::internal_inconsistency, "integer overflow in lattice reduction");
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// row_i -= k * row_j
void axpy(IntVector& dst, const IntVector& src, std::int64_t k) {
    if (k == 0)
        return;
    for (std::size_t c = 0; c < dst.size(); ++c)
        if (src[c] != 0)
            dst[c] = checked_sub(dst[c], checked_mul(k, src[c]));
}

bool is_zero_row(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

} // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t ncols) {
    for (const auto& r : rows)
        if (r.size() != ncols)
            fail(ErrorCode::invalid_argument, "hermite_normal_form: ragged matrix");
    std::size_t prow = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < ncols && prow < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = prow; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
                    best = r;
            if (best == rows.size())
                break;
            std::swap(rows[prow], rows[best]);
            bool done = true;
            for (std::size_t r = prow + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0)
                    continue;
                axpy(rows[r], rows[prow], floor_div(rows[r][col], rows[prow][col]));
                if (rows[r][col] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (prow < rows.size() && rows[prow][col] != 0) {
            if (rows[prow][col] < 0)
                for (auto& x : rows[prow])
                    x = -x;
            for (std::size_t r = 0; r < prow; ++r)
                axpy(rows[r], rows[prow], floor_div(rows[r][col], rows[prow][col]));
            pivots.push_back(col);
            ++prow;
        }
    }
    rows.resize(prow);
    return rows;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols) {
    const std::size_t nrows = a.size();
    // Row-reduce [A^T | I]; rows whose A^T part vanishes span the kernel.
    IntMatrix aug(ncols, IntVector(nrows + ncols, 0));
    for (std::size_t c = 0; c < ncols; ++c) {
        for (std::size_t r = 0; r < nrows; ++r)
            aug[c][r] = a[r][c];
        aug[c][nrows + c] = 1;
    }
    IntMatrix h = hermite_normal_form(std::move(aug), nrows + ncols);
    IntMatrix kernel;
    for (const auto& row : h) {
        if (std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(nrows),
                        [](std::int64_t x) { return x == 0; }))
            kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(nrows), row.end());
    }
    return hermite_normal_form(std::move(kernel), ncols);
}

IntVector smith_diagonal(IntMatrix a, std::size_t ncols) {
    const std::size_t nrows = a.size();
    IntVector diag;
    std::size_t t = 0;
    while (t < nrows && t < ncols) {
        // Pivot: smallest nonzero entry in the trailing block.
        std::size_t pr = nrows, pc = ncols;
        for (std::size_t r = t; r < nrows; ++r)
            for (std::size_t c = t; c < ncols; ++c)
                if (a[r][c] != 0 && (pr == nrows || std::llabs(a[r][c]) < std::llabs(a[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr == nrows)
            break;
        std::swap(a[t], a[pr]);
        for (auto& row : a)
            std::swap(row[t], row[pc]);
        bool clean = true;
        for (std::size_t r = t + 1; r < nrows; ++r) {
            axpy(a[r], a[t], floor_div(a[r][t], a[t][t]));
            if (a[r][t] != 0)
                clean = false;
        }
        for (std::size_t c = t + 1; c < ncols; ++c) {
            const std::int64_t k = floor_div(a[t][c], a[t][t]);
            if (k != 0)
                for (std::size_t r = 0; r < nrows; ++r)
                    a[r][c] = checked_sub(a[r][c], checked_mul(k, a[r][t]));
            if (a[t][c] != 0)
                clean = false;
        }
        if (!clean)
            continue;
        // Divisibility: fold any trailing entry not divisible by the pivot into row t.
        bool divisible = true;
        for (std::size_t r = t + 1; r < nrows && divisible; ++r)
            for (std::size_t c = t + 1; c < ncols; ++c)
                if (a[r][c] % a[t][t] != 0) {
                    axpy(a[t], a[r], -1);
                    divisible = false;
                    break;
                }
        if (!divisible)
            continue;
        diag.push_back(std::llabs(a[t][t]));
        ++t;
    }
    return diag;
}

std::int64_t hnf_index(const IntMatrix& hnf) {
    std::int64_t det = 1;
    for (std::size_t i = 0; i < hnf.size(); ++i)
        det = checked_mul(det, hnf[i][i]);
    return det;
}

IntVector reduce_mod_hnf(IntVector v, const IntMatrix& hnf) {
    for (std::size_t i = 0; i < hnf.size(); ++i) {
        if (hnf[i][i] == 0)
            fail(ErrorCode::invalid_argument, "reduce_mod_hnf: lattice must have full rank");
        axpy(v, hnf[i], floor_div(v[i], hnf[i][i]));
    }
    return v;
}

bool in_lattice(const IntVector& v, const IntMatrix& hnf) {
    IntVector r = v;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.size() && row < hnf.size(); ++col) {
        if (hnf[row][col] == 0) {
            if (r[col] != 0)
                return false;
            continue;
        }
        if (r[col] % hnf[row][col] != 0)
            return false;
        axpy(r, hnf[row], r[col] / hnf[row][col]);
        ++row;
    }
    return is_zero_row(r);
}

} // namespace qtorus
