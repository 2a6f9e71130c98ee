#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "trilie/matrix.hpp"

namespace trilie {

// Incremental Gauss-Jordan elimination. Rows are fed one at a time and the
// accumulated set is kept in reduced row-echelon form, so large constraint
// systems never need to be materialized as one matrix.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<Vector>& rows() const { return rows_; }

    // Reduces v against the current rows in place.
    void reduce(Vector& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& lead = v[pivots_[r]];
            if (sgn(lead) != 0) {
                Scalar s = -lead;
                axpy(v, s, rows_[r]);
            }
        }
    }

    // Returns true when the row increased the rank.
    bool add(Vector v) {
        if (v.size() != cols_) {
            throw DimensionMismatch("row length differs from reducer width");
        }
        reduce(v);
        auto it = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) != 0; });
        if (it == v.end()) {
            return false;
        }
        std::size_t p = static_cast<std::size_t>(it - v.begin());
        Scalar inv = 1 / v[p];
        for (auto& x : v) {
            if (sgn(x) != 0) {
                x *= inv;
            }
        }
        for (auto& row : rows_) {
            if (sgn(row[p]) != 0) {
                Scalar s = -row[p];
                axpy(row, s, v);
            }
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        auto idx = pos - pivots_.begin();
        pivots_.insert(pos, p);
        rows_.insert(rows_.begin() + idx, std::move(v));
        return true;
    }

    bool full() const { return rows_.size() == cols_; }

    // Rows as a rank x cols matrix.
    Matrix matrix() const { return Matrix::from_rows(cols_, rows_); }

private:
    std::size_t cols_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

struct RrefResult {
    Matrix matrix;                    // same shape as the input, zero rows last
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

inline RrefResult rref(const Matrix& m) {
    RowReducer red(m.cols());
    for (std::size_t r = 0; r < m.rows() && !red.full(); ++r) {
        red.add(m.row_vector(r));
    }
    RrefResult out{Matrix(m.rows(), m.cols()), red.pivots()};
    for (std::size_t r = 0; r < red.rank(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.matrix(r, c) = red.rows()[r][c];
        }
    }
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

// Basis of {x : R x = 0} read off a reduced system: one vector per free column.
inline std::vector<Vector> kernel_vectors(const RowReducer& red) {
    const std::size_t n = red.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : red.pivots()) {
        is_pivot[p] = true;
    }
    std::vector<Vector> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vector v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < red.rank(); ++r) {
            const Scalar& x = red.rows()[r][f];
            if (sgn(x) != 0) {
                v[red.pivots()[r]] = -x;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Particular solution of A x = b with all free variables set to zero, or
// nullopt when the system is inconsistent. `rows` are the rows of A and
// `rhs` the matching right-hand sides.
inline std::optional<Vector> solve_affine(std::size_t unknowns, const std::vector<Vector>& rows,
                                          const Vector& rhs) {
    if (rows.size() != rhs.size()) {
        throw DimensionMismatch("row and right-hand-side counts differ");
    }
    RowReducer red(unknowns + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != unknowns) {
            throw DimensionMismatch("equation width differs from unknown count");
        }
        Vector aug = rows[r];
        aug.push_back(rhs[r]);
        red.add(std::move(aug));
    }
    Vector x(unknowns);
    for (std::size_t r = 0; r < red.rank(); ++r) {
        std::size_t p = red.pivots()[r];
        if (p == unknowns) {
            return std::nullopt;
        }
        x[p] = red.rows()[r][unknowns];
    }
    return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.square()) {
        throw DimensionMismatch("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    RowReducer red(2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        Vector row(2 * n);
        for (std::size_t c = 0; c < n; ++c) {
            row[c] = m(r, c);
        }
        row[n + r] = 1;
        red.add(std::move(row));
    }
    // The identity block keeps the rank at n; singular input shows up as a
    // pivot inside the right half.
    if (n != 0 && red.pivots()[n - 1] >= n) {
        return std::nullopt;
    }
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = red.rows()[r][n + c];
        }
    }
    return inv;
}

} // namespace trilie
