#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "trilie/error.hpp"
#include "trilie/rational.hpp"

namespace trilie {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

inline bool is_zero(std::span<const Scalar> v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            return false;
        }
    }
    return true;
}

inline Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vector sizes differ");
    }
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

inline Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vector sizes differ");
    }
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
    }
    return r;
}

inline Vector scale(const Scalar& s, const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = s * a[i];
    }
    return r;
}

// r += s * a
inline void axpy(Vector& r, const Scalar& s, std::span<const Scalar> a) {
    if (sgn(s) == 0) {
        return;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0) {
            r[i] += s * a[i];
        }
    }
}

// Dense row-major matrix over Scalar.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    static Matrix diagonal(const Vector& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            m(i, i) = d[i];
        }
        return m;
    }

    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows) {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) {
                throw DimensionMismatch("row length differs from column count");
            }
            for (std::size_t c = 0; c < cols; ++c) {
                m(r, c) = rows[r][c];
            }
        }
        return m;
    }

    // Convenience for tests and fixtures: integer entries, row by row.
    static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
        std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
        Matrix m(rows.size(), cols);
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != cols) {
                throw DimensionMismatch("ragged integer matrix");
            }
            std::size_t c = 0;
            for (long x : row) {
                m(r, c++) = x;
            }
            ++r;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }

    Vector column(std::size_t c) const {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            v[r] = (*this)(r, c);
        }
        return v;
    }

    void set_column(std::size_t c, const Vector& v) {
        for (std::size_t r = 0; r < rows_; ++r) {
            (*this)(r, c) = v[r];
        }
    }

    // Row-major flattening; this is the coordinate vector of a map in F^(n*n).
    const std::vector<Scalar>& data() const { return data_; }

    static Matrix from_data(std::size_t rows, std::size_t cols, std::span<const Scalar> flat) {
        if (flat.size() != rows * cols) {
            throw DimensionMismatch("flat data length does not match shape");
        }
        Matrix m(rows, cols);
        std::copy(flat.begin(), flat.end(), m.data_.begin());
        return m;
    }

    bool is_zero() const { return trilie::is_zero(data_); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) {
            return;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += o.data_[i];
        }
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= o.data_[i];
        }
        return *this;
    }

    Matrix& operator*=(const Scalar& s) {
        for (auto& x : data_) {
            x *= s;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) {
            x = -x;
        }
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionMismatch("matrix product shape mismatch");
        }
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (sgn(aik) == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (sgn(b(k, j)) != 0) {
                        p(i, j) += aik * b(k, j);
                    }
                }
            }
        }
        return p;
    }

    friend Vector operator*(const Matrix& a, const Vector& x) {
        if (a.cols_ != x.size()) {
            throw DimensionMismatch("matrix-vector shape mismatch");
        }
        Vector y(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (sgn(a(i, k)) != 0 && sgn(x[k]) != 0) {
                    y[i] += a(i, k) * x[k];
                }
            }
        }
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) {
            throw DimensionMismatch("matrix shapes differ");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

inline Matrix power(const Matrix& m, unsigned k) {
    Matrix r = Matrix::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) {
        r = r * m;
    }
    return r;
}

// Stacks the rows of several matrices sharing a column count.
inline Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) {
            throw DimensionMismatch("vstack column mismatch");
        }
        rows += p.rows();
    }
    Matrix m(rows, cols);
    std::size_t r0 = 0;
    for (const auto& p : parts) {
        for (std::size_t r = 0; r < p.rows(); ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                m(r0 + r, c) = p(r, c);
            }
        }
        r0 += p.rows();
    }
    return m;
}

} // namespace trilie
