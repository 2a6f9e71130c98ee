#pragma once

#include <string>
#include <vector>

#include "trilie/linalg.hpp"

namespace trilie {

// A subspace of F^d stored by its reduced row-echelon basis. The basis is
// canonical, so two subspaces are equal as sets iff the stored data is equal.
class Subspace {
public:
    Subspace() = default;

    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    static Subspace full(std::size_t ambient_dim) {
        Subspace s;
        s.ambient_ = ambient_dim;
        s.basis_ = Matrix::identity(ambient_dim);
        s.pivots_.resize(ambient_dim);
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            s.pivots_[i] = i;
        }
        return s;
    }

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
        RowReducer red(ambient_dim);
        for (const auto& v : vectors) {
            if (v.size() != ambient_dim) {
                throw AmbientMismatch("spanning vector has length " + std::to_string(v.size()) +
                                      ", expected " + std::to_string(ambient_dim));
            }
            if (red.full()) {
                break;
            }
            red.add(v);
        }
        return from_reducer(red);
    }

    static Subspace span_rows(const Matrix& m) {
        RowReducer red(m.cols());
        for (std::size_t r = 0; r < m.rows() && !red.full(); ++r) {
            red.add(m.row_vector(r));
        }
        return from_reducer(red);
    }

    static Subspace from_reducer(const RowReducer& red) {
        Subspace s;
        s.ambient_ = red.cols();
        s.basis_ = red.matrix();
        s.pivots_ = red.pivots();
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

    std::vector<Vector> basis_vectors() const {
        std::vector<Vector> out;
        out.reserve(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            out.push_back(basis_.row_vector(i));
        }
        return out;
    }

    // Residual of v after elimination against the basis; zero iff v is inside.
    Vector residual(Vector v) const {
        check_length(v.size());
        for (std::size_t r = 0; r < dim(); ++r) {
            const Scalar lead = v[pivots_[r]];
            if (sgn(lead) != 0) {
                axpy(v, -lead, basis_.row(r));
            }
        }
        return v;
    }

    bool contains(const Vector& v) const { return trilie::is_zero(residual(v)); }

    bool contains(const Subspace& other) const {
        check_ambient(other);
        for (std::size_t r = 0; r < other.dim(); ++r) {
            if (!contains(other.basis_vector(r))) {
                return false;
            }
        }
        return true;
    }

    // Coordinates of v (which must lie inside) in the stored basis.
    Vector coordinates(const Vector& v) const {
        if (!contains(v)) {
            throw DimensionMismatch("vector is not in the subspace");
        }
        Vector c(dim());
        for (std::size_t r = 0; r < dim(); ++r) {
            c[r] = v[pivots_[r]];
        }
        return c;
    }

    // Linear combination of the basis with the given coefficients.
    Vector combine(const Vector& coeffs) const {
        if (coeffs.size() != dim()) {
            throw DimensionMismatch("coefficient count differs from subspace dimension");
        }
        Vector v(ambient_);
        for (std::size_t r = 0; r < dim(); ++r) {
            axpy(v, coeffs[r], basis_.row(r));
        }
        return v;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    void check_ambient(const Subspace& other) const {
        if (ambient_ != other.ambient_) {
            throw AmbientMismatch("ambient dimensions " + std::to_string(ambient_) + " and " +
                                  std::to_string(other.ambient_) + " differ");
        }
    }

private:
    void check_length(std::size_t len) const {
        if (len != ambient_) {
            throw AmbientMismatch("vector of length " + std::to_string(len) +
                                  " tested against ambient dimension " + std::to_string(ambient_));
        }
    }

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// {x : m x = 0}
inline Subspace nullspace(const Matrix& m) {
    RowReducer red(m.cols());
    for (std::size_t r = 0; r < m.rows() && !red.full(); ++r) {
        red.add(m.row_vector(r));
    }
    return Subspace::span(m.cols(), kernel_vectors(red));
}

// Solution space of a homogeneous system already fed into a reducer.
inline Subspace nullspace(const RowReducer& red) {
    return Subspace::span(red.cols(), kernel_vectors(red));
}

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    u.check_ambient(v);
    RowReducer red(u.ambient_dim());
    for (std::size_t r = 0; r < u.dim(); ++r) {
        red.add(u.basis_vector(r));
    }
    for (std::size_t r = 0; r < v.dim() && !red.full(); ++r) {
        red.add(v.basis_vector(r));
    }
    return Subspace::from_reducer(red);
}

inline Subspace subspace_sum(const std::vector<Subspace>& parts, std::size_t ambient_dim) {
    Subspace acc = Subspace::zero(ambient_dim);
    for (const auto& p : parts) {
        acc = subspace_sum(acc, p);
    }
    return acc;
}

// The annihilator {w : w . u = 0 for all u in s}.
inline Subspace annihilator(const Subspace& s) { return nullspace(s.basis()); }

inline Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    u.check_ambient(v);
    Matrix duals = vstack({annihilator(u).basis(), annihilator(v).basis()}, u.ambient_dim());
    return nullspace(duals);
}

inline bool subspace_contains(const Subspace& u, const Subspace& v) { return u.contains(v); }

// Span of the coordinate vectors at the non-pivot columns of u's basis, so
// that u and the result are complementary.
inline Subspace subspace_complement(const Subspace& u) {
    const std::size_t n = u.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : u.pivots()) {
        is_pivot[p] = true;
    }
    std::vector<Vector> vs;
    for (std::size_t j = 0; j < n; ++j) {
        if (!is_pivot[j]) {
            vs.push_back(unit_vector(n, j));
        }
    }
    return Subspace::span(n, vs);
}

// True when the subspaces are independent (their sum is direct).
inline bool independent(const std::vector<Subspace>& parts, std::size_t ambient_dim) {
    std::size_t total = 0;
    for (const auto& p : parts) {
        total += p.dim();
    }
    return subspace_sum(parts, ambient_dim).dim() == total;
}

// Image of a subspace under a linear map given as a matrix acting on columns.
inline Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) {
        throw AmbientMismatch("map domain differs from subspace ambient dimension");
    }
    std::vector<Vector> imgs;
    imgs.reserve(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
        imgs.push_back(m * s.basis_vector(r));
    }
    return Subspace::span(m.rows(), imgs);
}

} // namespace trilie
