#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trilie/subspace.hpp"

namespace trilie {

// Endomorphism of F^n; column j holds the image of e_j.
using LinearMap = Matrix;

using Triple = std::array<std::size_t, 3>;

// Sign of the permutation sorting (i, j, k), or 0 on a repeated index.
inline int sort_triple(std::size_t& i, std::size_t& j, std::size_t& k) {
    int sign = 1;
    if (i == j || j == k || i == k) {
        return 0;
    }
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (j > k) {
        std::swap(j, k);
        sign = -sign;
    }
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    return sign;
}

// Raw bracket coefficients [e_i, e_j, e_k] = sum_l c_ijk^l e_l, stored for
// i < j < k only. Skew-symmetry is structural: every other ordering is derived.
// No identity is checked here; see Algebra for the validated form.
class StructureConstants {
public:
    StructureConstants() = default;

    explicit StructureConstants(std::size_t dim, std::vector<std::string> labels = {})
        : dim_(dim), labels_(std::move(labels)), table_(dim * dim * dim, Vector(dim)) {
        if (!labels_.empty() && labels_.size() != dim_) {
            throw DimensionMismatch("label count differs from dimension");
        }
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::map<Triple, Vector>& entries() const { return entries_; }

    // Sets [e_i, e_j, e_k] (any order of distinct indices; sign adjusted).
    void set(std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
        if (i >= dim_ || j >= dim_ || k >= dim_) {
            throw DimensionMismatch("basis index out of range");
        }
        if (value.size() != dim_) {
            throw DimensionMismatch("bracket value has wrong length");
        }
        int sign = sort_triple(i, j, k);
        if (sign == 0) {
            if (!is_zero(value)) {
                throw DimensionMismatch("bracket with a repeated index must be zero");
            }
            return;
        }
        Vector v = sign > 0 ? value : scale(Scalar(-1), value);
        if (is_zero(v)) {
            entries_.erase({i, j, k});
        } else {
            entries_[{i, j, k}] = v;
        }
        fill_table(i, j, k, v);
    }

    // [e_i, e_j, e_k] for arbitrary indices.
    const Vector& basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim_ + j) * dim_ + k];
    }

    // Trilinear skew expansion over the stored triples.
    Vector bracket(const Vector& x, const Vector& y, const Vector& z) const {
        if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_) {
            throw DimensionMismatch("bracket arguments must have length " + std::to_string(dim_));
        }
        Vector out(dim_);
        for (const auto& [t, c] : entries_) {
            const auto [i, j, k] = t;
            Scalar det = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                         x[k] * (y[i] * z[j] - y[j] * z[i]);
            if (sgn(det) != 0) {
                axpy(out, det, c);
            }
        }
        return out;
    }

    // sum_l v_l [e_l, e_j, e_k]
    Vector bracket_first(const Vector& v, std::size_t j, std::size_t k) const {
        Vector out(dim_);
        for (std::size_t l = 0; l < dim_; ++l) {
            if (sgn(v[l]) != 0) {
                axpy(out, v[l], basis_bracket(l, j, k));
            }
        }
        return out;
    }

    std::string label(std::size_t i) const {
        return labels_.empty() ? "e" + std::to_string(i + 1) : labels_[i];
    }

private:
    void fill_table(std::size_t i, std::size_t j, std::size_t k, const Vector& v) {
        const std::array<std::pair<Triple, int>, 6> perms{{{{i, j, k}, 1},
                                                           {{j, k, i}, 1},
                                                           {{k, i, j}, 1},
                                                           {{j, i, k}, -1},
                                                           {{i, k, j}, -1},
                                                           {{k, j, i}, -1}}};
        for (const auto& [p, s] : perms) {
            table_[(p[0] * dim_ + p[1]) * dim_ + p[2]] = s > 0 ? v : scale(Scalar(-1), v);
        }
    }

    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::map<Triple, Vector> entries_;
    std::vector<Vector> table_;  // dense cache of all n^3 basis brackets
};

struct IdentityViolation {
    std::array<std::size_t, 5> indices;  // (x1, x2, x3, y2, y3), 0-based
    Vector residual;                     // left side minus right side
};

// Checks [[x1,x2,x3],y2,y3] = [[x1,y2,y3],x2,x3] + [x1,[x2,y2,y3],x3] + [x1,x2,[x3,y2,y3]]
// on every basis 5-tuple with x1<x2<x3 and y2<y3 (both sides are skew in each group).
inline std::vector<IdentityViolation> fundamental_identity_violations(const StructureConstants& sc,
                                                                      std::size_t limit = 0) {
    const std::size_t n = sc.dim();
    std::vector<IdentityViolation> out;
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        for (std::size_t x2 = x1 + 1; x2 < n; ++x2) {
            for (std::size_t x3 = x2 + 1; x3 < n; ++x3) {
                const Vector& inner = sc.basis_bracket(x1, x2, x3);
                for (std::size_t y2 = 0; y2 < n; ++y2) {
                    for (std::size_t y3 = y2 + 1; y3 < n; ++y3) {
                        Vector lhs = sc.bracket_first(inner, y2, y3);
                        // Rotate the replaced slot to the front using skew-symmetry.
                        Vector r1 = sc.bracket_first(sc.basis_bracket(x1, y2, y3), x2, x3);
                        Vector r2 = sc.bracket_first(sc.basis_bracket(x2, y2, y3), x3, x1);
                        Vector r3 = sc.bracket_first(sc.basis_bracket(x3, y2, y3), x1, x2);
                        Vector res = sub(lhs, add(add(r1, r2), r3));
                        if (!is_zero(res)) {
                            out.push_back({{x1, x2, x3, y2, y3}, std::move(res)});
                            if (limit && out.size() >= limit) {
                                return out;
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

// A 3-Lie algebra: structure constants that passed the fundamental identity.
class Algebra {
public:
    Algebra() = default;

    static Algebra validated(StructureConstants sc) {
        auto bad = fundamental_identity_violations(sc, 1);
        if (!bad.empty()) {
            const auto& v = bad.front();
            std::string where;
            for (std::size_t i = 0; i < 5; ++i) {
                where += (i ? "," : "") + std::to_string(v.indices[i] + 1);
            }
            throw InvalidAlgebra("fundamental identity fails on basis tuple (" + where + ")");
        }
        return Algebra(std::move(sc));
    }

    std::size_t dim() const { return sc_.dim(); }
    const StructureConstants& constants() const { return sc_; }
    const std::vector<std::string>& labels() const { return sc_.labels(); }

    const Vector& basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
        return sc_.basis_bracket(i, j, k);
    }

    Vector bracket(const Vector& x, const Vector& y, const Vector& z) const {
        return sc_.bracket(x, y, z);
    }

    Vector basis(std::size_t i) const { return unit_vector(dim(), i); }

private:
    explicit Algebra(StructureConstants sc) : sc_(std::move(sc)) {}

    StructureConstants sc_;
};

inline std::vector<IdentityViolation> fundamental_identity_violations(const Algebra& a) {
    return fundamental_identity_violations(a.constants());
}

inline Vector bracket(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
    return a.bracket(x, y, z);
}

inline Algebra abelian(std::size_t n) { return Algebra::validated(StructureConstants(n)); }

// Left multiplication ad(x, y): z -> [x, y, z].
inline LinearMap ad_map(const Algebra& a, const Vector& x, const Vector& y) {
    const std::size_t n = a.dim();
    LinearMap m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        m.set_column(c, a.bracket(x, y, a.basis(c)));
    }
    return m;
}

inline LinearMap ad_basis(const Algebra& a, std::size_t i, std::size_t j) {
    const std::size_t n = a.dim();
    LinearMap m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        m.set_column(c, a.basis_bracket(i, j, c));
    }
    return m;
}

inline Vector apply(const LinearMap& f, const Vector& x) { return f * x; }

// Row i lists the coordinates of f(e_i): the layout used when a map is
// written as f(x_i) = sum_j a_ij x_j.
inline Matrix row_image_form(const LinearMap& f) { return f.transpose(); }

inline LinearMap from_row_image_form(const Matrix& rows) { return rows.transpose(); }

// A^1, spanned by all basis brackets.
inline Subspace derived_algebra(const Algebra& a) {
    std::vector<Vector> vs;
    for (const auto& [t, c] : a.constants().entries()) {
        vs.push_back(c);
    }
    return Subspace::span(a.dim(), vs);
}

// Z(A) = {x : [x, A, A] = 0}, the common kernel of all ad(e_j, e_k).
inline Subspace center(const Algebra& a) {
    const std::size_t n = a.dim();
    RowReducer red(n);
    for (std::size_t j = 0; j < n && !red.full(); ++j) {
        for (std::size_t k = j + 1; k < n && !red.full(); ++k) {
            LinearMap m = ad_basis(a, j, k);
            for (std::size_t r = 0; r < n; ++r) {
                red.add(m.row_vector(r));
            }
        }
    }
    return nullspace(red);
}

inline bool is_ideal(const Algebra& a, const Subspace& s) {
    const std::size_t n = a.dim();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Vector b = s.basis_vector(r);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!s.contains(a.bracket(b, a.basis(j), a.basis(k)))) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_subalgebra(const Algebra& a, const Subspace& s) {
    auto bs = s.basis_vectors();
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            for (std::size_t k = j + 1; k < bs.size(); ++k) {
                if (!s.contains(a.bracket(bs[i], bs[j], bs[k]))) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_abelian_subspace(const Algebra& a, const Subspace& s) {
    auto bs = s.basis_vectors();
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            for (std::size_t k = j + 1; k < bs.size(); ++k) {
                if (!is_zero(a.bracket(bs[i], bs[j], bs[k]))) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Block direct sum: a on the first dim(a) coordinates, b on the rest, mixed brackets zero.
inline Algebra direct_sum(const Algebra& a, const Algebra& b) {
    const std::size_t na = a.dim();
    const std::size_t n = na + b.dim();
    std::vector<std::string> labels;
    if (!a.labels().empty() || !b.labels().empty()) {
        for (std::size_t i = 0; i < na; ++i) {
            labels.push_back(a.constants().label(i));
        }
        for (std::size_t i = 0; i < b.dim(); ++i) {
            labels.push_back(b.constants().label(i) + "'");
        }
    }
    StructureConstants sc(n, labels);
    for (const auto& [t, c] : a.constants().entries()) {
        Vector v(n);
        std::copy(c.begin(), c.end(), v.begin());
        sc.set(t[0], t[1], t[2], v);
    }
    for (const auto& [t, c] : b.constants().entries()) {
        Vector v(n);
        std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(na));
        sc.set(t[0] + na, t[1] + na, t[2] + na, v);
    }
    return Algebra::validated(std::move(sc));
}

// Structure constants of a subalgebra s, expressed in s's stored basis.
inline Algebra induced_algebra(const Algebra& a, const Subspace& s) {
    if (!is_subalgebra(a, s)) {
        throw InvalidAlgebra("subspace is not closed under the bracket");
    }
    auto bs = s.basis_vectors();
    StructureConstants sc(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t j = i + 1; j < bs.size(); ++j) {
            for (std::size_t k = j + 1; k < bs.size(); ++k) {
                sc.set(i, j, k, s.coordinates(a.bracket(bs[i], bs[j], bs[k])));
            }
        }
    }
    return Algebra::validated(std::move(sc));
}

} // namespace trilie
