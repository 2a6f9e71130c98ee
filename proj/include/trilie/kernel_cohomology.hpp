#pragma once

#include <string>
#include <vector>

#include "trilie/map_spaces.hpp"
#include "trilie/report.hpp"
#include "trilie/sampling.hpp"

namespace trilie {

// Index of e_i (x) e_j (x) e_k in F^(n^3).
inline std::size_t tensor_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    return (i * n + j) * n + k;
}

// mu : A (x) A (x) A -> A as an n x n^3 matrix.
inline Matrix mu_matrix(const Algebra& a) {
    const std::size_t n = a.dim();
    Matrix m(n, n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                m.set_column(tensor_index(n, i, j, k), a.basis_bracket(i, j, k));
            }
        }
    }
    return m;
}

// Ker(mu) on the full tensor cube, symmetric and diagonal tensors included.
inline Subspace mu_kernel(const Algebra& a) { return nullspace(mu_matrix(a)); }

// f* = f (x) 1 (x) 1 + 1 (x) f (x) 1 + 1 (x) 1 (x) f on F^(n^3).
inline Matrix f_star(const Algebra& a, const LinearMap& f) {
    const std::size_t n = a.dim();
    if (f.rows() != n || f.cols() != n) {
        throw DimensionMismatch("map size differs from algebra dimension");
    }
    const std::size_t n3 = n * n * n;
    Matrix m(n3, n3);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t col = tensor_index(n, i, j, k);
                for (std::size_t r = 0; r < n; ++r) {
                    m(tensor_index(n, r, j, k), col) += f(r, i);
                    m(tensor_index(n, i, r, k), col) += f(r, j);
                    m(tensor_index(n, i, j, r), col) += f(r, k);
                }
            }
        }
    }
    return m;
}

// f is a quasiderivation iff f*(Ker mu) lies in Ker mu.
inline bool is_qder_via_kernel(const Algebra& a, const LinearMap& f, const Subspace& kernel) {
    Matrix mu_f = mu_matrix(a) * f_star(a, f);
    for (std::size_t r = 0; r < kernel.dim(); ++r) {
        if (!is_zero(mu_f * kernel.basis_vector(r))) {
            return false;
        }
    }
    return true;
}

inline bool is_qder_via_kernel(const Algebra& a, const LinearMap& f) {
    return is_qder_via_kernel(a, f, mu_kernel(a));
}

// An element of Hom(A (x) A (x) A, A): column tensor_index(i,j,k) holds c(e_i, e_j, e_k).
// No alternation is imposed.
struct Cochain1 {
    Matrix values;

    std::size_t n() const { return values.rows(); }

    const Vector at(std::size_t i, std::size_t j, std::size_t k) const {
        return values.column(tensor_index(n(), i, j, k));
    }

    // Multilinear evaluation with one vector argument in slot `slot` and basis
    // vectors elsewhere.
    Vector eval_with(int slot, const Vector& v, std::size_t i, std::size_t j, std::size_t k) const {
        Vector out(n());
        for (std::size_t m = 0; m < n(); ++m) {
            if (sgn(v[m]) == 0) {
                continue;
            }
            std::size_t a = slot == 0 ? m : i;
            std::size_t b = slot == 1 ? m : j;
            std::size_t c = slot == 2 ? m : k;
            axpy(out, v[m], values.column(tensor_index(n(), a, b, c)));
        }
        return out;
    }

    friend bool operator==(const Cochain1& x, const Cochain1& y) { return x.values == y.values; }
};

// delta0(f)(x1,x2,x3) = f[x1,x2,x3] - [f x1,x2,x3] - [x1,f x2,x3] - [x1,x2,f x3]
inline Cochain1 delta0_adjoint(const Algebra& a, const LinearMap& f) {
    const std::size_t n = a.dim();
    Cochain1 c{Matrix(n, n * n * n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                Vector x = a.basis(i), y = a.basis(j), z = a.basis(k);
                Vector v = f * a.basis_bracket(i, j, k);
                v = sub(v, a.bracket(f * x, y, z));
                v = sub(v, a.bracket(x, f * y, z));
                v = sub(v, a.bracket(x, y, f * z));
                c.values.set_column(tensor_index(n, i, j, k), v);
            }
        }
    }
    return c;
}

// Trivial module: f(x, y, z) -> f([x, y, z]).
inline Cochain1 delta0_trivial(const Algebra& a, const LinearMap& f) {
    const std::size_t n = a.dim();
    Cochain1 c{Matrix(n, n * n * n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                c.values.set_column(tensor_index(n, i, j, k), f * a.basis_bracket(i, j, k));
            }
        }
    }
    return c;
}

// Trivial-module part at one basis 5-tuple:
// sum_i c(.., [x_i, x4, x5] in slot i, ..) - c([x1, x2, x3], x4, x5).
inline Vector delta1_trivial_at(const Algebra& a, const Cochain1& c, const FiveTuple& t) {
    const auto [x1, x2, x3, x4, x5] = t;
    Vector v = c.eval_with(0, a.basis_bracket(x1, x4, x5), x1, x2, x3);
    v = add(v, c.eval_with(1, a.basis_bracket(x2, x4, x5), x1, x2, x3));
    v = add(v, c.eval_with(2, a.basis_bracket(x3, x4, x5), x1, x2, x3));
    return sub(v, c.eval_with(0, a.basis_bracket(x1, x2, x3), x1, x4, x5));
}

// Adjoint module: the trivial part plus
// sum_i [.., c(x_i, x4, x5) in slot i, ..] - [c(x1, x2, x3), x4, x5].
inline Vector delta1_adjoint_at(const Algebra& a, const Cochain1& c, const FiveTuple& t) {
    const auto [x1, x2, x3, x4, x5] = t;
    Vector v = delta1_trivial_at(a, c, t);
    Vector e1 = a.basis(x1), e2 = a.basis(x2), e3 = a.basis(x3), e4 = a.basis(x4), e5 = a.basis(x5);
    v = add(v, a.bracket(c.at(x1, x4, x5), e2, e3));
    v = add(v, a.bracket(e1, c.at(x2, x4, x5), e3));
    v = add(v, a.bracket(e1, e2, c.at(x3, x4, x5)));
    return sub(v, a.bracket(c.at(x1, x2, x3), e4, e5));
}

// Values of a degree-1 coboundary on all ordered basis 5-tuples, indexed
// lexicographically.
struct Cochain2 {
    std::size_t n = 0;
    std::vector<Vector> values;

    const Vector& at(const FiveTuple& t) const {
        std::size_t idx = 0;
        for (auto x : t) {
            idx = idx * n + x;
        }
        return values[idx];
    }

    bool is_zero() const {
        for (const auto& v : values) {
            if (!trilie::is_zero(v)) {
                return false;
            }
        }
        return true;
    }
};

namespace detail {

template <typename At>
Cochain2 tabulate_five(const Algebra& a, At&& at) {
    Cochain2 out{a.dim(), {}};
    scan_five_tuples(a.dim(), TupleScan{static_cast<std::size_t>(-1), 0}, [&](const FiveTuple& t) {
        out.values.push_back(at(t));
        return true;
    });
    return out;
}

} // namespace detail

inline Cochain2 delta1_adjoint(const Algebra& a, const Cochain1& c) {
    return detail::tabulate_five(a, [&](const FiveTuple& t) { return delta1_adjoint_at(a, c, t); });
}

inline Cochain2 delta1_trivial(const Algebra& a, const Cochain1& c) {
    return detail::tabulate_five(a, [&](const FiveTuple& t) { return delta1_trivial_at(a, c, t); });
}

// [h[x,y,z],u,v] = [h[x,u,v],y,z] + [x,h[y,u,v],z] + [x,y,h[z,u,v]] at one tuple;
// returns left side minus right side.
inline Vector shifted_bracket_residual(const Algebra& a, const LinearMap& h, const FiveTuple& t) {
    const auto [x, y, z, u, v] = t;
    Vector ex = a.basis(x), ey = a.basis(y), ez = a.basis(z), eu = a.basis(u), ev = a.basis(v);
    Vector lhs = a.bracket(h * a.basis_bracket(x, y, z), eu, ev);
    Vector rhs = a.bracket(h * a.basis_bracket(x, u, v), ey, ez);
    rhs = add(rhs, a.bracket(ex, h * a.basis_bracket(y, u, v), ez));
    rhs = add(rhs, a.bracket(ex, ey, h * a.basis_bracket(z, u, v)));
    return sub(lhs, rhs);
}

// Some g with delta0_trivial(g) = delta0_adjoint(f), or nullopt when
// delta0(f) is not a trivial-module coboundary.
inline std::optional<LinearMap> trivial_preimage(const Algebra& a, const LinearMap& f) {
    const std::size_t n = a.dim();
    Cochain1 target = delta0_adjoint(a, f);
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vector& b = a.basis_bracket(i, j, k);
                Vector t = target.at(i, j, k);
                for (std::size_t l = 0; l < n; ++l) {
                    Vector row(n * n);
                    for (std::size_t m = 0; m < n; ++m) {
                        row[l * n + m] = b[m];
                    }
                    rows.push_back(std::move(row));
                    rhs.push_back(t[l]);
                }
            }
        }
    }
    // Both cochains alternate, so the remaining ordered triples add nothing;
    // confirm on the full table anyway.
    auto sol = solve_affine(n * n, rows, rhs);
    if (!sol) {
        return std::nullopt;
    }
    LinearMap g = map_from_coords(n, *sol);
    if (!(delta0_trivial(a, g) == target)) {
        return std::nullopt;
    }
    return g;
}

// Maps used to probe two-sided criteria: the given basis, every elementary
// map, and `random_count` seeded random maps.
inline std::vector<LinearMap> probe_maps(std::size_t n, const std::vector<LinearMap>& basis,
                                         std::size_t random_count, std::uint64_t seed) {
    std::vector<LinearMap> out = basis;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out.push_back(elementary_map(n, r, c));
        }
    }
    Sampler s(seed);
    for (std::size_t i = 0; i < random_count; ++i) {
        out.push_back(s.map(n));
    }
    return out;
}

struct KernelAudit {
    std::size_t probes = 0;
    std::size_t agreements = 0;
    std::size_t qder_members = 0;
    std::string first_disagreement;
    bool all_agree() const { return probes == agreements; }
};

// Compares the kernel criterion with membership in QDer on every probe map.
inline KernelAudit kernel_criterion_audit(const Algebra& a, const MapSpace& qder_space,
                                          const std::vector<LinearMap>& probes) {
    KernelAudit audit;
    Subspace kernel = mu_kernel(a);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        bool via_kernel = is_qder_via_kernel(a, probes[i], kernel);
        bool member = qder_space.contains(probes[i]);
        ++audit.probes;
        audit.qder_members += member ? 1 : 0;
        if (via_kernel == member) {
            ++audit.agreements;
        } else if (audit.first_disagreement.empty()) {
            audit.first_disagreement = "probe " + std::to_string(i) + ": kernel criterion says " +
                                       (via_kernel ? "yes" : "no") + ", membership says " +
                                       (member ? "yes" : "no");
        }
    }
    return audit;
}

inline std::string tuple_string(const FiveTuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < 5; ++i) {
        s += (i ? "," : "") + std::to_string(t[i] + 1);
    }
    return s + ")";
}

// Both directions of the coboundary description of quasiderivations, and the
// induced identity for f - f' on 5-tuples.
inline CheckReport coboundary_checks(const Algebra& a, const MapSpace& pairs, const MapSpace& qder_space,
                                    const std::vector<LinearMap>& probes, const TupleScan& scan) {
    CheckReport rep;
    const auto pair_basis = pairs.pairs();

    Tally forward;
    for (std::size_t idx = 0; idx < pair_basis.size(); ++idx) {
        const auto& p = pair_basis[idx];
        forward.record(delta0_adjoint(a, p.f) == delta0_trivial(a, p.f - p.fprime),
                       "pair basis element " + std::to_string(idx));
    }
    rep.add(forward.to_check("delta0(f) = trivial delta0(f - f') for every pair"));

    Tally converse;
    for (std::size_t idx = 0; idx < probes.size(); ++idx) {
        const auto& f = probes[idx];
        auto g = trivial_preimage(a, f);
        bool member = qder_space.contains(f);
        bool ok = g.has_value() == member;
        if (ok && g) {
            ok = is_quasiderivation_pair(a, {f, f - *g});
        }
        converse.record(ok, "probe map " + std::to_string(idx));
    }
    rep.add(converse.to_check("delta0(f) is a trivial coboundary iff f in QDer"));

    Tally identity;
    bool sampled = false;
    for (std::size_t idx = 0; idx < pair_basis.size() && identity.passed(); ++idx) {
        LinearMap h = pair_basis[idx].f - pair_basis[idx].fprime;
        sampled = scan_five_tuples(a.dim(), scan, [&](const FiveTuple& t) {
                      bool ok = is_zero(shifted_bracket_residual(a, h, t));
                      identity.record_lazy(ok, [&] {
                          return "pair basis element " + std::to_string(idx) + " at " + tuple_string(t);
                      });
                      return ok;
                  }) ||
                  sampled;
    }
    rep.add(identity.to_check("f - f' satisfies the 5-tuple identity for every pair", sampled));
    return rep;
}

// delta1 o delta0 = 0 for both modules on the given maps.
inline CheckReport complex_checks(const Algebra& a, const std::vector<LinearMap>& maps, const TupleScan& scan) {
    CheckReport rep;
    Tally adjoint;
    Tally trivial;
    bool sampled = false;
    for (std::size_t idx = 0; idx < maps.size(); ++idx) {
        Cochain1 c_adj = delta0_adjoint(a, maps[idx]);
        Cochain1 c_triv = delta0_trivial(a, maps[idx]);
        sampled = scan_five_tuples(a.dim(), scan, [&](const FiveTuple& t) {
                      bool ok_a = is_zero(delta1_adjoint_at(a, c_adj, t));
                      bool ok_t = is_zero(delta1_trivial_at(a, c_triv, t));
                      adjoint.record_lazy(ok_a, [&] { return "map " + std::to_string(idx) + " at " + tuple_string(t); });
                      trivial.record_lazy(ok_t, [&] { return "map " + std::to_string(idx) + " at " + tuple_string(t); });
                      return ok_a && ok_t;
                  }) ||
                  sampled;
    }
    rep.add(adjoint.to_check("adjoint delta1 o delta0 = 0", sampled));
    rep.add(trivial.to_check("trivial delta1 o delta0 = 0", sampled));
    return rep;
}

} // namespace trilie
