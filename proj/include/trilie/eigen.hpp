#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trilie/subspace.hpp"

namespace trilie {

// Polynomial with coefficients listed from the constant term upward.
using Polynomial = std::vector<Scalar>;

// Faddeev-LeVerrier; returns det(xI - m), monic, degree = rows.
inline Polynomial characteristic_polynomial(const Matrix& m) {
    if (!m.square()) {
        throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Polynomial c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) {
            mk(i, i) += c[n - k + 1];
        }
        Matrix amk = m * mk;
        Scalar trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            trace += amk(i, i);
        }
        c[n - k] = -trace / static_cast<long>(k);
    }
    return c;
}

namespace detail {

inline Scalar evaluate(const Polynomial& p, const Scalar& x) {
    Scalar acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
    }
    return acc;
}

// Quotient of p by (x - r); the remainder is assumed to be zero.
inline Polynomial deflate(const Polynomial& p, const Scalar& r) {
    const std::size_t d = p.size() - 1;
    Polynomial q(d);
    Scalar carry = 0;
    for (std::size_t i = d; i-- > 0;) {
        carry = p[i + 1] + carry * r;
        q[i] = carry;
    }
    return q;
}

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) {
        n = -n;
    }
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) {
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) {
        factors.emplace_back(n, 1);
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace detail

// Rational roots with multiplicity, found with the rational-root theorem on
// the integer-cleared polynomial. Roots are returned in increasing order.
inline std::vector<std::pair<Scalar, std::size_t>> rational_roots(Polynomial p) {
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
    std::vector<std::pair<Scalar, std::size_t>> roots;
    if (p.size() <= 1) {
        return roots;
    }
    std::size_t zero_mult = 0;
    while (sgn(p.front()) == 0) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult) {
        roots.emplace_back(Scalar(0), zero_mult);
    }
    if (p.size() > 1) {
        mpz_class lcm = 1;
        for (const auto& a : p) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.get_den_mpz_t());
        }
        mpz_class lead = Scalar(p.back() * lcm).get_num();
        mpz_class tail = Scalar(p.front() * lcm).get_num();
        auto nums = detail::positive_divisors(tail);
        auto dens = detail::positive_divisors(lead);
        std::vector<Scalar> candidates;
        for (const auto& a : nums) {
            for (const auto& b : dens) {
                Scalar q(a, b);
                q.canonicalize();
                candidates.push_back(q);
                candidates.push_back(-q);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& c : candidates) {
            std::size_t mult = 0;
            while (p.size() > 1 && sgn(detail::evaluate(p, c)) == 0) {
                p = detail::deflate(p, c);
                ++mult;
            }
            if (mult) {
                roots.emplace_back(c, mult);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline Matrix shifted(const Matrix& m, const Scalar& lambda) {
    Matrix s = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s(i, i) -= lambda;
    }
    return s;
}

struct Eigenspace {
    Scalar eigenvalue;
    Subspace space;
};

// Eigenspaces of a single operator; requires a rational spectrum and
// diagonalizability over the rationals.
inline std::vector<Eigenspace> eigenspaces(const Matrix& m) {
    const std::size_t n = m.rows();
    auto roots = rational_roots(characteristic_polynomial(m));
    std::size_t found = 0;
    for (const auto& r : roots) {
        found += r.second;
    }
    if (found != n) {
        throw NonRationalSpectrum("characteristic polynomial has " + std::to_string(n - found) +
                                  " roots outside the rationals");
    }
    std::vector<Eigenspace> out;
    std::size_t geometric = 0;
    for (const auto& [lambda, mult] : roots) {
        Subspace e = nullspace(shifted(m, lambda));
        geometric += e.dim();
        out.push_back({lambda, std::move(e)});
    }
    if (geometric != n) {
        throw NotDiagonalizable("eigenspaces have total dimension " + std::to_string(geometric) +
                                " in dimension " + std::to_string(n));
    }
    return out;
}

struct JointEigenspace {
    std::vector<Scalar> eigenvalues;  // one per operator, in operator order
    Subspace space;
};

// Joint eigenspace decomposition of a commuting family of rationally
// diagonalizable operators. Entries are sorted by eigenvalue tuple.
inline std::vector<JointEigenspace> simultaneous_eigenspaces(const std::vector<Matrix>& ops,
                                                             std::size_t dim) {
    for (const auto& op : ops) {
        if (op.rows() != dim || op.cols() != dim) {
            throw DimensionMismatch("operator is not " + std::to_string(dim) + "x" +
                                    std::to_string(dim));
        }
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            if (!(ops[i] * ops[j] == ops[j] * ops[i])) {
                throw NotCommuting("operators " + std::to_string(i) + " and " + std::to_string(j) +
                                   " do not commute");
            }
        }
    }
    std::vector<JointEigenspace> parts{{{}, Subspace::full(dim)}};
    for (const auto& op : ops) {
        auto single = eigenspaces(op);
        std::vector<JointEigenspace> next;
        for (const auto& part : parts) {
            for (const auto& e : single) {
                Subspace s = subspace_intersect(part.space, e.space);
                if (s.is_zero()) {
                    continue;
                }
                auto values = part.eigenvalues;
                values.push_back(e.eigenvalue);
                next.push_back({std::move(values), std::move(s)});
            }
        }
        parts = std::move(next);
    }
    std::sort(parts.begin(), parts.end(),
              [](const JointEigenspace& a, const JointEigenspace& b) { return a.eigenvalues < b.eigenvalues; });
    return parts;
}

// Matrix of op restricted to the invariant subspace s, in s's stored basis.
inline Matrix restrict_to(const Matrix& op, const Subspace& s) {
    if (op.rows() != s.ambient_dim() || op.cols() != s.ambient_dim()) {
        throw AmbientMismatch("operator size differs from subspace ambient dimension");
    }
    Matrix r(s.dim(), s.dim());
    for (std::size_t c = 0; c < s.dim(); ++c) {
        Vector img = op * s.basis_vector(c);
        if (!s.contains(img)) {
            throw SpaceNotInvariant("basis vector " + std::to_string(c) + " leaves the subspace");
        }
        r.set_column(c, s.coordinates(img));
    }
    return r;
}

// Maps a subspace of coordinates (w.r.t. s's basis) back into the ambient space.
inline Subspace lift(const Subspace& coords, const Subspace& s) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < coords.dim(); ++i) {
        vs.push_back(s.combine(coords.basis_vector(i)));
    }
    return Subspace::span(s.ambient_dim(), vs);
}

// Generalized eigenspace ker (m - lambda)^dim.
inline Subspace generalized_eigenspace(const Matrix& m, const Scalar& lambda) {
    return nullspace(power(shifted(m, lambda), static_cast<unsigned>(m.rows())));
}

} // namespace trilie
