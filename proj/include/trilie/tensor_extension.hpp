#pragma once

#include <vector>

#include "trilie/map_spaces.hpp"
#include "trilie/report.hpp"

namespace trilie {

// A (x) tF[t]/(t^4) with basis (e_1 t..e_n t, e_1 t^2..e_n t^2, e_1 t^3..e_n t^3).
// The only nonzero brackets are [a1 t, a2 t, a3 t] = [a1, a2, a3] t^3.
struct ExtendedAlgebra {
    Algebra base;
    Algebra algebra;
    Subspace derived;        // A^1 inside F^n
    Subspace u_complement;   // U with A = U (+) A^1
    LinearMap derived_projection;  // projection of F^n onto A^1 along U

    std::size_t n() const { return base.dim(); }

    // Index of e_i t^power (power in 1..3) in the extended basis.
    std::size_t index(std::size_t i, unsigned power) const { return (power - 1) * n() + i; }
};

inline ExtendedAlgebra extend(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<std::string> labels;
    for (unsigned p = 1; p <= 3; ++p) {
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back(a.constants().label(i) + "t" + (p > 1 ? "^" + std::to_string(p) : ""));
        }
    }
    StructureConstants sc(3 * n, labels);
    for (const auto& [t, c] : a.constants().entries()) {
        Vector v(3 * n);
        std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(2 * n));
        sc.set(t[0], t[1], t[2], v);
    }
    Subspace derived = derived_algebra(a);
    Subspace u = subspace_complement(derived);

    // Columns: basis of A^1, then basis of U; P = B diag(1..1, 0..0) B^-1.
    Matrix b(n, n);
    std::size_t col = 0;
    for (const auto& v : derived.basis_vectors()) {
        b.set_column(col++, v);
    }
    for (const auto& v : u.basis_vectors()) {
        b.set_column(col++, v);
    }
    Matrix keep(n, n);
    for (std::size_t i = 0; i < derived.dim(); ++i) {
        keep(i, i) = 1;
    }
    Matrix projection = n == 0 ? Matrix(0, 0) : b * keep * *inverse(b);
    return {a, Algebra::validated(std::move(sc)), std::move(derived), std::move(u), std::move(projection)};
}

// l_u(f)(a t + b t^2 + c t^3 + u t^3) = f(a) t + f'(c) t^3, c in A^1, u in U.
inline LinearMap embed_qder(const ExtendedAlgebra& e, const QDerPair& p) {
    const std::size_t n = e.n();
    if (p.f.rows() != n || p.f.cols() != n || p.fprime.rows() != n || p.fprime.cols() != n) {
        throw InvalidPair("pair maps must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (!is_quasiderivation_pair(e.base, p)) {
        throw InvalidPair("(f, f, f, f') does not satisfy the generalized Leibniz rule");
    }
    LinearMap top = p.fprime * e.derived_projection;
    LinearMap l(3 * n, 3 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            l(e.index(r, 1), e.index(c, 1)) = p.f(r, c);
            l(e.index(r, 3), e.index(c, 3)) = top(r, c);
        }
    }
    return l;
}

// l_u(QDer(A)) as a subspace of Hom(A~, A~).
inline MapSpace embedded_qder_image(const ExtendedAlgebra& e, const MapSpace& pairs) {
    std::vector<Vector> vs;
    for (const auto& p : pairs.pairs()) {
        vs.push_back(map_coords(embed_qder(e, p)));
    }
    const std::size_t m = 3 * e.n();
    return {MapKind::Der, m, Subspace::span(m * m, vs)};
}

// Centre of the Lie algebra `space` under map_bracket: {d in space : [d, D] = 0 for all D}.
inline Subspace lie_center(const MapSpace& space) {
    auto basis = space.maps();
    const std::size_t k = basis.size();
    RowReducer red(k);
    for (std::size_t t = 0; t < k && !red.full(); ++t) {
        std::vector<LinearMap> brackets;
        brackets.reserve(k);
        for (std::size_t s = 0; s < k; ++s) {
            brackets.push_back(map_bracket(basis[s], basis[t]));
        }
        const std::size_t entries = space.n * space.n;
        for (std::size_t idx = 0; idx < entries && !red.full(); ++idx) {
            Vector row(k);
            bool any = false;
            for (std::size_t s = 0; s < k; ++s) {
                row[s] = brackets[s].data()[idx];
                any = any || sgn(row[s]) != 0;
            }
            if (any) {
                red.add(std::move(row));
            }
        }
    }
    Subspace coeffs = nullspace(red);
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < coeffs.dim(); ++i) {
        vs.push_back(space.space.combine(coeffs.basis_vector(i)));
    }
    return Subspace::span(space.space.ambient_dim(), vs);
}

// Z(A~) = A t^2 + A t^3 when Z(A) = 0.
inline Subspace upper_blocks(const ExtendedAlgebra& e) {
    std::vector<Vector> vs;
    for (unsigned p = 2; p <= 3; ++p) {
        for (std::size_t i = 0; i < e.n(); ++i) {
            vs.push_back(unit_vector(3 * e.n(), e.index(i, p)));
        }
    }
    return Subspace::span(3 * e.n(), vs);
}

struct ExtensionAnalysis {
    MapSpace der_ext;          // Der(A~)
    MapSpace image;            // l_u(QDer(A))
    std::size_t qder_dim = 0;  // dim QDer(A)
    CheckReport report;
};

// Embedding checks that hold for every algebra: each embedded pair is a
// derivation of A~ (substitution), the image lies in Der(A~), l_u is
// injective, and l_u respects the grading.
inline ExtensionAnalysis analyze_embedding(const ExtendedAlgebra& e, const MapSpace& pairs) {
    const std::size_t n = e.n();
    MapSpace der_ext = der(e.algebra);
    MapSpace image = embedded_qder_image(e, pairs);
    MapSpace q = qder_from_pairs(pairs);
    CheckReport rep;

    Tally derivation;
    Tally grading;
    for (std::size_t idx = 0; const auto& p : pairs.pairs()) {
        LinearMap l = embed_qder(e, p);
        derivation.record(is_derivation(e.algebra, l), "pair basis element " + std::to_string(idx));
        bool graded = true;
        for (std::size_t r = 0; r < 3 * n; ++r) {
            for (std::size_t c = 0; c < 3 * n; ++c) {
                if (sgn(l(r, c)) == 0) {
                    continue;
                }
                bool block1 = r < n && c < n;
                bool upper_to_top = c >= n && r >= 2 * n;
                graded = graded && (block1 || upper_to_top);
            }
        }
        grading.record(graded, "pair basis element " + std::to_string(idx));
        ++idx;
    }
    rep.add(derivation.to_check("embedded pairs are derivations of the extension"));
    rep.add("embedding image inside Der(extension)", der_ext.space.contains(image.space),
            "dim image " + std::to_string(image.dim()) + ", dim Der " + std::to_string(der_ext.dim()));
    rep.add("embedding is injective on QDer", image.dim() == q.dim(),
            "dim image " + std::to_string(image.dim()) + ", dim QDer " + std::to_string(q.dim()));
    rep.add(grading.to_check("embedding preserves the grading"));
    return {std::move(der_ext), std::move(image), q.dim(), std::move(rep)};
}

struct SemidirectSplit {
    std::size_t der_dim = 0;
    std::size_t image_dim = 0;
    std::size_t central_dim = 0;       // dim ZDer(A~)
    std::size_t lie_center_dim = 0;    // dim of the centre of the Lie algebra Der(A~)
    CheckReport report;
};

// For Z(A) = 0: Der(A~) = l_u(QDer(A)) (+) ZDer(A~). The centre of the Lie
// algebra Der(A~) is reported alongside.
inline SemidirectSplit semidirect_check(const ExtendedAlgebra& e, const ExtensionAnalysis& embedding) {
    if (!center(e.base).is_zero()) {
        throw CenterNotZero("the base algebra has a nonzero center");
    }
    MapSpace central = zder(e.algebra);
    Subspace lie = lie_center(embedding.der_ext);
    SemidirectSplit out{embedding.der_ext.dim(), embedding.image.dim(), central.dim(), lie.dim(), {}};
    Subspace meet = subspace_intersect(embedding.image.space, central.space);
    Subspace sum = subspace_sum(embedding.image.space, central.space);
    out.report.add("Z(extension) = A t^2 + A t^3", center(e.algebra) == upper_blocks(e));
    out.report.add("image meets ZDer(extension) in zero", meet.is_zero(),
                   "intersection dimension " + std::to_string(meet.dim()));
    out.report.add("Der(extension) = image + ZDer(extension)", sum == embedding.der_ext.space,
                   std::to_string(out.image_dim) + " + " + std::to_string(out.central_dim) + " vs " +
                       std::to_string(out.der_dim));
    bool ideal = true;
    auto ders = embedding.der_ext.maps();
    auto centrals = central.maps();
    for (std::size_t i = 0; i < ders.size() && ideal; ++i)
        for (std::size_t j = 0; j < centrals.size() && ideal; ++j)
            ideal = central.space.contains(map_coords(map_bracket(ders[i], centrals[j])));
    out.report.add("ZDer(extension) is an ideal of Der(extension)", ideal);
    return out;
}

} // namespace trilie
