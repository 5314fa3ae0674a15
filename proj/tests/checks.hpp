// Structural checks shared by the property suite and the acceptance binary.
// Each returns true when the identity holds exactly.
#pragma once

#include "fixtures.hpp"

#include "hamnf/normal_form.hpp"
#include "hamnf/subspace.hpp"

#include <algorithm>
#include <optional>

namespace chk {

using namespace hamnf;

inline bool poisson_identities(fx::Random& rnd, const SymplecticForm& w, unsigned max_degree = 4) {
    const std::size_t n = w.dim();
    const Poly f = rnd.poly(n, max_degree, 1), g = rnd.poly(n, max_degree, 1), h = rnd.poly(n, max_degree, 1);
    const Scalar a = rnd.scalar(), b = rnd.scalar();
    const auto br = [&](const Poly& p, const Poly& q) { return poisson(p, q, w); };

    const bool antisymmetry = br(f, g) == -br(g, f);
    const bool bilinear = br(f * a + g * b, h) == br(f, h) * a + br(g, h) * b;
    const bool leibniz = br(f * g, h) == f * br(g, h) + g * br(f, h);
    const bool jacobi = (br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))).is_zero();
    const bool fields =
        hamiltonian_field(br(f, g), w) == lie_bracket(hamiltonian_field(g, w), hamiltonian_field(f, w));
    return antisymmetry && bilinear && leibniz && jacobi && fields;
}

/// Symplectic transvection x -> x + c ω(v, x) v.
inline Matrix transvection(fx::Random& rnd, const SymplecticForm& w) {
    const std::size_t n = w.dim();
    Matrix v(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        v(i, 0) = rnd.scalar(2);
    return Matrix::identity(n) + v * v.transpose() * w.matrix() * rnd.scalar(2);
}

inline Matrix random_symplectic(fx::Random& rnd, const SymplecticForm& w) {
    Matrix m = Matrix::identity(w.dim());
    for (int i = 0; i < 3; ++i)
        m = m * transvection(rnd, w);
    return m;
}

inline bool reynolds_idempotent(const FiniteSymmetryGroup& g, const Character& chi, unsigned k) {
    const Matrix r = reynolds_projection(g, chi, k);
    return r * r == r;
}

/// The coset form (1/|Γ|) Σ_δ Σ_{γ ∈ Γ++} χ(δ) (δγ)* agrees with the single average.
inline bool reynolds_coset_form(const FiniteSymmetryGroup& g, const Character& chi, unsigned k) {
    const CosetStructure cs = coset_structure(g);
    std::vector<std::size_t> reps{g.identity_index()};
    for (const auto& d : {cs.delta1, cs.delta2, cs.delta3})
        if (d)
            reps.push_back(*d);
    const std::size_t dim = homogeneous_dimension(g.dim(), k);
    Matrix acc(dim, dim);
    for (std::size_t d : reps)
        for (std::size_t gi : cs.gamma_pp)
            acc += pullback_matrix(g.element(g.product(d, gi)), k) * Scalar(chi[d]);
    acc *= Scalar(1) / Scalar(static_cast<long>(g.order()));
    return reps.size() * cs.gamma_pp.size() == g.order() && acc == reynolds_projection(g, chi, k);
}

inline bool image_invariant(const FiniteSymmetryGroup& g, unsigned k) {
    const Matrix r = reynolds_projection(g, g.trivial_character(), k);
    for (const Poly& p : GradedSubspace::image(k, g.dim(), r).basis_polys())
        if (!check_invariance(p, g, g.trivial_character()))
            return false;
    return true;
}

/// π∘ad = ad∘π̄ with π, π̄ the σ1σ2 and σ1 averages.
inline bool projection_interchange(const FiniteSymmetryGroup& g, const Matrix& l, const SymplecticForm& w, unsigned k) {
    const Matrix ad = ad_matrix(quadratic_from_matrix(l, w), w, k).matrix;
    return reynolds_projection(g, g.sigma1_sigma2(), k) * ad == ad * reynolds_projection(g, g.sigma1(), k);
}

/// ad(γ*F) = σ2(γ) γ*ad(F) for every γ.
inline bool ad_equivariant(const FiniteSymmetryGroup& g, const Matrix& l, const SymplecticForm& w, unsigned k) {
    const Matrix ad = ad_matrix(quadratic_from_matrix(l, w), w, k).matrix;
    for (std::size_t i = 0; i < g.order(); ++i) {
        const Matrix p = pullback_matrix(g.element(i), k);
        if (ad * p != p * ad * Scalar(g.sigma2()[i]))
            return false;
    }
    return true;
}

/// π applied to ker ad_{H2_T} gives the equivariant complement.
inline bool reynolds_kernel_consistent(const FiniteSymmetryGroup& g, const Matrix& l, const SymplecticForm& w,
                                       unsigned k) {
    const GradedSubspace plain = complement_basis(l, w, k).subspace;
    const GradedSubspace projected = plain.mapped(reynolds_projection(g, g.sigma1_sigma2(), k));
    return projected == equivariant_complement(l, w, g, k).subspace;
}

inline bool direct_sum_certificates(const FiniteSymmetryGroup& g, const Matrix& l, const SymplecticForm& w, unsigned k) {
    const auto e = equivariant_complement(l, w, g, k);
    return e.plain.certificate.passed() && e.certificate.passed();
}

/// Both directions of invariance-to-equivariance transfer on one random polynomial.
inline bool invariance_transfer(fx::Random& rnd, const FiniteSymmetryGroup& g, const SymplecticForm& w, unsigned k) {
    const std::size_t n = w.dim();
    const Vector raw = coordinates(rnd.homogeneous(n, k), k);
    const Poly h12 = from_coordinates(reynolds_projection(g, g.sigma1_sigma2(), k) * raw, n, k);
    const Poly h2 = from_coordinates(reynolds_projection(g, g.sigma2(), k) * raw, n, k);
    return check_invariance(h12, g, g.sigma1_sigma2()) && check_equivariance(hamiltonian_field(h12, w), g, g.sigma2()) &&
           check_invariance(h2, g, g.sigma2()) && check_equivariance(hamiltonian_field(h2, w), g, g.sigma1_sigma2());
}

/// Independent dense kernel: plain Gauss-Jordan on a copy, no shared helpers.
inline std::vector<Vector> dense_kernel(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0)
            ++p;
        if (p == rows)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(m(r, j), m(p, j));
        const Scalar inv = 1 / m(r, c);
        for (std::size_t j = 0; j < cols; ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && sgn(m(i, c)) != 0) {
                const Scalar f = m(i, c);
                for (std::size_t j = 0; j < cols; ++j)
                    m(i, j) -= f * m(r, j);
            }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<Vector> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end())
            continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -m(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

/// complement_basis against a kernel of ad_{H2_T} built from poisson() and dense_kernel.
inline bool complement_matches_oracle(const Matrix& l, const SymplecticForm& w, unsigned k) {
    const std::size_t n = w.dim();
    const Poly h2t = quadratic_from_matrix(l.transpose(), w);
    const auto basis = monomial_basis(n, k);
    Matrix op(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const Vector c = coordinates(poisson(Poly::term(basis[j], 1), h2t, w), k);
        for (std::size_t i = 0; i < c.size(); ++i)
            op(i, j) = c[i];
    }
    const GradedSubspace lib = complement_basis(l, w, k).subspace;
    if (!(lib == GradedSubspace::span_vectors(k, n, dense_kernel(op))))
        return false;
    for (const Poly& f : lib.basis_polys())
        if (!poisson(f, h2t, w).is_zero())
            return false;
    return true;
}

/// One random normal-form run: every Lie transform keeps lower degrees and
/// moves degree k by -ad(ξ^k); every K^k lies in its certified complement.
inline bool bookkeeping_trial(fx::Random& rnd, const SymplecticForm& w, const Matrix& l, unsigned order) {
    const std::size_t n = w.dim();
    const Poly h2 = quadratic_from_matrix(l, w);
    const Poly h = h2 + rnd.poly(n, order, 3);
    const NormalFormReport r = normal_form(Jet(h, order), w, order);

    Jet current(h, order);
    for (const auto& d : r.degrees) {
        const Jet next = lie_transform(current, d.split.generator, w, order);
        for (unsigned j = 0; j < d.degree; ++j)
            if (next.poly.homogeneous_part(j) != current.poly.homogeneous_part(j))
                return false;
        const AdOperator ad = ad_matrix(h2, w, d.degree);
        if (next.poly.homogeneous_part(d.degree) != current.poly.homogeneous_part(d.degree) - ad.apply(d.split.generator))
            return false;
        if (!d.bookkeeping || !d.complement.contains(d.split.resonant) ||
            !(d.complement == complement_basis(l, w, d.degree).subspace))
            return false;
        current = next;
    }
    return current == r.normal_form && r.certificates_passed();
}

} // namespace chk
