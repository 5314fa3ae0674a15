#include "hamnf/normal_form.hpp"

#include "hamnf/errors.hpp"

#include <future>
#include <string>

namespace hamnf {

namespace {

std::string deg(unsigned k) { return "degree " + std::to_string(k); }

Matrix fischer_weights(std::size_t num_vars, unsigned degree) {
    const auto basis = monomial_basis(num_vars, degree);
    Vector w;
    w.reserve(basis.size());
    for (const auto& m : basis)
        w.push_back(factorial_weight(m));
    return Matrix::diagonal(w);
}

Poly combine(const std::vector<Vector>& vectors, const Vector& coeffs, std::size_t offset, std::size_t count,
             std::size_t num_vars, unsigned degree) {
    Vector acc(homogeneous_dimension(num_vars, degree));
    for (std::size_t i = 0; i < count; ++i) {
        const Scalar& c = coeffs[offset + i];
        if (is_zero(c))
            continue;
        for (std::size_t j = 0; j < acc.size(); ++j)
            acc[j] += c * vectors[i][j];
    }
    return from_coordinates(acc, num_vars, degree);
}

} // namespace

Poly AdOperator::apply(const Poly& xi) const {
    return from_coordinates(matrix * coordinates(xi, degree), num_vars, degree);
}

AdOperator ad_matrix(const Poly& h2, const SymplecticForm& omega, unsigned degree) {
    require(h2.num_vars() == omega.dim(), ErrorKind::DimensionMismatch, "H2 variable count differs from omega size");
    require(h2.is_homogeneous(2), ErrorKind::NonHomogeneous, "ad operator needs a quadratic H2");
    const std::size_t n = omega.dim();
    // {ξ, H2} = <∇ξ, L x>
    const PolyVectorField lx = PolyVectorField::linear(linearization(h2, omega));
    const auto basis = monomial_basis(n, degree);
    std::vector<Vector> cols;
    cols.reserve(basis.size());
    for (const auto& m : basis) {
        const Poly xi = Poly::term(m, 1);
        Poly image(n);
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] > 0 && !lx.components[i].is_zero())
                image += derivative(xi, i) * lx.components[i];
        cols.push_back(coordinates(image, degree));
    }
    return AdOperator{degree, n, Matrix::from_columns(cols, basis.size()), h2};
}

ComplementResult complement_basis(const Matrix& l, const SymplecticForm& omega, unsigned degree) {
    require(l.is_square() && l.rows() == omega.dim(), ErrorKind::DimensionMismatch, "L size does not match omega");
    if (!is_hamiltonian_matrix(l, omega))
        fail(ErrorKind::NotHamiltonianMatrix, "L^T[omega] + [omega]L != 0: L is not in sp_omega");
    if (!is_hamiltonian_matrix(l.transpose(), omega))
        fail(ErrorKind::SNotSymplectic,
             "S not symplectic: L^T is not in sp_omega, so S = closure{exp(s L^T)} is not a subgroup of Sp_omega");

    const std::size_t n = omega.dim();
    ComplementResult out;
    out.ad = ad_matrix(quadratic_from_matrix(l, omega), omega, degree);
    const AdOperator ad_t = ad_matrix(quadratic_from_matrix(l.transpose(), omega), omega, degree);
    out.subspace = GradedSubspace::kernel(degree, n, ad_t.matrix);

    const GradedSubspace image = GradedSubspace::image(degree, n, out.ad.matrix);
    auto& c = out.certificate;
    c.ambient_dim = homogeneous_dimension(n, degree);
    c.image_rank = image.dim();
    c.complement_dim = out.subspace.dim();
    c.dimensions_add_up = c.image_rank + c.complement_dim == c.ambient_dim;
    c.trivial_intersection = intersect_subspaces(image, out.subspace).dim() == 0;
    // A* = D^-1 A^T D for the diagonal Fischer Gram matrix D
    const Matrix d = fischer_weights(n, degree);
    c.fischer_adjoint = d * ad_t.matrix == out.ad.matrix.transpose() * d;
    if (!c.passed())
        fail(ErrorKind::ComplementCertificateFailed,
             deg(degree) + ": rank(ad) = " + std::to_string(c.image_rank) + ", dim ker ad_T = " +
                 std::to_string(c.complement_dim) + ", dim P^k = " + std::to_string(c.ambient_dim) +
                 (c.trivial_intersection ? "" : ", image meets kernel"));
    return out;
}

EquivariantComplementResult equivariant_complement(const Matrix& l, const SymplecticForm& omega,
                                                   const FiniteSymmetryGroup& g, unsigned degree) {
    require(g.dim() == omega.dim(), ErrorKind::DimensionMismatch, "group and omega act on different dimensions");
    verify_semisymplectic(g, omega);
    if (!check_equivariance(PolyVectorField::linear(l), g, g.sigma2()))
        fail(ErrorKind::SymmetryHypothesisFailed, "linear field x -> Lx is not Gamma_sigma2-equivariant");

    const std::size_t n = omega.dim();
    EquivariantComplementResult out;
    out.plain = complement_basis(l, omega, degree);
    const GradedSubspace invariant = GradedSubspace::image(degree, n, reynolds_projection(g, g.sigma1_sigma2(), degree));
    out.constraint = GradedSubspace::image(degree, n, reynolds_projection(g, g.sigma1(), degree));
    out.subspace = intersect_subspaces(out.plain.subspace, invariant);

    const GradedSubspace ad_image = out.constraint.mapped(out.plain.ad.matrix);
    auto& c = out.certificate;
    c.dim_invariant = invariant.dim();
    c.dim_ad_constraint = ad_image.dim();
    c.complement_dim = out.subspace.dim();
    c.image_inside = invariant.contains(ad_image);
    c.dimensions_add_up = c.dim_ad_constraint + c.complement_dim == c.dim_invariant;
    c.trivial_intersection = intersect_subspaces(ad_image, out.subspace).dim() == 0;
    if (!c.passed())
        fail(ErrorKind::DecompositionCertificateFailed,
             deg(degree) + ": dim P_s1s2 = " + std::to_string(c.dim_invariant) + ", dim ad(P_s1) = " +
                 std::to_string(c.dim_ad_constraint) + ", dim complement = " + std::to_string(c.complement_dim) +
                 (c.image_inside ? "" : ", ad(P_s1) not inside P_s1s2") +
                 (c.trivial_intersection ? "" : ", image meets complement"));
    return out;
}

HomologicalSplit homological_split(const Poly& hk, const AdOperator& ad, const GradedSubspace& complement,
                                   const std::optional<GradedSubspace>& constraint) {
    const unsigned k = ad.degree;
    const std::size_t n = ad.num_vars;
    require(hk.num_vars() == n, ErrorKind::DimensionMismatch, "H^k variable count differs from ad operator");
    require(hk.is_homogeneous(k), ErrorKind::NonHomogeneous, "H^k is not homogeneous of " + deg(k));
    require(complement.degree() == k && complement.num_vars() == n, ErrorKind::DimensionMismatch,
            "complement lives in a different space");
    if (constraint)
        require(constraint->degree() == k && constraint->num_vars() == n, ErrorKind::DimensionMismatch,
                "constraint lives in a different space");
    const ErrorKind solve_error = constraint ? ErrorKind::EquivariantSolveFailed : ErrorKind::HomologicalSolveFailed;
    const std::size_t dim = homogeneous_dimension(n, k);

    std::vector<Vector> domain;
    if (constraint) {
        domain = constraint->basis_vectors();
    } else {
        for (std::size_t i = 0; i < dim; ++i) {
            Vector e(dim);
            e[i] = 1;
            domain.push_back(std::move(e));
        }
    }
    std::vector<Vector> images;
    images.reserve(domain.size());
    for (const auto& v : domain)
        images.push_back(ad.matrix * v);

    // Hk = Σ a_i ad(v_i) + Σ b_j c_j; the c-part is K^k
    const auto comp = complement.basis_vectors();
    std::vector<Vector> cols = images;
    cols.insert(cols.end(), comp.begin(), comp.end());
    const Vector h = coordinates(hk, k);
    const auto coeffs = solve_particular(Matrix::from_columns(cols, dim), h);
    if (!coeffs)
        fail(solve_error, deg(k) + ": H^k is not in ad(domain) + complement");

    HomologicalSplit out;
    out.degree = k;
    out.resonant = combine(comp, *coeffs, images.size(), comp.size(), n, k);
    out.removed = hk - out.resonant;

    const auto a = solve_particular(Matrix::from_columns(images, dim), coordinates(out.removed, k));
    if (!a)
        fail(solve_error, deg(k) + ": homological equation ad(xi) = G has no solution in the domain");
    out.generator = combine(domain, *a, 0, domain.size(), n, k);

    if (ad.apply(out.generator) != out.removed || !complement.contains(out.resonant))
        fail(solve_error, deg(k) + ": split identities do not hold");
    return out;
}

Jet lie_transform(const Jet& h, const Poly& xi, const SymplecticForm& omega, unsigned order) {
    require(h.num_vars() == omega.dim() && xi.num_vars() == omega.dim(), ErrorKind::DimensionMismatch,
            "Lie transform operands differ in variable count");
    Poly result = h.poly.truncated(order);
    if (xi.is_zero())
        return Jet(result, order);
    require(xi.degree() >= 3 && xi.is_homogeneous(static_cast<unsigned>(xi.degree())), ErrorKind::InvalidArgument,
            "Lie transform generator must be homogeneous of degree >= 3");
    Poly term = result;
    for (unsigned long m = 1; !term.is_zero(); ++m) {
        term = poisson(term, xi, omega).truncated(order) * Scalar(1, m);
        result += term;
    }
    return Jet(result, order);
}

bool NormalFormReport::certificates_passed() const {
    for (const auto& d : degrees) {
        if (!d.certificate.passed() || !d.bookkeeping)
            return false;
        if (d.equivariant_certificate && !d.equivariant_certificate->passed())
            return false;
    }
    return !symmetry || symmetry->passed();
}

namespace {

struct DegreeData {
    ComplementResult plain;
    std::optional<EquivariantComplementResult> equivariant;
};

NormalFormReport run_pipeline(const Jet& h, const SymplecticForm& omega, const FiniteSymmetryGroup* g,
                              unsigned order) {
    const std::size_t n = omega.dim();
    require(h.num_vars() == n, ErrorKind::DimensionMismatch,
            "Hamiltonian has " + std::to_string(h.num_vars()) + " variables, omega has size " + std::to_string(n));
    require(order >= 2, ErrorKind::InvalidArgument, "order must be at least 2");
    const Poly input = h.poly.truncated(order);
    if (!input.is_zero() && input.min_degree() < 2)
        fail(ErrorKind::NonEquilibriumInput, "H has constant or linear terms; the origin must be an equilibrium");

    NormalFormReport report;
    report.input = Jet(input, order);
    report.order = order;
    report.equivariant = g != nullptr;
    const Poly h2 = input.homogeneous_part(2);
    report.linear_part = linearization(h2, omega);
    report.degenerate_linear_part = report.linear_part.is_zero();

    if (g) {
        require(g->dim() == n, ErrorKind::DimensionMismatch, "group and omega act on different dimensions");
        SymmetryCertificate sym;
        try {
            sym.semisymplectic = verify_semisymplectic(*g, omega);
        } catch (const Error& e) {
            fail(ErrorKind::SymmetryHypothesisFailed, std::string("action is not sigma1-semisymplectic: ") + e.what());
        }
        sym.hamiltonian_invariant = check_invariance(input, *g, g->sigma1_sigma2());
        if (!sym.hamiltonian_invariant)
            fail(ErrorKind::SymmetryHypothesisFailed, "H is not Gamma_{sigma1 sigma2}-invariant");
        sym.linear_part_equivariant = check_equivariance(PolyVectorField::linear(report.linear_part), *g, g->sigma2());
        if (!sym.linear_part_equivariant)
            fail(ErrorKind::SymmetryHypothesisFailed, "linear part L is not Gamma_sigma2-equivariant");
        report.symmetry = std::move(sym);
    }

    // complements for distinct degrees are independent; collect in degree order
    std::vector<std::future<DegreeData>> pending;
    for (unsigned k = 3; k <= order; ++k)
        pending.push_back(std::async(std::launch::async, [&, k] {
            DegreeData d;
            if (g) {
                d.equivariant = equivariant_complement(report.linear_part, omega, *g, k);
                d.plain = d.equivariant->plain;
            } else {
                d.plain = complement_basis(report.linear_part, omega, k);
            }
            return d;
        }));
    std::vector<DegreeData> data;
    std::exception_ptr first_error;
    for (auto& f : pending) {
        try {
            data.push_back(f.get());
        } catch (...) {
            if (!first_error)
                first_error = std::current_exception();
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);

    Jet current = report.input;
    Poly k_sum = h2;
    for (unsigned k = 3; k <= order; ++k) {
        const DegreeData& d = data[k - 3];
        DegreeRecord rec;
        rec.degree = k;
        rec.ambient_dim = d.plain.certificate.ambient_dim;
        rec.certificate = d.plain.certificate;
        std::optional<GradedSubspace> constraint;
        if (d.equivariant) {
            rec.complement = d.equivariant->subspace;
            rec.equivariant_certificate = d.equivariant->certificate;
            constraint = d.equivariant->constraint;
        } else {
            rec.complement = d.plain.subspace;
        }

        const Poly hk = current.poly.homogeneous_part(k);
        rec.split = homological_split(hk, d.plain.ad, rec.complement, constraint);
        const Jet next = lie_transform(current, rec.split.generator, omega, order);

        rec.bookkeeping = next.poly.homogeneous_part(k) == hk - d.plain.ad.apply(rec.split.generator);
        for (unsigned j = 0; j < k && rec.bookkeeping; ++j)
            rec.bookkeeping = next.poly.homogeneous_part(j) == current.poly.homogeneous_part(j);
        if (!rec.bookkeeping)
            fail(ErrorKind::HomologicalSolveFailed, deg(k) + ": Lie transform bookkeeping failed");

        k_sum += rec.split.resonant;
        current = next;
        report.degrees.push_back(std::move(rec));
    }

    if (current.poly != k_sum)
        fail(ErrorKind::HomologicalSolveFailed, "normal form differs from H2 plus the resonant parts");
    report.normal_form = current;
    report.field = hamiltonian_field(current.poly, omega).truncated(order - 1);

    if (g) {
        auto& sym = *report.symmetry;
        sym.normal_form_invariant = check_invariance(current.poly, *g, g->sigma1_sigma2());
        sym.field_equivariant = check_equivariance(report.field, *g, g->sigma2());
        if (!sym.normal_form_invariant || !sym.field_equivariant)
            fail(ErrorKind::DecompositionCertificateFailed, "normal form does not preserve the symmetries of H");
    }
    return report;
}

} // namespace

NormalFormReport normal_form(const Jet& h, const SymplecticForm& omega, unsigned order) {
    return run_pipeline(h, omega, nullptr, order);
}

NormalFormReport equivariant_normal_form(const Jet& h, const SymplecticForm& omega, const FiniteSymmetryGroup& g,
                                         unsigned order) {
    return run_pipeline(h, omega, &g, order);
}

} // namespace hamnf
