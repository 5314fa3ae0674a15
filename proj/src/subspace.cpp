#include "hamnf/subspace.hpp"

#include "hamnf/errors.hpp"

#include <string>

namespace hamnf {

namespace {

Matrix canonical_rows(const Matrix& rows) {
    const RowEchelon e = rref(rows);
    Matrix out(e.rank(), rows.cols());
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j)
            out(i, j) = e.reduced(i, j);
    return out;
}

void check_same_ambient(const GradedSubspace& a, const GradedSubspace& b) {
    if (a.degree() != b.degree() || a.num_vars() != b.num_vars())
        fail(ErrorKind::DimensionMismatch,
             "subspaces live in different spaces (degree " + std::to_string(a.degree()) + " vs " +
                 std::to_string(b.degree()) + ", vars " + std::to_string(a.num_vars()) + " vs " +
                 std::to_string(b.num_vars()) + ")");
}

} // namespace

GradedSubspace::GradedSubspace(unsigned degree, std::size_t num_vars, const Matrix& rows)
    : degree_(degree), num_vars_(num_vars) {
    const std::size_t n = homogeneous_dimension(num_vars, degree);
    require(rows.cols() == n, ErrorKind::DimensionMismatch,
            "spanning rows have " + std::to_string(rows.cols()) + " columns, expected " + std::to_string(n));
    basis_ = canonical_rows(rows);
}

GradedSubspace GradedSubspace::zero(unsigned degree, std::size_t num_vars) {
    return GradedSubspace(degree, num_vars, Matrix(0, homogeneous_dimension(num_vars, degree)));
}

GradedSubspace GradedSubspace::full(unsigned degree, std::size_t num_vars) {
    return GradedSubspace(degree, num_vars, Matrix::identity(homogeneous_dimension(num_vars, degree)));
}

GradedSubspace GradedSubspace::span(unsigned degree, std::size_t num_vars, const std::vector<Poly>& polys) {
    std::vector<Vector> rows;
    rows.reserve(polys.size());
    for (const auto& p : polys) {
        require(p.num_vars() == num_vars, ErrorKind::DimensionMismatch, "polynomial variable count");
        rows.push_back(coordinates(p, degree));
    }
    return span_vectors(degree, num_vars, rows);
}

GradedSubspace GradedSubspace::span_vectors(unsigned degree, std::size_t num_vars, const std::vector<Vector>& vectors) {
    return GradedSubspace(degree, num_vars, Matrix::from_rows(vectors, homogeneous_dimension(num_vars, degree)));
}

GradedSubspace GradedSubspace::image(unsigned degree, std::size_t num_vars, const Matrix& op) {
    return GradedSubspace(degree, num_vars, op.transpose());
}

GradedSubspace GradedSubspace::kernel(unsigned degree, std::size_t num_vars, const Matrix& op) {
    return span_vectors(degree, num_vars, nullspace(op));
}

std::vector<Vector> GradedSubspace::basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out.push_back(basis_.row(i));
    return out;
}

std::vector<Poly> GradedSubspace::basis_polys() const {
    std::vector<Poly> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out.push_back(from_coordinates(basis_.row(i), num_vars_, degree_));
    return out;
}

bool GradedSubspace::contains(const Vector& v) const {
    require(v.size() == ambient_dim(), ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
    // v lies in the row space iff eliminating with the RREF pivots leaves zero
    Vector r = v;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ambient_dim() && row < dim(); ++col) {
        if (is_zero(basis_(row, col)))
            continue;
        if (!is_zero(r[col])) {
            const Scalar f = r[col];
            for (std::size_t j = col; j < ambient_dim(); ++j)
                r[j] -= f * basis_(row, j);
        }
        ++row;
    }
    return is_zero_vector(r);
}

bool GradedSubspace::contains(const Poly& p) const {
    require(p.num_vars() == num_vars_, ErrorKind::DimensionMismatch, "polynomial variable count");
    if (!p.is_homogeneous(degree_))
        return false;
    return contains(coordinates(p, degree_));
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
    check_same_ambient(*this, other);
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i)))
            return false;
    return true;
}

GradedSubspace GradedSubspace::mapped(const Matrix& op) const {
    require(op.is_square() && op.cols() == ambient_dim(), ErrorKind::DimensionMismatch, "operator shape");
    return GradedSubspace(degree_, num_vars_, basis_ * op.transpose());
}

GradedSubspace sum_subspaces(const GradedSubspace& a, const GradedSubspace& b) {
    check_same_ambient(a, b);
    Matrix stacked(a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient_dim(); ++j)
            stacked(i, j) = a.basis_rows()(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.ambient_dim(); ++j)
            stacked(a.dim() + i, j) = b.basis_rows()(i, j);
    return GradedSubspace(a.degree(), a.num_vars(), stacked);
}

GradedSubspace intersect_subspaces(const GradedSubspace& a, const GradedSubspace& b) {
    check_same_ambient(a, b);
    if (a.dim() == 0 || b.dim() == 0)
        return GradedSubspace::zero(a.degree(), a.num_vars());
    // (s, t) with s·A = t·B; the intersection is spanned by the s·A
    const std::size_t n = a.ambient_dim();
    Matrix system(n, a.dim() + b.dim());
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < a.dim(); ++i)
            system(j, i) = a.basis_rows()(i, j);
        for (std::size_t i = 0; i < b.dim(); ++i)
            system(j, a.dim() + i) = -b.basis_rows()(i, j);
    }
    std::vector<Vector> rows;
    for (const auto& null : nullspace(system)) {
        Vector v(n);
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!is_zero(null[i]))
                for (std::size_t j = 0; j < n; ++j)
                    v[j] += null[i] * a.basis_rows()(i, j);
        rows.push_back(std::move(v));
    }
    return GradedSubspace::span_vectors(a.degree(), a.num_vars(), rows);
}

} // namespace hamnf
