#include "hamnf/symplectic.hpp"

#include "hamnf/errors.hpp"

#include <string>
#include <utility>

namespace hamnf {

SymplecticForm::SymplecticForm(Matrix omega) : omega_(std::move(omega)) {
    require(omega_.is_square(), ErrorKind::ValidationError, "omega not square");
    require(omega_.rows() > 0 && omega_.rows() % 2 == 0, ErrorKind::ValidationError, "omega must have even positive size");
    require(omega_.transpose() == -omega_, ErrorKind::ValidationError, "omega not skew-symmetric");
    if (is_zero(determinant(omega_)))
        fail(ErrorKind::ValidationError, "omega not invertible");
    field_matrix_ = inverse(omega_).transpose();
}

SymplecticForm SymplecticForm::canonical(std::size_t dim_half) {
    Matrix j(2 * dim_half, 2 * dim_half);
    for (std::size_t i = 0; i < dim_half; ++i) {
        j(i, dim_half + i) = 1;
        j(dim_half + i, i) = -1;
    }
    return SymplecticForm(std::move(j));
}

std::string_view to_string(MatrixClass c) {
    switch (c) {
    case MatrixClass::Symplectic: return "Symplectic";
    case MatrixClass::Antisymplectic: return "Antisymplectic";
    case MatrixClass::Neither: return "Neither";
    }
    return "Neither";
}

// ---------------------------------------------------------------- fields

bool PolyVectorField::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero())
            return false;
    return true;
}

PolyVectorField PolyVectorField::linear(const Matrix& a) {
    require(a.is_square(), ErrorKind::DimensionMismatch, "linear field needs a square matrix");
    const std::size_t n = a.rows();
    PolyVectorField f;
    for (std::size_t i = 0; i < n; ++i) {
        Poly p(n);
        for (std::size_t j = 0; j < n; ++j)
            p.add_term(Monomial::variable(n, j), a(i, j));
        f.components.push_back(std::move(p));
    }
    return f;
}

PolyVectorField PolyVectorField::zero(std::size_t dim) {
    return PolyVectorField{std::vector<Poly>(dim, Poly(dim))};
}

PolyVectorField PolyVectorField::truncated(unsigned order) const {
    PolyVectorField out;
    for (const auto& c : components)
        out.components.push_back(c.truncated(order));
    return out;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
    require(a.dim() == b.dim(), ErrorKind::DimensionMismatch, "vector field dimension");
    PolyVectorField out = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        out.components[i] += b.components[i];
    return out;
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
    require(a.dim() == b.dim(), ErrorKind::DimensionMismatch, "vector field dimension");
    PolyVectorField out = a;
    for (std::size_t i = 0; i < a.dim(); ++i)
        out.components[i] -= b.components[i];
    return out;
}

PolyVectorField directional_derivative(const PolyVectorField& f, const PolyVectorField& g) {
    require(f.dim() == g.dim(), ErrorKind::DimensionMismatch, "vector field dimension");
    PolyVectorField out;
    for (const auto& fi : f.components) {
        require(fi.num_vars() == g.dim(), ErrorKind::DimensionMismatch, "field component variable count");
        Poly acc(fi.num_vars());
        for (std::size_t j = 0; j < g.dim(); ++j)
            acc += derivative(fi, j) * g.components[j];
        out.components.push_back(std::move(acc));
    }
    return out;
}

PolyVectorField lie_bracket(const PolyVectorField& a, const PolyVectorField& b) {
    return directional_derivative(b, a) - directional_derivative(a, b);
}

// ---------------------------------------------------------------- predicates

MatrixClass classify_matrix(const Matrix& b, const SymplecticForm& omega) {
    require(b.is_square() && b.rows() == omega.dim(), ErrorKind::DimensionMismatch,
            "matrix size " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " does not match omega of size " +
                std::to_string(omega.dim()));
    const Matrix pulled = b.transpose() * omega.matrix() * b;
    if (pulled == omega.matrix())
        return MatrixClass::Symplectic;
    if (pulled == -omega.matrix())
        return MatrixClass::Antisymplectic;
    return MatrixClass::Neither;
}

bool is_hamiltonian_matrix(const Matrix& l, const SymplecticForm& omega) {
    require(l.is_square() && l.rows() == omega.dim(), ErrorKind::DimensionMismatch, "matrix size does not match omega");
    return (l.transpose() * omega.matrix() + omega.matrix() * l).is_zero();
}

PolyVectorField hamiltonian_field(const Poly& h, const SymplecticForm& omega) {
    require(h.num_vars() == omega.dim(), ErrorKind::DimensionMismatch,
            "Hamiltonian has " + std::to_string(h.num_vars()) + " variables, omega has size " + std::to_string(omega.dim()));
    const auto grad = gradient(h);
    const Matrix& m = omega.field_matrix();
    PolyVectorField x;
    for (std::size_t i = 0; i < grad.size(); ++i) {
        Poly c(h.num_vars());
        for (std::size_t j = 0; j < grad.size(); ++j)
            if (!is_zero(m(i, j)))
                c += grad[j] * m(i, j);
        x.components.push_back(std::move(c));
    }
    return x;
}

Poly poisson(const Poly& f, const Poly& g, const SymplecticForm& omega) {
    require(f.num_vars() == g.num_vars(), ErrorKind::DimensionMismatch, "Poisson bracket operands differ in variable count");
    const auto grad_f = gradient(f);
    const auto xg = hamiltonian_field(g, omega);
    Poly out(f.num_vars());
    for (std::size_t i = 0; i < grad_f.size(); ++i)
        if (!grad_f[i].is_zero() && !xg.components[i].is_zero())
            out += grad_f[i] * xg.components[i];
    return out;
}

Poly quadratic_from_matrix(const Matrix& a, const SymplecticForm& omega) {
    require(a.is_square() && a.rows() == omega.dim(), ErrorKind::DimensionMismatch, "matrix size does not match omega");
    const Matrix s = omega.matrix().transpose() * a;
    if (s.transpose() != s)
        fail(ErrorKind::NotHamiltonianMatrix, "A^T[omega] + [omega]A != 0, so [omega]^T A is not symmetric");
    const std::size_t n = a.rows();
    Poly q(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (is_zero(s(i, j)))
                continue;
            // ½ x^T S x: diagonal terms carry ½, off-diagonal pairs combine to S_ij
            const Scalar c = i == j ? Scalar(s(i, j) / 2) : s(i, j);
            q.add_term(Monomial::variable(n, i) * Monomial::variable(n, j), c);
        }
    return q;
}

Matrix linearization(const Poly& h2, const SymplecticForm& omega) {
    require(h2.num_vars() == omega.dim(), ErrorKind::DimensionMismatch, "quadratic form variable count");
    require(h2.is_homogeneous(2), ErrorKind::NonHomogeneous, "linear part requires a quadratic form");
    const std::size_t n = h2.num_vars();
    Matrix hess(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Poly d = derivative(derivative(h2, i), j);
            hess(i, j) = d.coefficient(Monomial::one(n));
        }
    return omega.field_matrix() * hess;
}

} // namespace hamnf
