#pragma once

#include "hamnf/matrix.hpp"
#include "hamnf/polynomial.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace hamnf {

/// Matrix [ω] of a symplectic form: skew-symmetric and invertible, of even
/// size 2n. Any such rational matrix is accepted, not only the canonical J.
class SymplecticForm {
public:
    /// Throws Error(ValidationError) if the matrix is not square of even
    /// size, not skew-symmetric, or singular.
    explicit SymplecticForm(Matrix omega);

    /// The canonical J = [[0, I], [-I, 0]] on R^(2n).
    static SymplecticForm canonical(std::size_t dim_half);

    const Matrix& matrix() const noexcept { return omega_; }
    std::size_t dim() const noexcept { return omega_.rows(); }
    std::size_t dim_half() const noexcept { return omega_.rows() / 2; }
    /// ([ω]^{-1})^T, the matrix taking ∇H to X_H.
    const Matrix& field_matrix() const noexcept { return field_matrix_; }

    bool operator==(const SymplecticForm& other) const { return omega_ == other.omega_; }

private:
    Matrix omega_;
    Matrix field_matrix_;
};

enum class MatrixClass { Symplectic, Antisymplectic, Neither };

std::string_view to_string(MatrixClass c);

/// Polynomial vector field x -> (F_1(x), ..., F_m(x)).
struct PolyVectorField {
    std::vector<Poly> components;

    std::size_t dim() const noexcept { return components.size(); }
    bool is_zero() const;
    bool operator==(const PolyVectorField& other) const = default;

    /// Linear field x -> A x.
    static PolyVectorField linear(const Matrix& a);
    static PolyVectorField zero(std::size_t dim);

    PolyVectorField truncated(unsigned order) const;
};

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);

/// (dF)·G: the derivative of F applied to G.
PolyVectorField directional_derivative(const PolyVectorField& f, const PolyVectorField& g);

/// Lie bracket [A, B] = (dB)·A - (dA)·B.
PolyVectorField lie_bracket(const PolyVectorField& a, const PolyVectorField& b);

/// Symplectic iff B^T[ω]B = [ω]; antisymplectic iff B^T[ω]B = -[ω].
MatrixClass classify_matrix(const Matrix& b, const SymplecticForm& omega);

/// True iff L^T[ω] + [ω]L = 0.
bool is_hamiltonian_matrix(const Matrix& l, const SymplecticForm& omega);

/// X_H = ([ω]^{-1})^T ∇H.
PolyVectorField hamiltonian_field(const Poly& h, const SymplecticForm& omega);

/// {F, G} = <∇F, X_G>.
Poly poisson(const Poly& f, const Poly& g, const SymplecticForm& omega);

/// The quadratic Q(x) = ½ x^T [ω]^T A x whose Hamiltonian field is x -> A x.
/// Throws Error(NotHamiltonianMatrix) when A^T[ω] + [ω]A != 0.
Poly quadratic_from_matrix(const Matrix& a, const SymplecticForm& omega);

/// Linear part L of X_H for a quadratic H: L = ([ω]^{-1})^T Hess(H).
/// Throws Error(NonHomogeneous) unless h is a quadratic form.
Matrix linearization(const Poly& h2, const SymplecticForm& omega);

} // namespace hamnf
