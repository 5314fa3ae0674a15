#pragma once

#include "hamnf/matrix.hpp"
#include "hamnf/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace hamnf {

/// Subspace of the degree-k forms in n variables, stored as the reduced
/// row-echelon basis of its row space over monomial_basis(n, k). The
/// representation is canonical: equal subspaces have identical rows.
class GradedSubspace {
public:
    GradedSubspace() = default;

    /// Row space of `rows` (any spanning set; zero rows allowed).
    GradedSubspace(unsigned degree, std::size_t num_vars, const Matrix& rows);

    static GradedSubspace zero(unsigned degree, std::size_t num_vars);
    static GradedSubspace full(unsigned degree, std::size_t num_vars);
    static GradedSubspace span(unsigned degree, std::size_t num_vars, const std::vector<Poly>& polys);
    static GradedSubspace span_vectors(unsigned degree, std::size_t num_vars, const std::vector<Vector>& vectors);
    /// Column space of an operator given on monomial coordinates.
    static GradedSubspace image(unsigned degree, std::size_t num_vars, const Matrix& op);
    /// Null space of an operator given on monomial coordinates.
    static GradedSubspace kernel(unsigned degree, std::size_t num_vars, const Matrix& op);

    unsigned degree() const noexcept { return degree_; }
    std::size_t num_vars() const noexcept { return num_vars_; }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis_rows() const noexcept { return basis_; }

    std::vector<Vector> basis_vectors() const;
    std::vector<Poly> basis_polys() const;

    bool contains(const Vector& v) const;
    bool contains(const Poly& p) const;
    bool contains(const GradedSubspace& other) const;

    /// Image of this subspace under an operator on monomial coordinates.
    GradedSubspace mapped(const Matrix& op) const;

    bool operator==(const GradedSubspace& other) const = default;

private:
    unsigned degree_ = 0;
    std::size_t num_vars_ = 0;
    Matrix basis_;
};

GradedSubspace sum_subspaces(const GradedSubspace& a, const GradedSubspace& b);
/// Canonical row space of A ∩ B. Throws Error(DimensionMismatch) when the
/// ambient spaces differ.
GradedSubspace intersect_subspaces(const GradedSubspace& a, const GradedSubspace& b);

} // namespace hamnf
