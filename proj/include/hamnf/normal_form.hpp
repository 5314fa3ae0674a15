#pragma once

#include "hamnf/group.hpp"
#include "hamnf/matrix.hpp"
#include "hamnf/polynomial.hpp"
#include "hamnf/subspace.hpp"
#include "hamnf/symplectic.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hamnf {

/// Matrix of ξ -> {ξ, H2} on monomial_basis(2n, k).
struct AdOperator {
    unsigned degree = 0;
    std::size_t num_vars = 0;
    Matrix matrix;
    Poly h2;

    Poly apply(const Poly& xi) const;
};

/// Throws NonHomogeneous unless h2 is a quadratic form.
AdOperator ad_matrix(const Poly& h2, const SymplecticForm& omega, unsigned degree);

/// Rank checks for P^k = ad_{H2}(P^k) ⊕ ker ad_{H2_T}.
struct ComplementCertificate {
    std::size_t ambient_dim = 0;
    std::size_t image_rank = 0;
    std::size_t complement_dim = 0;
    bool dimensions_add_up = false;
    bool trivial_intersection = false;
    /// Whether ad_{H2_T} is the Fischer adjoint of ad_{H2}; reported, never assumed.
    bool fischer_adjoint = false;

    bool passed() const { return dimensions_add_up && trivial_intersection; }
};

struct ComplementResult {
    GradedSubspace subspace;
    AdOperator ad;
    ComplementCertificate certificate;
};

/// ker ad_{H2_T} on P^k, where H2_T is the quadratic with linear field L^T.
/// Throws NotHamiltonianMatrix if L is not in sp_ω, SNotSymplectic if L^T is
/// not, ComplementCertificateFailed if the direct sum does not hold.
ComplementResult complement_basis(const Matrix& l, const SymplecticForm& omega, unsigned degree);

/// Rank checks for P_{σ1σ2} = ad(P_{σ1}) ⊕ (ker ad_{H2_T} ∩ P_{σ1σ2}).
struct EquivariantCertificate {
    std::size_t dim_invariant = 0;       // dim P^k_{σ1σ2}(Γ)
    std::size_t dim_ad_constraint = 0;   // dim ad(P^k_{σ1}(Γ))
    std::size_t complement_dim = 0;
    bool image_inside = false;           // ad(P_{σ1}) ⊆ P_{σ1σ2}
    bool dimensions_add_up = false;
    bool trivial_intersection = false;

    bool passed() const { return image_inside && dimensions_add_up && trivial_intersection; }
};

struct EquivariantComplementResult {
    GradedSubspace subspace;
    GradedSubspace constraint;  // P^k_{σ1}(Γ), where generators ξ^k are sought
    ComplementResult plain;
    EquivariantCertificate certificate;
};

/// ker ad_{H2_T} ∩ P^k_{σ1σ2}(Γ). Requires a σ1-semisymplectic action and a
/// σ2-equivariant linear field x -> Lx (SymmetryHypothesisFailed otherwise).
EquivariantComplementResult equivariant_complement(const Matrix& l, const SymplecticForm& omega,
                                                   const FiniteSymmetryGroup& g, unsigned degree);

struct HomologicalSplit {
    unsigned degree = 0;
    Poly resonant;   // K^k
    Poly generator;  // ξ^k
    Poly removed;    // G^k = ad(ξ^k)
};

/// Splits Hk = G + K with K in `complement` and G = ad(ξ), ξ taken from
/// `constraint` when given. K is the projection onto `complement` along the
/// image of ad on the constraint; with no constraint and complement
/// ker ad_{H2_T} this is the Fischer-orthogonal projection.
HomologicalSplit homological_split(const Poly& hk, const AdOperator& ad, const GradedSubspace& complement,
                                   const std::optional<GradedSubspace>& constraint = std::nullopt);

/// Degree <= r part of Σ_m (1/m!) ad_ξ^m H with ad_ξ F = {F, ξ}.
Jet lie_transform(const Jet& h, const Poly& xi, const SymplecticForm& omega, unsigned order);

struct DegreeRecord {
    unsigned degree = 0;
    std::size_t ambient_dim = 0;
    GradedSubspace complement;
    ComplementCertificate certificate;
    std::optional<EquivariantCertificate> equivariant_certificate;
    HomologicalSplit split;
    bool bookkeeping = false;  // lower degrees unchanged, degree k moved by -ad ξ
};

struct SymmetryCertificate {
    SemisymplecticReport semisymplectic;
    bool hamiltonian_invariant = false;  // H is Γ_{σ1σ2}-invariant
    bool linear_part_equivariant = false;
    bool normal_form_invariant = false;  // K is Γ_{σ1σ2}-invariant
    bool field_equivariant = false;      // X_K is Γ_{σ2}-equivariant

    bool passed() const {
        return hamiltonian_invariant && linear_part_equivariant && normal_form_invariant && field_equivariant;
    }
};

struct NormalFormReport {
    Jet input;
    unsigned order = 0;
    Matrix linear_part;
    bool degenerate_linear_part = false;
    bool equivariant = false;
    std::vector<DegreeRecord> degrees;
    Jet normal_form;
    PolyVectorField field;  // X_K truncated at order r - 1
    std::optional<SymmetryCertificate> symmetry;

    bool certificates_passed() const;
};

/// Degree-by-degree normal form of H up to order r. Throws NonEquilibriumInput
/// if H has constant or linear terms.
NormalFormReport normal_form(const Jet& h, const SymplecticForm& omega, unsigned order);

/// As normal_form, with equivariant complements and σ1-invariant generators.
NormalFormReport equivariant_normal_form(const Jet& h, const SymplecticForm& omega, const FiniteSymmetryGroup& g,
                                         unsigned order);

} // namespace hamnf
