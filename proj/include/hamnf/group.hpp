#pragma once

#include "hamnf/matrix.hpp"
#include "hamnf/polynomial.hpp"
#include "hamnf/symplectic.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

namespace hamnf {

/// A Z2-valued function on the elements of a finite group, indexed like
/// FiniteSymmetryGroup::elements(). Values are +1 or -1.
using Character = std::vector<int>;

/// Generator of a matrix group with its prescribed signs (σ1(g), σ2(g)).
struct SignedGenerator {
    Matrix matrix;
    int s1 = 1;
    int s2 = 1;
};

/// Finite group of invertible 2n x 2n matrices acting linearly, together with
/// two sign homomorphisms σ1, σ2 : Γ -> Z2. Element 0 is the identity.
class FiniteSymmetryGroup {
public:
    std::size_t order() const noexcept { return elements_.size(); }
    std::size_t dim() const noexcept { return elements_.empty() ? 0 : elements_.front().rows(); }
    const std::vector<Matrix>& elements() const noexcept { return elements_; }
    const Matrix& element(std::size_t i) const { return elements_.at(i); }
    std::size_t identity_index() const noexcept { return 0; }
    std::size_t product(std::size_t i, std::size_t j) const { return mul_table_[i][j]; }
    std::size_t inverse(std::size_t i) const { return inverse_[i]; }

    const Character& sigma1() const noexcept { return sigma1_; }
    const Character& sigma2() const noexcept { return sigma2_; }
    Character sigma1_sigma2() const;
    Character trivial_character() const { return Character(order(), 1); }

    /// Whether chi is ±1-valued and multiplicative over the multiplication table.
    bool is_multiplicative(const Character& chi) const;

    /// The trivial group {I} acting on R^dim.
    static FiniteSymmetryGroup trivial(std::size_t dim);

private:
    friend FiniteSymmetryGroup generate_group(const std::vector<SignedGenerator>&, std::size_t);

    std::vector<Matrix> elements_;
    std::vector<std::vector<std::size_t>> mul_table_;
    std::vector<std::size_t> inverse_;
    Character sigma1_;
    Character sigma2_;
};

/// Breadth-first closure of the generators under products, with signs
/// propagated multiplicatively. Errors: SingularGenerator, ClosureExceeded,
/// InconsistentSigns (message names the offending product), DimensionMismatch.
FiniteSymmetryGroup generate_group(const std::vector<SignedGenerator>& generators, std::size_t max_size = 4096);

/// Per-element classification; certifies the action is σ1-semisymplectic.
struct SemisymplecticReport {
    std::vector<MatrixClass> classes;
};

/// Throws NotSemisymplectic if some element is neither symplectic nor
/// antisymplectic, SigmaMismatch if an element's class disagrees with σ1.
SemisymplecticReport verify_semisymplectic(const FiniteSymmetryGroup& g, const SymplecticForm& omega);

/// Sign pair (σ1, σ2): SE (+,+), SR (+,-), AE (-,+), AR (-,-).
enum class SymmetryType { SE, SR, AE, AR };

std::string_view to_string(SymmetryType t);

struct SymmetryClassification {
    std::vector<SymmetryType> types;
    std::set<SymmetryType> present;
};

SymmetryClassification classify_symmetry_types(const FiniteSymmetryGroup& g);

/// Γ++ = ker σ1 ∩ ker σ2 and coset representatives δi with
/// σj(δi) = +1 if i = j, -1 otherwise (δ3 has both signs -1).
struct CosetStructure {
    std::vector<std::size_t> gamma_pp;
    std::optional<std::size_t> delta1;
    std::optional<std::size_t> delta2;
    std::optional<std::size_t> delta3;
    std::size_t index = 1;
};

CosetStructure coset_structure(const FiniteSymmetryGroup& g);

/// Matrix of F -> γ*F, (γ*F)(x) = F(γx), on monomial_basis(n, k).
Matrix pullback_matrix(const Matrix& gamma, unsigned degree);

/// Matrix of F -> (1/|Γ|) Σ χ(γ) γ*F on monomial_basis(n, k). Throws
/// NonMultiplicativeCharacter if chi is not a homomorphism into Z2.
Matrix reynolds_projection(const FiniteSymmetryGroup& g, const Character& chi, unsigned degree);

/// F(γx) = χ(γ) F(x) for every γ.
bool check_invariance(const Poly& f, const FiniteSymmetryGroup& g, const Character& chi);

/// X(γx) = χ(γ) γ X(x) for every γ.
bool check_equivariance(const PolyVectorField& x, const FiniteSymmetryGroup& g, const Character& chi);

} // namespace hamnf
