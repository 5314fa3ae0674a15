#pragma once

#include "hamnf/matrix.hpp"
#include "hamnf/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace hamnf {

/// Exponent vector of a monomial x1^e1 ... xm^em.
///
/// Monomials are totally ordered by graded-lex: lower total degree first, and
/// within one degree by lexicographically *decreasing* exponent vectors, so
/// the degree-3 basis in two variables reads x1^3, x1^2 x2, x1 x2^2, x2^3.
/// Every basis enumeration and every subspace coordinate uses this order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents);

    static Monomial one(std::size_t num_vars) { return Monomial(std::vector<unsigned>(num_vars, 0)); }
    static Monomial variable(std::size_t num_vars, std::size_t index);

    const std::vector<unsigned>& exponents() const noexcept { return exps_; }
    std::size_t num_vars() const noexcept { return exps_.size(); }
    unsigned degree() const noexcept { return degree_; }
    unsigned operator[](std::size_t i) const { return exps_[i]; }

    Monomial operator*(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    std::strong_ordering operator<=>(const Monomial& other) const;

    std::string to_string() const;

private:
    std::vector<unsigned> exps_;
    unsigned degree_ = 0;
};

/// Sparse multivariate polynomial with exact rational coefficients. No zero
/// coefficient is ever stored.
class Poly {
public:
    using Terms = std::map<Monomial, Scalar>;

    Poly() = default;
    explicit Poly(std::size_t num_vars) : num_vars_(num_vars) {}

    static Poly constant(std::size_t num_vars, const Scalar& c);
    static Poly variable(std::size_t num_vars, std::size_t index);
    static Poly term(const Monomial& m, const Scalar& c);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Highest total degree, -1 for the zero polynomial.
    int degree() const;
    /// Lowest total degree, -1 for the zero polynomial.
    int min_degree() const;
    /// Zero counts as homogeneous of every degree.
    bool is_homogeneous(unsigned degree) const;

    Scalar coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    Poly homogeneous_part(unsigned degree) const;
    Poly truncated(unsigned order) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Scalar& factor);

    bool operator==(const Poly& other) const = default;

    std::string to_string() const;

private:
    std::size_t num_vars_ = 0;
    Terms terms_;
};

Poly operator+(Poly lhs, const Poly& rhs);
Poly operator-(Poly lhs, const Poly& rhs);
Poly operator*(const Poly& lhs, const Poly& rhs);
Poly operator*(Poly lhs, const Scalar& factor);
Poly operator*(const Scalar& factor, Poly rhs);

/// Product with every term of degree > order dropped.
Poly multiply_truncated(const Poly& lhs, const Poly& rhs, unsigned order);

/// A polynomial known only up to (and including) total degree `order`.
struct Jet {
    Poly poly;
    unsigned order = 1;

    Jet() = default;
    /// Discards all terms of poly with degree above order.
    Jet(const Poly& p, unsigned order);

    std::size_t num_vars() const noexcept { return poly.num_vars(); }
    bool operator==(const Jet& other) const = default;
};

/// All monomials of total degree `degree` in graded-lex order; there are
/// C(num_vars + degree - 1, degree) of them.
std::vector<Monomial> monomial_basis(std::size_t num_vars, unsigned degree);

/// Dimension of the space of degree-k forms in n variables.
std::size_t homogeneous_dimension(std::size_t num_vars, unsigned degree);

/// Coordinates of a homogeneous polynomial on monomial_basis(n, degree).
/// Throws Error(NonHomogeneous) when p has a term of another degree.
Vector coordinates(const Poly& p, unsigned degree);
Poly from_coordinates(const Vector& coords, std::size_t num_vars, unsigned degree);

Poly derivative(const Poly& p, std::size_t var);
std::vector<Poly> gradient(const Poly& p);

/// P(phi_1, ..., phi_m) computed exactly.
Poly substitute(const Poly& p, const std::vector<Poly>& phi);

/// P(phi) with every term of degree > order discarded.
Jet compose_jet(const Poly& p, const std::vector<Jet>& phi, unsigned order);

/// The pullback x -> P(g x) by a linear map g.
Poly pullback(const Poly& p, const Matrix& g);

/// alpha! = prod of factorials of the exponents.
Scalar factorial_weight(const Monomial& m);

/// Fischer (Bombieri) pairing sum_alpha alpha! f_alpha g_alpha on degree-k forms.
/// Throws Error(NonHomogeneous) if either argument has a term of another degree.
Scalar fischer_ip(const Poly& f, const Poly& g, unsigned degree);

} // namespace hamnf
