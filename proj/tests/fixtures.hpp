// Shared data for the test suites: the worked examples and a seeded random source.
#pragma once

#include "hamnf/group.hpp"
#include "hamnf/matrix.hpp"
#include "hamnf/polynomial.hpp"
#include "hamnf/rational.hpp"
#include "hamnf/symplectic.hpp"

#include <random>
#include <vector>

namespace fx {

using namespace hamnf;

inline Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i); }

inline Poly mono(std::vector<unsigned> e, Scalar c = 1) { return Poly::term(Monomial(std::move(e)), c); }

// planar oscillator with D4 symmetry: omega = [[0, a], [-a, 0]], L = [[0, lambda], [-lambda, 0]]
inline SymplecticForm omega_plane(const Scalar& a = 1) { return SymplecticForm(Matrix{{0, a}, {-a, 0}}); }
inline Matrix l_plane(const Scalar& lambda = 1) { return Matrix{{0, lambda}, {-lambda, 0}}; }
inline Matrix rot90() { return Matrix{{0, -1}, {1, 0}}; }
inline Matrix kappa() { return Matrix{{1, 0}, {0, -1}}; }
inline FiniteSymmetryGroup d4() { return generate_group({{rot90(), 1, 1}, {kappa(), -1, -1}}); }

// four-dimensional example with all four symmetry types
inline SymplecticForm omega4() {
    return SymplecticForm(Matrix{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
}
inline Matrix tau() { return Matrix::diagonal({-1, 1, -1, 1}); }
inline Matrix psi() { return Matrix::diagonal({-1, 1, 1, -1}); }
inline Matrix l4(const Scalar& lambda = 1) {
    return Matrix{{0, lambda, 0, 0}, {-lambda, 0, 0, 0}, {0, 0, 0, lambda}, {0, 0, -lambda, 0}};
}
inline FiniteSymmetryGroup z2z2() { return generate_group({{tau(), -1, -1}, {psi(), 1, -1}}); }

// u1 = x1^2 + x2^2, u2 = x3^2 + x4^2, u3 = x1x3 + x2x4, u4 = x2x3 - x1x4
inline Poly u1() { return mono({2, 0, 0, 0}) + mono({0, 2, 0, 0}); }
inline Poly u2() { return mono({0, 0, 2, 0}) + mono({0, 0, 0, 2}); }
inline Poly u3() { return mono({1, 0, 1, 0}) + mono({0, 1, 0, 1}); }
inline Poly u4() { return mono({0, 1, 1, 0}) - mono({1, 0, 0, 1}); }

// omega and L with L in sp_omega but L^T not
inline SymplecticForm omega_ex3() {
    return SymplecticForm(Matrix{{0, 1, 0, 2}, {-1, 0, -1, 0}, {0, 1, 0, 1}, {-2, 0, -1, 0}});
}
inline Matrix l_ex3() { return Matrix{{-1, 1, -1, 2}, {3, 0, 4, 1}, {-1, 2, 0, 2}, {3, 1, 1, 1}}; }

struct Random {
    std::mt19937_64 rng;
    explicit Random(std::uint64_t seed) : rng(seed) {}

    Scalar scalar(int range = 5) {
        std::uniform_int_distribution<int> num(-range, range);
        std::uniform_int_distribution<int> den(1, 3);
        return rational(num(rng), den(rng));
    }

    Poly homogeneous(std::size_t n, unsigned degree, double density = 0.6) {
        std::bernoulli_distribution keep(density);
        Poly p(n);
        for (const auto& m : monomial_basis(n, degree))
            if (keep(rng))
                p.add_term(m, scalar());
        return p;
    }

    Poly poly(std::size_t n, unsigned max_degree, unsigned min_degree = 0) {
        Poly p(n);
        for (unsigned d = min_degree; d <= max_degree; ++d)
            p += homogeneous(n, d, 0.4);
        return p;
    }
};

} // namespace fx
