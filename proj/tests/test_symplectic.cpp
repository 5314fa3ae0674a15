#include "fixtures.hpp"

#include "hamnf/errors.hpp"

#include <doctest.h>

using namespace hamnf;
using fx::mono;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("SymplecticForm validation") {
    CHECK(kind_of([] { SymplecticForm(Matrix{{0, 1}, {1, 0}}); }) == ErrorKind::ValidationError);
    CHECK(kind_of([] { SymplecticForm(Matrix{{0, 0}, {0, 0}}); }) == ErrorKind::ValidationError);
    CHECK(kind_of([] { SymplecticForm(Matrix{{0}}); }) == ErrorKind::ValidationError);
    try {
        SymplecticForm(Matrix{{1, 1}, {-1, 0}});
        FAIL("accepted a non-skew form");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("omega not skew-symmetric") != std::string::npos);
    }
    CHECK(SymplecticForm::canonical(2).matrix() == Matrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
}

TEST_CASE("classify_matrix") {
    const auto w = fx::omega4();
    CHECK(classify_matrix(fx::psi(), w) == MatrixClass::Symplectic);
    CHECK(classify_matrix(fx::tau(), w) == MatrixClass::Antisymplectic);
    CHECK(classify_matrix(Matrix::identity(4), w) == MatrixClass::Symplectic);
    CHECK(classify_matrix(Matrix::diagonal({2, 1, 1, 1}), w) == MatrixClass::Neither);
    CHECK_THROWS_AS(classify_matrix(Matrix::identity(2), w), Error);
}

TEST_CASE("is_hamiltonian_matrix") {
    CHECK(is_hamiltonian_matrix(Matrix(4, 4), fx::omega4()));
    CHECK(is_hamiltonian_matrix(fx::l_ex3(), fx::omega_ex3()));
    CHECK_FALSE(is_hamiltonian_matrix(fx::l_ex3().transpose(), fx::omega_ex3()));
    CHECK(is_hamiltonian_matrix(fx::l_plane(rational(5, 3)), fx::omega_plane(rational(-2, 7))));
}

TEST_CASE("hamiltonian_field") {
    const Scalar lam = rational(2, 3);
    const Poly h = (mono({1, 0, 1, 0}) + mono({0, 1, 0, 1})) * (-lam);
    const auto x = hamiltonian_field(h, fx::omega4());
    CHECK(x.components[0] == mono({0, 1, 0, 0}, lam));
    CHECK(x.components[1] == mono({1, 0, 0, 0}, -lam));
    CHECK(x.components[2] == mono({0, 0, 0, 1}, lam));
    CHECK(x.components[3] == mono({0, 0, 1, 0}, -lam));

    CHECK(hamiltonian_field(Poly(4), fx::omega4()).is_zero());

    const Scalar a = rational(-3, 2);
    const Poly h2 = (mono({2, 0}) + mono({0, 2})) * (lam * a / 2);
    const auto x2 = hamiltonian_field(h2, fx::omega_plane(a));
    CHECK(x2 == PolyVectorField::linear(fx::l_plane(lam)));
    CHECK_THROWS_AS(hamiltonian_field(h2, fx::omega4()), Error);
}

TEST_CASE("poisson") {
    const auto j = SymplecticForm::canonical(1);
    CHECK(poisson(fx::var(2, 0), fx::var(2, 1), j) == Poly::constant(2, 1));
    fx::Random rnd(11);
    const Poly f = rnd.poly(2, 4);
    CHECK(poisson(f, f, j).is_zero());
    const Poly h2 = (mono({2, 0}) + mono({0, 2})) * rational(1, 2);
    CHECK(poisson(h2, h2, fx::omega_plane()).is_zero());
}

TEST_CASE("quadratic_from_matrix") {
    const auto w = fx::omega_plane(rational(4, 5));
    CHECK(quadratic_from_matrix(Matrix(2, 2), w).is_zero());
    const Scalar lam = rational(-7, 3);
    CHECK(quadratic_from_matrix(fx::l_plane(lam), w) == (mono({2, 0}) + mono({0, 2})) * (lam * rational(4, 5) / 2));

    // [omega]^2 = -I forces L^T into sp_omega whenever L is
    const auto j = SymplecticForm::canonical(2);
    REQUIRE(j.matrix() * j.matrix() == -Matrix::identity(4));
    const Matrix l{{1, 2, 3, 4}, {5, 6, 4, 7}, {1, 0, -1, -5}, {0, 1, -2, -6}};
    REQUIRE(is_hamiltonian_matrix(l, j));
    const Poly q = quadratic_from_matrix(l.transpose(), j);
    CHECK(hamiltonian_field(q, j) == PolyVectorField::linear(l.transpose()));

    try {
        quadratic_from_matrix(fx::l_ex3().transpose(), fx::omega_ex3());
        FAIL("accepted a matrix outside sp_omega");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotHamiltonianMatrix);
        CHECK(std::string(e.what()).find("A^T[omega] + [omega]A") != std::string::npos);
    }
}

TEST_CASE("linearization inverts quadratic_from_matrix") {
    const auto w = fx::omega4();
    CHECK(linearization(quadratic_from_matrix(fx::l4(3), w), w) == fx::l4(3));
    CHECK_THROWS_AS(linearization(mono({3, 0, 0, 0}), w), Error);
}

TEST_CASE("lie_bracket convention") {
    // [A, B] = (dB)A - (dA)B on linear fields is the commutator BA - AB
    const Matrix a{{0, 1}, {0, 0}}, b{{0, 0}, {1, 0}};
    const auto br = lie_bracket(PolyVectorField::linear(a), PolyVectorField::linear(b));
    CHECK(br == PolyVectorField::linear(b * a - a * b));
}
