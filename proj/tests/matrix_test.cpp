#include "matrix.hpp"

#include "dynamics.hpp"
#include "errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qtl;

TEST_CASE("matmul: identity and annihilation") {
    oracle::Rng rng(1);
    const ComplexMatrix m = oracle::random_matrix(3, 3, rng);
    CHECK(max_abs_diff(matmul(ComplexMatrix::identity(3), m), m) == 0.0);
    const ComplexMatrix zero(3, 3);
    CHECK(max_abs(matmul(m, zero)) == 0.0);
}

TEST_CASE("matmul matches the double-loop product and (AB)^dagger == B^dagger A^dagger") {
    oracle::Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = oracle::random_matrix(4, 4, rng);
        const ComplexMatrix b = oracle::random_matrix(4, 4, rng);
        const ComplexMatrix ab = matmul(a, b);
        CHECK(max_abs_diff(ab, oracle::naive_matmul(a, b)) < 1e-12);
        CHECK(max_abs_diff(adjoint(ab), matmul(adjoint(b), adjoint(a))) < 1e-12);
    }
}

TEST_CASE("matmul rejects mismatched shapes") {
    const ComplexMatrix a(2, 3);
    const ComplexMatrix b(2, 3);
    CHECK_THROWS_AS(matmul(a, b), ShapeError);
}

TEST_CASE("kron: dimensions and identity") {
    oracle::Rng rng(3);
    const ComplexMatrix a = oracle::random_matrix(3, 3, rng);
    const ComplexMatrix b = oracle::random_matrix(3, 3, rng);
    const ComplexMatrix k = kron(a, b);
    CHECK(k.rows() == 9);
    CHECK(k.cols() == 9);
    CHECK(max_abs_diff(kron(ComplexMatrix::identity(3), ComplexMatrix::identity(3)),
                       ComplexMatrix::identity(9)) == 0.0);
}

TEST_CASE("kron associativity against the independent reference") {
    oracle::Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = oracle::random_matrix(2, 2, rng);
        const ComplexMatrix b = oracle::random_matrix(2, 2, rng);
        const ComplexMatrix c = oracle::random_matrix(2, 2, rng);
        const ComplexMatrix left = oracle::naive_kron(oracle::naive_kron(a, b), c);
        const ComplexMatrix right = oracle::naive_kron(a, oracle::naive_kron(b, c));
        CHECK(max_abs_diff(kron(a, kron(b, c)), right) < 1e-12);
        CHECK(max_abs_diff(kron(kron(a, b), c), left) < 1e-12);
        CHECK(max_abs_diff(left, right) < 1e-12);
    }
}

TEST_CASE("kron bilinearity in the first argument") {
    oracle::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = oracle::random_matrix(3, 3, rng);
        const ComplexMatrix b = oracle::random_matrix(3, 3, rng);
        const Complex scale{1.7, -0.4};
        CHECK(max_abs_diff(kron(scale * a, b), scale * kron(a, b)) < 1e-12);
    }
}

TEST_CASE("adjoint: fixed points and involution") {
    ComplexMatrix sym(2, 2);
    sym(0, 0) = 1.0;
    sym(0, 1) = 2.0;
    sym(1, 0) = 2.0;
    sym(1, 1) = -3.0;
    CHECK(max_abs_diff(adjoint(sym), sym) == 0.0);

    ComplexMatrix imag(1, 1);
    imag(0, 0) = Complex{0.0, 1.0};
    CHECK(adjoint(imag)(0, 0) == Complex{0.0, -1.0});

    oracle::Rng rng(6);
    const ComplexMatrix m = oracle::random_matrix(5, 5, rng);
    CHECK(max_abs_diff(adjoint(adjoint(m)), m) == 0.0);
}

TEST_CASE("hermitian_eig: identity and diagonal input") {
    const HermitianEig id = hermitian_eig(ComplexMatrix::identity(3));
    for (double v : id.eigenvalues) {
        CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    }

    ComplexMatrix diag(3, 3);
    diag(0, 0) = -2.0;
    diag(1, 1) = 0.0;
    diag(2, 2) = 5.0;
    const HermitianEig eig = hermitian_eig(diag);
    CHECK(eig.eigenvalues[0] == doctest::Approx(-2.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(0.0));
    CHECK(eig.eigenvalues[2] == doctest::Approx(5.0));
}

TEST_CASE("hermitian_eig reconstructs the DM generator") {
    const ComplexMatrix h = dm_hamiltonian({1.0, DmGenerator::Spin1});
    const HermitianEig eig = hermitian_eig(h);

    // V diag(lambda) V^dagger == input
    ComplexMatrix scaled = eig.eigenvectors;
    for (std::size_t j = 0; j < 9; ++j) {
        for (std::size_t i = 0; i < 9; ++i) {
            scaled(i, j) *= eig.eigenvalues[j];
        }
    }
    const ComplexMatrix rebuilt = matmul(scaled, adjoint(eig.eigenvectors));
    CHECK(max_abs_diff(rebuilt, h) < 1e-9);
    CHECK(max_abs_diff(matmul(adjoint(eig.eigenvectors), eig.eigenvectors),
                       ComplexMatrix::identity(9)) < 1e-9);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input and keeps the trace") {
    ComplexMatrix bad(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(bad), DomainError);

    oracle::Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix h = oracle::random_hermitian(7, rng);
        const HermitianEig eig = hermitian_eig(h);
        double sum = 0.0;
        for (double v : eig.eigenvalues) {
            sum += v;
        }
        CHECK(sum == doctest::Approx(trace(h).real()).epsilon(1e-9));
    }
}

TEST_CASE("singular_values: identity, signed diagonal, Frobenius identity") {
    for (double v : singular_values(ComplexMatrix::identity(3))) {
        CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    }

    ComplexMatrix diag(2, 2);
    diag(0, 0) = 3.0;
    diag(1, 1) = -4.0;
    const auto sv = singular_values(diag);
    CHECK(sv[0] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(sv[1] == doctest::Approx(3.0).epsilon(1e-14));

    oracle::Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix m = oracle::random_matrix(6, 6, rng);
        double sum_sq = 0.0;
        for (double s : singular_values(m)) {
            sum_sq += s * s;
        }
        double direct = 0.0;
        for (const Complex& z : m.entries()) {
            direct += std::norm(z);
        }
        CHECK(sum_sq == doctest::Approx(direct).epsilon(1e-9));
    }
}

TEST_CASE("trace_norm: identity, density matrices, unitary invariance") {
    CHECK(trace_norm(ComplexMatrix::identity(9)) == doctest::Approx(9.0).epsilon(1e-12));

    oracle::Rng density_rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(trace_norm(oracle::random_density(9, density_rng)) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }

    oracle::Rng rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix m = oracle::random_matrix(5, 5, rng);
        const ComplexMatrix u = oracle::random_unitary(5, rng);
        const ComplexMatrix v = oracle::random_unitary(5, rng);
        const double base = trace_norm(m);
        CHECK(trace_norm(matmul(u, matmul(m, v))) == doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("expm_hermitian_generator: t=0, scalar phases, unitarity, composition") {
    oracle::Rng rng(12);
    const ComplexMatrix h = oracle::random_hermitian(5, rng);
    CHECK(max_abs_diff(expm_hermitian_generator(h, 0.0),
                       ComplexMatrix::identity(5)) < 1e-12);

    ComplexMatrix phases(2, 2);
    phases(0, 0) = std::numbers::pi;
    phases(1, 1) = 0.0;
    const ComplexMatrix u = expm_hermitian_generator(phases, 1.0);
    CHECK(std::abs(u(0, 0) - Complex{-1.0, 0.0}) < 1e-12);
    CHECK(std::abs(u(1, 1) - Complex{1.0, 0.0}) < 1e-12);

    const ComplexMatrix dm = dm_hamiltonian({1.0, DmGenerator::Spin1});
    const ComplexMatrix udm = expm_hermitian_generator(dm, 7.3);
    CHECK(max_abs_diff(matmul(udm, adjoint(udm)), ComplexMatrix::identity(9)) <
          1e-10);

    std::uniform_real_distribution<double> time(0.0, 10.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double t1 = time(rng);
        const double t2 = time(rng);
        const ComplexMatrix left =
            matmul(expm_hermitian_generator(h, t1), expm_hermitian_generator(h, t2));
        CHECK(max_abs_diff(left, expm_hermitian_generator(h, t1 + t2)) < 1e-9);
    }
}
