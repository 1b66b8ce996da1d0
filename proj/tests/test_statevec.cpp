#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qgame/statevec.hpp"
#include "oracle.hpp"

using namespace qgame;

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

bool close(const Complex& a, const Complex& b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

std::mt19937_64 rng(0xacce55);

// Random 2x2 unitary from two phases and one rotation angle.
Gate2 random_unitary2() {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double theta = angle(rng), alpha = angle(rng), beta = angle(rng);
    const double c = std::cos(theta), s = std::sin(theta);
    Gate2 g;
    g(0, 0) = std::polar(c, alpha);
    g(0, 1) = std::polar(s, beta);
    g(1, 0) = -std::polar(s, -beta);
    g(1, 1) = std::polar(c, -alpha);
    return g;
}

StateVector random_state() {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::array<Complex, 8> amp;
    double norm2 = 0.0;
    for (auto& a : amp) {
        a = {dist(rng), dist(rng)};
        norm2 += std::norm(a);
    }
    for (auto& a : amp)
        a /= std::sqrt(norm2);
    return StateVector(amp);
}

} // namespace

TEST_CASE("basis_state places the single amplitude per the indexing convention") {
    CHECK(close(basis_state(0, 0, 0)[0], 1.0));
    CHECK(close(basis_state(1, 1, 1)[7], 1.0));
    CHECK(close(basis_state(1, 0, 0)[4], 1.0));
    for (int k = 1; k < 8; ++k)
        CHECK(close(basis_state(0, 0, 0)[k], 0.0));
    int hits = 0;
    for (int k = 0; k < 8; ++k)
        if (std::abs(basis_state(1, 0, 0)[k]) > 0)
            ++hits;
    CHECK(hits == 1);
}

TEST_CASE("StateVector constructor rejects invalid amplitudes") {
    std::array<Complex, 8> amp{};
    amp[0] = 1.0;
    CHECK_NOTHROW(StateVector{amp});

    amp[0] = {std::nan(""), 0.0};
    CHECK_THROWS_AS(StateVector{amp}, std::invalid_argument);

    amp[0] = 0.5;  // squared norm 0.25
    CHECK_THROWS_AS(StateVector{amp}, std::invalid_argument);
}

TEST_CASE("J gate sends |000> to (|000> + i|111>)/sqrt(2)") {
    const StateVector out = apply(build_j_gate(), basis_state(0, 0, 0));
    CHECK(close(out[0], Complex(kInvSqrt2, 0.0)));
    CHECK(close(out[7], Complex(0.0, kInvSqrt2)));
    for (int k = 1; k < 7; ++k)
        CHECK(close(out[k], 0.0));
}

TEST_CASE("J gate sends |111> to (|111> + i|000>)/sqrt(2)") {
    const StateVector out = apply(build_j_gate(), basis_state(1, 1, 1));
    CHECK(close(out[7], Complex(kInvSqrt2, 0.0)));
    CHECK(close(out[0], Complex(0.0, kInvSqrt2)));
}

TEST_CASE("J matches the independently built matrix and is unitary") {
    const Gate8 j = build_j_gate();
    const auto ref = oracle::j_matrix();
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            CHECK(close(j(r, c), Complex(double(ref[r * 8 + c].real()),
                                         double(ref[r * 8 + c].imag()))));
    CHECK(is_unitary(j, 1e-12));
}

TEST_CASE("adjoint of J is (I - i XXX)/sqrt(2), entrywise") {
    const Gate8 jdag = adjoint(build_j_gate());
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            Complex want = 0.0;
            if (r == c)
                want = Complex(kInvSqrt2, 0.0);
            else if (r == 7 - c)
                want = Complex(0.0, -kInvSqrt2);
            CHECK(close(jdag(r, c), want));
        }
}

TEST_CASE("adjoint is an involution and fixes the identity") {
    const Gate8 eye = identity8();
    const Gate8 eye_dag = adjoint(eye);
    for (int k = 0; k < 64; ++k)
        CHECK(close(eye.m[k], eye_dag.m[k]));

    const Gate8 g = kron3(random_unitary2(), random_unitary2(), random_unitary2());
    const Gate8 gg = adjoint(adjoint(g));
    for (int k = 0; k < 64; ++k)
        CHECK(close(g.m[k], gg.m[k]));
}

TEST_CASE("kron3 of identities is the 8x8 identity") {
    const Gate8 k = kron3(identity2(), identity2(), identity2());
    const Gate8 eye = identity8();
    for (int i = 0; i < 64; ++i)
        CHECK(close(k.m[i], eye.m[i]));
}

TEST_CASE("kron3(X,X,X) flips all qubits") {
    const StateVector out = apply(kron3(pauli_x(), pauli_x(), pauli_x()),
                                  basis_state(0, 0, 0));
    CHECK(close(out[7], 1.0));
}

TEST_CASE("kron3(X,H,I) acts on the entangled state as expanded by hand") {
    const StateVector in = apply(build_j_gate(), basis_state(0, 0, 0));
    const StateVector out = apply(kron3(pauli_x(), hadamard(), identity2()), in);
    // (1/2)(|100> + |110> + i|001> - i|011>)
    CHECK(close(out[4], Complex(0.5, 0.0)));
    CHECK(close(out[6], Complex(0.5, 0.0)));
    CHECK(close(out[1], Complex(0.0, 0.5)));
    CHECK(close(out[3], Complex(0.0, -0.5)));
    for (int k : {0, 2, 5, 7})
        CHECK(close(out[k], 0.0));
}

TEST_CASE("kron3 rejects non-unitary inputs at 1e-9") {
    Gate2 bad;
    bad(0, 0) = 1.0;
    bad(1, 1) = 2.0;
    CHECK_THROWS_AS(kron3(bad, identity2(), identity2()), std::invalid_argument);
    CHECK_THROWS_AS(kron3(identity2(), bad, identity2()), std::invalid_argument);
    CHECK_THROWS_AS(kron3(identity2(), identity2(), bad), std::invalid_argument);

    Gate2 nearly = identity2();
    nearly(0, 0) += 1e-12;
    CHECK_NOTHROW(kron3(nearly, identity2(), identity2()));
}

TEST_CASE("apply with the identity returns the input state") {
    const StateVector s = random_state();
    const StateVector out = apply(identity8(), s);
    for (int k = 0; k < 8; ++k)
        CHECK(close(out[k], s[k]));
}

TEST_CASE("J round trip restores every basis state") {
    const Gate8 j = build_j_gate();
    const Gate8 jdag = adjoint(j);
    for (int b = 0; b < 8; ++b) {
        const StateVector in = basis_state((b >> 2) & 1, (b >> 1) & 1, b & 1);
        const StateVector out = apply(jdag, apply(j, in));
        for (int k = 0; k < 8; ++k)
            CHECK(close(out[k], in[k]));
    }
}

TEST_CASE("J round trip restores random states") {
    const Gate8 j = build_j_gate();
    const Gate8 jdag = adjoint(j);
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector s = random_state();
        const StateVector out = apply(jdag, apply(j, s));
        for (int k = 0; k < 8; ++k)
            CHECK(close(out[k], s[k]));
    }
}

TEST_CASE("strategy gates and their tensor products are unitary at 1e-12") {
    CHECK(is_unitary(pauli_x(), 1e-12));
    CHECK(is_unitary(hadamard(), 1e-12));
    CHECK(is_unitary(identity2(), 1e-12));
    for (int trial = 0; trial < 50; ++trial)
        CHECK(is_unitary(kron3(random_unitary2(), random_unitary2(), random_unitary2()),
                         1e-12));
}

TEST_CASE("gates from kron3 and J preserve the norm of random states") {
    const Gate8 j = build_j_gate();
    for (int trial = 0; trial < 50; ++trial) {
        const StateVector s = random_state();
        for (const Gate8& g :
             {j, kron3(random_unitary2(), random_unitary2(), random_unitary2())}) {
            const StateVector out = apply(g, s);  // would throw if norm drifted
            double norm2 = 0.0;
            for (int k = 0; k < 8; ++k)
                norm2 += std::norm(out[k]);
            CHECK(std::abs(norm2 - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("measure_distribution squares the amplitudes") {
    const OutcomeDistribution d0 = measure_distribution(basis_state(0, 0, 0));
    CHECK(d0[0] == doctest::Approx(1.0).epsilon(1e-12));

    // (1/sqrt(2)) (|110> - i|011>): the two-outcome split behind the (5,9,5) payoff.
    std::array<Complex, 8> amp{};
    amp[6] = Complex(kInvSqrt2, 0.0);
    amp[3] = Complex(0.0, -kInvSqrt2);
    const OutcomeDistribution d1 = measure_distribution(StateVector(amp));
    CHECK(d1[6] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d1[3] == doctest::Approx(0.5).epsilon(1e-12));

    const OutcomeDistribution d2 =
        measure_distribution(apply(build_j_gate(), basis_state(0, 0, 0)));
    CHECK(d2[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d2[7] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("measured distributions are normalized and non-negative") {
    for (int trial = 0; trial < 100; ++trial) {
        const OutcomeDistribution d = measure_distribution(random_state());
        double sum = 0.0;
        for (double p : d) {
            CHECK(p >= 0.0);
            CHECK(p <= 1.0 + 1e-12);
            sum += p;
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }
}
