#include "qgame/statevec.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgame/kernels.hpp"

namespace qgame {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

bool finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace

StateVector::StateVector(const std::array<Complex, 8>& amp) : amp_(amp) {
    double norm2 = 0.0;
    for (const Complex& a : amp_) {
        if (!finite(a))
            throw std::invalid_argument("StateVector: amplitude is not finite");
        norm2 += a.real() * a.real() + a.imag() * a.imag();
    }
    if (std::abs(norm2 - 1.0) > kNormTol)
        throw std::invalid_argument("StateVector: squared norm deviates from 1");
}

Gate2 identity2() {
    Gate2 g;
    g(0, 0) = 1.0;
    g(1, 1) = 1.0;
    return g;
}

Gate2 pauli_x() {
    Gate2 g;
    g(0, 1) = 1.0;
    g(1, 0) = 1.0;
    return g;
}

Gate2 hadamard() {
    Gate2 g;
    g(0, 0) = kInvSqrt2;
    g(0, 1) = kInvSqrt2;
    g(1, 0) = kInvSqrt2;
    g(1, 1) = -kInvSqrt2;
    return g;
}

Gate8 identity8() {
    Gate8 g;
    for (int k = 0; k < 8; ++k)
        g(k, k) = 1.0;
    return g;
}

StateVector basis_state(bool b1, bool b2, bool b3) {
    std::array<Complex, 8> amp{};
    amp[4 * int(b1) + 2 * int(b2) + int(b3)] = 1.0;
    return StateVector(amp);
}

Gate8 build_j_gate() {
    // X(x)X(x)X maps |k> to the bitwise complement |7-k>, so the second term
    // contributes i/sqrt(2) on the anti-diagonal.
    Gate8 g;
    for (int k = 0; k < 8; ++k) {
        g(k, k) = Complex(kInvSqrt2, 0.0);
        g(k, 7 - k) = Complex(0.0, kInvSqrt2);
    }
    return g;
}

Gate2 adjoint(const Gate2& g) {
    Gate2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out(r, c) = std::conj(g(c, r));
    return out;
}

Gate8 adjoint(const Gate8& g) {
    Gate8 out;
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            out(r, c) = std::conj(g(c, r));
    return out;
}

Gate8 kron3(const Gate2& g1, const Gate2& g2, const Gate2& g3) {
    constexpr double kKronTol = 1e-9;
    if (!is_unitary(g1, kKronTol) || !is_unitary(g2, kKronTol) || !is_unitary(g3, kKronTol))
        throw std::invalid_argument("kron3: input gate is not unitary");
    Gate8 out;
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int i3 = 0; i3 < 2; ++i3)
                for (int j1 = 0; j1 < 2; ++j1)
                    for (int j2 = 0; j2 < 2; ++j2)
                        for (int j3 = 0; j3 < 2; ++j3)
                            out(4 * i1 + 2 * i2 + i3, 4 * j1 + 2 * j2 + j3) =
                                g1(i1, j1) * g2(i2, j2) * g3(i3, j3);
    return out;
}

StateVector apply(const Gate8& g, const StateVector& s) {
    std::array<Complex, 8> out;
    kernels::active().matvec8(g.m.data(), s.amplitudes().data(), out.data());
    return StateVector(out);
}

OutcomeDistribution measure_distribution(const StateVector& s) {
    OutcomeDistribution dist;
    kernels::active().abs_sq8(s.amplitudes().data(), dist.data());
    return dist;
}

bool is_unitary(const Gate2& g, double tol) {
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            if (!finite(g(r, c)))
                return false;
            Complex dot = g(r, 0) * std::conj(g(c, 0)) + g(r, 1) * std::conj(g(c, 1));
            Complex want = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(dot - want) > tol)
                return false;
        }
    }
    return true;
}

bool is_unitary(const Gate8& g, double tol) {
    for (const Complex& z : g.m)
        if (!finite(z))
            return false;
    Gate8 prod;
    const Gate8 dag = adjoint(g);
    kernels::active().matmul8(g.m.data(), dag.m.data(), prod.m.data());
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            Complex want = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(prod(r, c) - want) > tol)
                return false;
        }
    return true;
}

}
