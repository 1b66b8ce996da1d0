#pragma once

#include <array>
#include <complex>
#include <cstddef>

// Dense complex linear algebra for three-qubit states: tensor products,
// local and global unitaries, the J entangler, and measurement
// distributions. Basis index = 4*q1 + 2*q2 + q3 with player 1 in the most
// significant bit, so |100> is index 4.

namespace qgame {

using Complex = std::complex<double>;

// Tolerances used throughout: 1e-12 for unitarity/normalization checks,
// 1e-9 for payoff comparisons.
inline constexpr double kNormTol = 1e-12;

// Normalized 8-amplitude state. The constructor rejects non-finite entries
// and vectors whose squared norm deviates from 1 by more than kNormTol.
class StateVector {
  public:
    explicit StateVector(const std::array<Complex, 8>& amp);

    const std::array<Complex, 8>& amplitudes() const { return amp_; }
    const Complex& operator[](std::size_t k) const { return amp_[k]; }

  private:
    std::array<Complex, 8> amp_;
};

struct Gate2 {
    std::array<Complex, 4> m{};
    Complex& operator()(int r, int c) { return m[r * 2 + c]; }
    const Complex& operator()(int r, int c) const { return m[r * 2 + c]; }
};

struct Gate8 {
    std::array<Complex, 64> m{};
    Complex& operator()(int r, int c) { return m[r * 8 + c]; }
    const Complex& operator()(int r, int c) const { return m[r * 8 + c]; }
};

// Measurement probabilities over the 8 computational-basis outcomes,
// indexed like StateVector.
using OutcomeDistribution = std::array<double, 8>;

Gate2 identity2();
Gate2 pauli_x();
// (sigma_x + sigma_z)/sqrt(2), i.e. the Hadamard matrix.
Gate2 hadamard();
Gate8 identity8();

// |b1 b2 b3>
StateVector basis_state(bool b1, bool b2, bool b3);

// (1/sqrt(2)) * (I + i X(x)X(x)X)
Gate8 build_j_gate();

// Conjugate transpose.
Gate2 adjoint(const Gate2& g);
Gate8 adjoint(const Gate8& g);

// Kronecker product with player 1 outermost, consistent with the state
// indexing. Throws std::invalid_argument if any input is not unitary
// within 1e-9.
Gate8 kron3(const Gate2& g1, const Gate2& g2, const Gate2& g3);

// Matrix-vector product. No renormalization is applied; the result must
// satisfy the StateVector norm invariant (guaranteed for unitary g).
StateVector apply(const Gate8& g, const StateVector& s);

// prob[k] = |amp[k]|^2
OutcomeDistribution measure_distribution(const StateVector& s);

bool is_unitary(const Gate2& g, double tol);
bool is_unitary(const Gate8& g, double tol);

}
