#pragma once

#include <complex>

// Fixed-size complex kernels for the 8-dimensional (three-qubit) state space.
// Matrices are dense row-major 8x8, vectors length 8, std::complex<double>
// interleaved layout. A scalar reference implementation is always available;
// an AVX2+FMA variant is selected at runtime when the CPU supports it.
// Set QGAME_KERNEL=scalar (or avx2) to override the selection.

namespace qgame::kernels {

using cdouble = std::complex<double>;

struct Backend {
    const char* name;
    // y = m * x
    void (*matvec8)(const cdouble* m, const cdouble* x, cdouble* y);
    // c = a * b
    void (*matmul8)(const cdouble* a, const cdouble* b, cdouble* c);
    // out[k] = |v[k]|^2, k = 0..7
    void (*abs_sq8)(const cdouble* v, double* out);
    // out[p] = sum_k w[k] * pay[4*k + p], p = 0..2. pay holds 8 rows padded
    // to 4 doubles each; the pad lane is ignored.
    void (*weighted_sum3)(const double* w, const double* pay, double* out);
};

// Reference implementation, plain loops.
const Backend& scalar();

// AVX2+FMA implementation, or nullptr when the build or CPU lacks support.
const Backend* avx2();

// Backend used by the library. Chosen once on first use.
const Backend& active();

}
