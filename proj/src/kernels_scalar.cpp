#include "qgame/kernels.hpp"

namespace qgame::kernels {

namespace {

void matvec8_scalar(const cdouble* m, const cdouble* x, cdouble* y) {
    for (int i = 0; i < 8; ++i) {
        cdouble sum{0.0, 0.0};
        for (int j = 0; j < 8; ++j)
            sum += m[i * 8 + j] * x[j];
        y[i] = sum;
    }
}

void matmul8_scalar(const cdouble* a, const cdouble* b, cdouble* c) {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            cdouble sum{0.0, 0.0};
            for (int k = 0; k < 8; ++k)
                sum += a[i * 8 + k] * b[k * 8 + j];
            c[i * 8 + j] = sum;
        }
    }
}

void abs_sq8_scalar(const cdouble* v, double* out) {
    for (int k = 0; k < 8; ++k)
        out[k] = v[k].real() * v[k].real() + v[k].imag() * v[k].imag();
}

void weighted_sum3_scalar(const double* w, const double* pay, double* out) {
    double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0;
    for (int k = 0; k < 8; ++k) {
        acc0 += w[k] * pay[4 * k + 0];
        acc1 += w[k] * pay[4 * k + 1];
        acc2 += w[k] * pay[4 * k + 2];
    }
    out[0] = acc0;
    out[1] = acc1;
    out[2] = acc2;
}

} // namespace

const Backend& scalar() {
    static const Backend backend{
        "scalar", matvec8_scalar, matmul8_scalar, abs_sq8_scalar, weighted_sum3_scalar};
    return backend;
}

}
