#pragma once

#include <cstddef>
#include <string>

// Double-precision kernels behind the model's inner loops. Every operation
// has a scalar reference implementation and, on x86-64 with AVX2+FMA, a
// vectorized variant; the active backend is chosen once at startup and the
// two are equivalence-tested against each other. Results are bit-stable for
// a fixed backend; across backends they agree to within accumulation-order
// rounding (~1e-15 relative).
namespace docext::kernels {

enum class Isa { Scalar, Avx2 };

// Backend picked at startup: AVX2 when the CPU supports it, unless the
// DOCEXT_ISA environment variable ("scalar" | "avx2") says otherwise.
Isa active_isa();
void set_isa(Isa isa);        // throws DataError if unsupported on this CPU
bool avx2_supported();
std::string isa_name(Isa isa);

// y = sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// x[i] *= alpha
void scale(double* x, double alpha, std::size_t n);

// out[i] = a[i] + b[i]
void vadd(const double* a, const double* b, double* out, std::size_t n);

// out[i] = a[i] * b[i]
void vmul(const double* a, const double* b, double* out, std::size_t n);

double vsum(const double* x, std::size_t n);
double vmax(const double* x, std::size_t n);   // n >= 1

// y = A x with A row-major (rows x cols); y has `rows` entries.
void matvec(const double* a, const double* x, double* y, std::size_t rows, std::size_t cols);

// y = A^T x with A row-major (rows x cols); y has `cols` entries, overwritten.
void matvec_t(const double* a, const double* x, double* y, std::size_t rows, std::size_t cols);

// G += u v^T with G row-major (m x n).
void outer_acc(double* g, const double* u, const double* v, std::size_t m, std::size_t n);

// In-place numerically stable softmax; returns nothing, x sums to 1.
void softmax_inplace(double* x, std::size_t n);

// One Adam step on a parameter block. bc1/bc2 are the bias-correction
// factors 1 - beta^t for the current step.
void adam_step(double* param, double* m, double* v, const double* grad, std::size_t n,
               double lr, double beta1, double beta2, double eps, double bc1, double bc2);

// Scalar reference implementations, always available; the equivalence test
// suite compares the active backend against these.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double* x, double alpha, std::size_t n);
void vadd(const double* a, const double* b, double* out, std::size_t n);
void vmul(const double* a, const double* b, double* out, std::size_t n);
double vsum(const double* x, std::size_t n);
double vmax(const double* x, std::size_t n);
void matvec(const double* a, const double* x, double* y, std::size_t rows, std::size_t cols);
void matvec_t(const double* a, const double* x, double* y, std::size_t rows, std::size_t cols);
void outer_acc(double* g, const double* u, const double* v, std::size_t m, std::size_t n);
void softmax_inplace(double* x, std::size_t n);
void adam_step(double* param, double* m, double* v, const double* grad, std::size_t n,
               double lr, double beta1, double beta2, double eps, double bc1, double bc2);
} // namespace scalar

#if defined(DOCEXT_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double* x, double alpha, std::size_t n);
void vadd(const double* a, const double* b, double* out, std::size_t n);
void vmul(const double* a, const double* b, double* out, std::size_t n);
double vsum(const double* x, std::size_t n);
double vmax(const double* x, std::size_t n);
void matvec(const double* a, const double* x, double* y, std::size_t rows, std::size_t cols);
void matvec_t(const double* a, const double* x, double* y, std::size_t rows, std::size_t cols);
void outer_acc(double* g, const double* u, const double* v, std::size_t m, std::size_t n);
void softmax_inplace(double* x, std::size_t n);
void adam_step(double* param, double* m, double* v, const double* grad, std::size_t n,
               double lr, double beta1, double beta2, double eps, double bc1, double bc2);
} // namespace avx2
#endif

} // namespace docext::kernels
