#include "docext/kernels.hpp"

#include "docext/util.hpp"

#include <cstdlib>

namespace docext::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(DOCEXT_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa pick_default() {
    if (const char* env = std::getenv("DOCEXT_ISA")) {
        std::string v(env);
        if (v == "scalar") return Isa::Scalar;
        if (v == "avx2" && cpu_has_avx2()) return Isa::Avx2;
    }
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

Isa g_isa = pick_default();

} // namespace

Isa active_isa() { return g_isa; }

bool avx2_supported() { return cpu_has_avx2(); }

std::string isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void set_isa(Isa isa) {
    if (isa == Isa::Avx2 && !cpu_has_avx2())
        throw DataError("avx2 kernels requested but the CPU does not support AVX2+FMA");
    g_isa = isa;
}

#if defined(DOCEXT_HAVE_AVX2)
#define DOCEXT_DISPATCH(call) \
    do { \
        if (g_isa == Isa::Avx2) return avx2::call; \
        return scalar::call; \
    } while (0)
#else
#define DOCEXT_DISPATCH(call) return scalar::call
#endif

double dot(const double* a, const double* b, std::size_t n) { DOCEXT_DISPATCH(dot(a, b, n)); }

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    DOCEXT_DISPATCH(axpy(alpha, x, y, n));
}

void scale(double* x, double alpha, std::size_t n) { DOCEXT_DISPATCH(scale(x, alpha, n)); }

void vadd(const double* a, const double* b, double* out, std::size_t n) {
    DOCEXT_DISPATCH(vadd(a, b, out, n));
}

void vmul(const double* a, const double* b, double* out, std::size_t n) {
    DOCEXT_DISPATCH(vmul(a, b, out, n));
}

double vsum(const double* x, std::size_t n) { DOCEXT_DISPATCH(vsum(x, n)); }

double vmax(const double* x, std::size_t n) { DOCEXT_DISPATCH(vmax(x, n)); }

void matvec(const double* a, const double* x, double* y, std::size_t rows, std::size_t cols) {
    DOCEXT_DISPATCH(matvec(a, x, y, rows, cols));
}

void matvec_t(const double* a, const double* x, double* y, std::size_t rows, std::size_t cols) {
    DOCEXT_DISPATCH(matvec_t(a, x, y, rows, cols));
}

void outer_acc(double* g, const double* u, const double* v, std::size_t m, std::size_t n) {
    DOCEXT_DISPATCH(outer_acc(g, u, v, m, n));
}

void softmax_inplace(double* x, std::size_t n) { DOCEXT_DISPATCH(softmax_inplace(x, n)); }

void adam_step(double* param, double* m, double* v, const double* grad, std::size_t n,
               double lr, double beta1, double beta2, double eps, double bc1, double bc2) {
    DOCEXT_DISPATCH(adam_step(param, m, v, grad, n, lr, beta1, beta2, eps, bc1, bc2));
}

#undef DOCEXT_DISPATCH

} // namespace docext::kernels
