#include "aztec/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace aztec::kernels {

namespace scalar {

cplx dot(const cplx* a, const cplx* b, int n) {
    double re = 0, im = 0;
    for (int i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

void vecmat(const cplx* u, const cplx* M, int rows, int cols, cplx* y) {
    for (int j = 0; j < cols; ++j) y[j] = 0.0;
    for (int i = 0; i < rows; ++i) {
        const cplx ui = u[i];
        const cplx* row = M + static_cast<size_t>(i) * cols;
        for (int j = 0; j < cols; ++j) y[j] += ui * row[j];
    }
}

void cauchy(const cplx* w, int nw, const cplx* z, int nz, const cplx* c, int R, cplx* out) {
    for (int i = 0; i < nw; ++i) {
        for (int r = 0; r < R; ++r) out[i * R + r] = 0.0;
        for (int j = 0; j < nz; ++j) {
            const cplx d = z[j] - w[i];
            const double n2 = d.real() * d.real() + d.imag() * d.imag();
            const cplx inv{d.real() / n2, -d.imag() / n2};
            for (int r = 0; r < R; ++r) out[i * R + r] += c[static_cast<size_t>(r) * nz + j] * inv;
        }
    }
}

}  // namespace scalar

#ifndef AZTEC_HAVE_AVX2
namespace avx2 {
cplx dot(const cplx* a, const cplx* b, int n) { return scalar::dot(a, b, n); }
void vecmat(const cplx* u, const cplx* M, int r, int c, cplx* y) { scalar::vecmat(u, M, r, c, y); }
void cauchy(const cplx* w, int nw, const cplx* z, int nz, const cplx* c, int R, cplx* out) {
    scalar::cauchy(w, nw, z, nz, c, R, out);
}
}  // namespace avx2
#endif

namespace {

bool cpu_has_avx2() {
#if defined(AZTEC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa detect() {
    const char* env = std::getenv("AZTEC_ISA");
    if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<int>& current() {
    static std::atomic<int> isa{static_cast<int>(detect())};
    return isa;
}

}  // namespace

bool available(Isa isa) { return isa == Isa::Scalar || cpu_has_avx2(); }
Isa active() { return static_cast<Isa>(current().load(std::memory_order_relaxed)); }

void force(Isa isa) {
    if (!available(isa)) throw ConfigError(std::string("instruction set not available: ") + name(isa));
    current().store(static_cast<int>(isa));
}

const char* name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

cplx dot(const cplx* a, const cplx* b, int n) {
    return active() == Isa::Avx2 ? avx2::dot(a, b, n) : scalar::dot(a, b, n);
}

void vecmat(const cplx* u, const cplx* M, int rows, int cols, cplx* y) {
    if (active() == Isa::Avx2)
        avx2::vecmat(u, M, rows, cols, y);
    else
        scalar::vecmat(u, M, rows, cols, y);
}

void cauchy(const cplx* w, int nw, const cplx* z, int nz, const cplx* c, int R, cplx* out) {
    if (active() == Isa::Avx2)
        avx2::cauchy(w, nw, z, nz, c, R, out);
    else
        scalar::cauchy(w, nw, z, nz, c, R, out);
}

}  // namespace aztec::kernels
