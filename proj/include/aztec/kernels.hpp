#pragma once
#include "aztec/common.hpp"

// Hot loops of the quadratures: complex dot products, vector-matrix products
// and Cauchy sums. Each has a scalar reference and an AVX2 variant; the
// dispatcher picks one at runtime (AZTEC_ISA=scalar forces the reference).
namespace aztec::kernels {

enum class Isa { Scalar, Avx2 };

bool available(Isa isa);
Isa active();
void force(Isa isa);  // throws ConfigError if unavailable
const char* name(Isa isa);

// sum_i a_i b_i (no conjugation)
cplx dot(const cplx* a, const cplx* b, int n);
// y_j = sum_i u_i M(i, j), M row-major rows x cols
void vecmat(const cplx* u, const cplx* M, int rows, int cols, cplx* y);
// out[i*R + r] = sum_j c[r*nz + j] / (z_j - w_i)
void cauchy(const cplx* w, int nw, const cplx* z, int nz, const cplx* c, int R, cplx* out);

namespace scalar {
cplx dot(const cplx* a, const cplx* b, int n);
void vecmat(const cplx* u, const cplx* M, int rows, int cols, cplx* y);
void cauchy(const cplx* w, int nw, const cplx* z, int nz, const cplx* c, int R, cplx* out);
}  // namespace scalar

namespace avx2 {
cplx dot(const cplx* a, const cplx* b, int n);
void vecmat(const cplx* u, const cplx* M, int rows, int cols, cplx* y);
void cauchy(const cplx* w, int nw, const cplx* z, int nz, const cplx* c, int R, cplx* out);
}  // namespace avx2

}  // namespace aztec::kernels
