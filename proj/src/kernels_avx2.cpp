#include <immintrin.h>

#include <vector>

#include "aztec/kernels.hpp"

namespace aztec::kernels::avx2 {

namespace {

// two interleaved complex doubles per register: [re0 im0 re1 im1]
inline __m256d load(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d br = _mm256_movedup_pd(b);
    const __m256d bi = _mm256_permute_pd(b, 0xF);
    const __m256d as = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(as, bi));
}

// a * (br + i bi) with br, bi already broadcast
inline __m256d cmul_bcast(__m256d a, __m256d br, __m256d bi) {
    return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(_mm256_permute_pd(a, 0x5), bi));
}

inline cplx hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

inline __m256d crecip(__m256d d) {
    const __m256d n2 = _mm256_hadd_pd(_mm256_mul_pd(d, d), _mm256_mul_pd(d, d));
    const __m256d conj = _mm256_xor_pd(d, _mm256_set_pd(-0.0, 0.0, -0.0, 0.0));
    return _mm256_div_pd(conj, n2);
}

}  // namespace

cplx dot(const cplx* a, const cplx* b, int n) {
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(acc0, cmul(load(a + i), load(b + i)));
        acc1 = _mm256_add_pd(acc1, cmul(load(a + i + 2), load(b + i + 2)));
    }
    for (; i + 2 <= n; i += 2) acc0 = _mm256_add_pd(acc0, cmul(load(a + i), load(b + i)));
    cplx s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void vecmat(const cplx* u, const cplx* M, int rows, int cols, cplx* y) {
    for (int j = 0; j < cols; ++j) y[j] = 0.0;
    for (int i = 0; i < rows; ++i) {
        const __m256d ur = _mm256_set1_pd(u[i].real());
        const __m256d ui = _mm256_set1_pd(u[i].imag());
        const cplx* row = M + static_cast<size_t>(i) * cols;
        int j = 0;
        for (; j + 2 <= cols; j += 2) store(y + j, _mm256_add_pd(load(y + j), cmul_bcast(load(row + j), ur, ui)));
        for (; j < cols; ++j) y[j] += u[i] * row[j];
    }
}

void cauchy(const cplx* w, int nw, const cplx* z, int nz, const cplx* c, int R, cplx* out) {
    std::vector<__m256d> acc(R);
    for (int i = 0; i < nw; ++i) {
        const __m256d wv = _mm256_setr_pd(w[i].real(), w[i].imag(), w[i].real(), w[i].imag());
        for (int r = 0; r < R; ++r) acc[r] = _mm256_setzero_pd();
        int j = 0;
        for (; j + 2 <= nz; j += 2) {
            const __m256d inv = crecip(_mm256_sub_pd(load(z + j), wv));
            for (int r = 0; r < R; ++r)
                acc[r] = _mm256_add_pd(acc[r], cmul(load(c + static_cast<size_t>(r) * nz + j), inv));
        }
        for (int r = 0; r < R; ++r) out[i * R + r] = hsum(acc[r]);
        for (; j < nz; ++j) {
            const cplx inv = 1.0 / (z[j] - w[i]);
            for (int r = 0; r < R; ++r) out[i * R + r] += c[static_cast<size_t>(r) * nz + j] * inv;
        }
    }
}

}  // namespace aztec::kernels::avx2
