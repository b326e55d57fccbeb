#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "aztec/kernels.hpp"

using namespace aztec;

namespace {

std::vector<cplx> random_vec(int n, std::mt19937_64& r) {
    std::normal_distribution<double> d;
    std::vector<cplx> v(n);
    for (auto& x : v) x = {d(r), d(r)};
    return v;
}

double rel(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double num = 0, den = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(a[i]));
    }
    return num / den;
}

}  // namespace

TEST_CASE("kernels: dispatch honours AZTEC_ISA") {
    const char* env = std::getenv("AZTEC_ISA");
    if (env && std::string(env) == "scalar") CHECK(kernels::active() == kernels::Isa::Scalar);
    CHECK(kernels::available(kernels::Isa::Scalar));
}

TEST_CASE("kernels: AVX2 matches the scalar reference") {
    if (!kernels::available(kernels::Isa::Avx2)) {
        MESSAGE("AVX2 not available on this machine; equivalence not exercised");
        return;
    }
    std::mt19937_64 r(5);
    for (int n : {1, 2, 3, 7, 64, 513}) {
        const auto a = random_vec(n, r), b = random_vec(n, r);
        const cplx s = kernels::scalar::dot(a.data(), b.data(), n), v = kernels::avx2::dot(a.data(), b.data(), n);
        CHECK(std::abs(s - v) <= 1e-12 * (1 + std::abs(s)) * n);
    }
    for (auto [rows, cols] : {std::pair{5, 3}, {64, 64}, {33, 71}}) {
        const auto u = random_vec(rows, r), M = random_vec(rows * cols, r);
        std::vector<cplx> ys(cols), yv(cols);
        kernels::scalar::vecmat(u.data(), M.data(), rows, cols, ys.data());
        kernels::avx2::vecmat(u.data(), M.data(), rows, cols, yv.data());
        CHECK(rel(ys, yv) < 1e-13);
    }
    for (auto [nw, nz, R] : {std::tuple{3, 5, 1}, {40, 97, 8}, {129, 64, 3}}) {
        const auto w = random_vec(nw, r), z = random_vec(nz, r), c = random_vec(nz * R, r);
        std::vector<cplx> os(nw * R), ov(nw * R);
        kernels::scalar::cauchy(w.data(), nw, z.data(), nz, c.data(), R, os.data());
        kernels::avx2::cauchy(w.data(), nw, z.data(), nz, c.data(), R, ov.data());
        CHECK(rel(os, ov) < 1e-12);
    }
}

TEST_CASE("kernels: forcing an ISA switches the dispatcher") {
    const auto before = kernels::active();
    kernels::force(kernels::Isa::Scalar);
    CHECK(kernels::active() == kernels::Isa::Scalar);
    if (kernels::available(kernels::Isa::Avx2)) {
        kernels::force(kernels::Isa::Avx2);
        CHECK(kernels::active() == kernels::Isa::Avx2);
    } else {
        CHECK_THROWS_AS(kernels::force(kernels::Isa::Avx2), ConfigError);
    }
    kernels::force(before);
}
