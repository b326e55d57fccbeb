#include <doctest.h>

#include <set>

#include "aztec/lattice.hpp"

using namespace aztec;

TEST_CASE("classify: parity classes") {
    CHECK(classify(1, 0, 4).cls == VertexClass::W0);
    CHECK(classify(3, 0, 4).cls == VertexClass::W1);
    CHECK(classify(0, 1, 4).cls == VertexClass::B0);
    CHECK(classify(2, 1, 4).cls == VertexClass::B1);
    CHECK_THROWS_AS(classify(1, 1, 4), DomainError);
    CHECK_THROWS_AS(classify(9, 0, 4), DomainError);
    CHECK_THROWS_AS(classify(-1, 0, 4), DomainError);
}

TEST_CASE("classify: every odd-sum point lands in exactly one class") {
    const int n = 8;
    int counts[4] = {};
    for (int x1 = 0; x1 <= 2 * n; ++x1)
        for (int x2 = 0; x2 <= 2 * n; ++x2)
            if ((x1 + x2) & 1) ++counts[static_cast<int>(classify(x1, x2, n).cls)];
    CHECK(counts[0] + counts[1] == n * (n + 1));
    CHECK(counts[2] + counts[3] == n * (n + 1));
}

TEST_CASE("kasteleyn_entry: case table") {
    const Point w0{1, 0}, w1{3, 0};
    CHECK(kasteleyn_entry(w0 + E1, w0, 0.875) == cplx(0.875));
    CHECK(kasteleyn_entry(w1 + E1, w1, 0.3) == cplx(1.0));
    CHECK(kasteleyn_entry(w0 + E2, w0, 0.5) == cplx(0, 0.5));
    CHECK(kasteleyn_entry(w0 - E1, w0, 0.5) == cplx(1.0));
    CHECK(kasteleyn_entry(w1 - E2, w1, 0.5) == cplx(0, 0.5));
    CHECK(kasteleyn_entry(w0 + Point{2, 1}, w0, 0.5) == cplx(0.0));
}

TEST_CASE("build_kasteleyn: sizes and entries") {
    CHECK(build_kasteleyn(Graph(4), 0.5).rows() == 20);
    CHECK(build_kasteleyn(Graph(8), 0.5).rows() == 72);
    CHECK_THROWS_AS(LatticeSize(6), ConfigError);
    CHECK(LatticeSize(8).m == 2);
    const auto K = build_kasteleyn(Graph(4), 1.0);
    for (int i = 0; i < K.rows(); ++i) {
        int nz = 0;
        for (int j = 0; j < K.cols(); ++j)
            if (K(i, j) != 0.0) {
                ++nz;
                CHECK((K(i, j) == cplx(1) || K(i, j) == cplx(0, 1)));
            }
        CHECK(nz <= 4);
    }
    CHECK_THROWS_AS(build_kasteleyn(Graph(4), 0.0), ConfigError);
}

TEST_CASE("zeta and sigma") {
    CHECK(zeta({1, 0}, {2, 1}) == 1);
    CHECK(zeta({1, 0}, {2, 3}) == -1);
    CHECK(zeta({5, 4}, {4, 9}) == 1);
    CHECK_THROWS_AS(zeta({1, 0}, {1, 2}), DomainError);
    const Point x{5, 4};
    CHECK(sigma(x, x + E1) == cplx(1));
    CHECK(sigma(x, x + E2) == cplx(0, 1));
    const Point y{x.x1 + 3 * E1.x1 + 2 * E2.x1, x.x2 + 3 * E1.x2 + 2 * E2.x2};
    CHECK(sigma(x, y) == cplx(1));
    CHECK_THROWS_AS(sigma(x, x + E1 + E2), DomainError);
    const Graph g(4);
    for (const Point w : g.white())
        for (const Point b : g.black()) {
            CHECK(zeta(w, b) * zeta(w, b) == 1);
            CHECK(std::abs(std::pow(sigma(w, b), 4) - 1.0) < 1e-15);
        }
}

TEST_CASE("enumerate_tilings: counts and weights") {
    CHECK(enumerate_tilings(Graph(2), 0.5).size() == 8);
    CHECK(enumerate_tilings(Graph(4), 0.5).size() == 1024);
    for (const auto& t : enumerate_tilings(Graph(2), 1.0)) CHECK(t.weight == 1.0);
    CHECK_THROWS_AS(enumerate_tilings(Graph(8), 0.5), ConfigError);
}

TEST_CASE("|det K| equals the enumerated partition function") {
    for (int n : {2, 4})
        for (double a : {0.5, 0.875, 1.0}) {
            const Graph g(n);
            double Z = 0;
            for (const auto& t : enumerate_tilings(g, a)) Z += t.weight;
            const double det = std::abs(build_kasteleyn(g, a).partialPivLu().determinant());
            CHECK(std::abs(det - Z) / Z < 1e-10);
        }
}

TEST_CASE("dense inverse: edge probabilities") {
    const double a = 0.875;
    const Graph g(4);
    const auto K = build_kasteleyn(g, a);
    const auto Ki = invert_dense(K);
    std::vector<double> wsum(g.size(), 0), bsum(g.size(), 0);
    for (int i = 0; i < g.size(); ++i)
        for (const Point s : kStep) {
            const Point b = g.white()[i] + s;
            const int j = g.black_index(b);
            if (j < 0) continue;
            const cplx rho = K(j, i) * Ki(i, j);
            CHECK(std::abs(rho.imag()) < 1e-12);
            CHECK(rho.real() >= -1e-12);
            CHECK(rho.real() <= 1 + 1e-12);
            wsum[i] += rho.real();
            bsum[j] += rho.real();
        }
    for (int i = 0; i < g.size(); ++i) {
        CHECK(std::abs(wsum[i] - 1) < 1e-10);
        CHECK(std::abs(bsum[i] - 1) < 1e-10);
    }
    const auto K2 = build_kasteleyn(Graph(2), 1.0);
    const auto K2i = invert_dense(K2);
    CHECK((K2 * K2i - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
}
