#include <doctest.h>

#include "aztec/exact.hpp"

using namespace aztec;

namespace {

double max_theorem_error(int n, double a, BoundaryQuadrature q) {
    const Graph g(n);
    const auto Ki = invert_dense(build_kasteleyn(g, a));
    const BoundaryIntegrals bi(n, a, q);
    double err = 0;
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            err = std::max(err, std::abs(kinv_theorem(g.white()[i], g.black()[j], bi) - Ki(i, j)));
    return err;
}

}  // namespace

TEST_CASE("branch_sqrt: square and cut placement") {
    const double c = c_of(0.5);
    for (cplx w : {cplx(0.3, 0.1), cplx(-2, 1), cplx(0.01, -3), cplx(5, 0)}) {
        const cplx s = branch_sqrt(w, c);
        CHECK(std::abs(s * s - (w * w + 2 * c)) < 1e-12 * (1 + std::norm(w)));
    }
    // continuous across the real axis, sign flips across the cut
    CHECK(std::abs(branch_sqrt({0.7, 1e-12}, c) - branch_sqrt({0.7, -1e-12}, c)) < 1e-9);
    CHECK(std::abs(branch_sqrt({1e-12, 0.2}, c) + branch_sqrt({-1e-12, 0.2}, c)) < 1e-9);
    CHECK(std::abs(branch_sqrt({100, 0}, c) - 100.0) < 0.1);
}

TEST_CASE("finite-size inverse: theorem matches dense inverse at n=4") {
    CHECK(max_theorem_error(4, 0.5, {}) < 1e-8);
    CHECK(max_theorem_error(4, 0.875, {}) < 1e-8);
}

TEST_CASE("finite-size inverse: node doubling and circle route agree") {
    const int n = 8;
    const double a = 0.5;
    BoundaryQuadrature q1, q2, qc;
    q1.points = 256;
    q2.points = 512;
    qc.route = BoundaryQuadrature::Route::Circle;
    const BoundaryIntegrals b1(n, a, q1), b2(n, a, q2), bc(n, a, qc);
    const Graph g(n);
    double dd = 0, dc = 0;
    for (int i = 0; i < g.size(); i += 7)
        for (int j = 0; j < g.size(); j += 5) {
            const Point x = g.white()[i], y = g.black()[j];
            const cplx v = b2.combination(x, y);
            dd = std::max(dd, std::abs(b1.combination(x, y) - v));
            dc = std::max(dc, std::abs(bc.combination(x, y) - v));
        }
    CHECK(dd < 1e-10);
    CHECK(dc < 1e-8);
}

TEST_CASE("fundamental_offset: reconstructs the pair") {
    const Graph g(8);
    for (const Point x : g.white())
        for (const Point y : g.black()) {
            const auto o = fundamental_offset(x, y);
            CHECK(o.e1 == eps_of(x));
            CHECK(o.e2 == eps_of(y));
            const Point w0 = o.e1 == 0 ? x : x - Point{0, 2};
            const Point b = (o.e2 == 1 ? w0 + E1 : w0 + E2) + Point{2 * (o.u - o.v), 2 * (o.u + o.v)};
            CHECK(b == y);
        }
    CHECK_THROWS_AS(fundamental_offset({0, 1}, {1, 0}), DomainError);
}

TEST_CASE("full plane: residue form agrees with two-torus trapezoid") {
    const double a = 0.5;
    for (int e1 : {0, 1})
        for (int e2 : {0, 1})
            for (auto [u, v] : {std::pair{0, 0}, {1, -1}, {-2, 3}})
                CHECK(std::abs(kinv_full_plane(e1, e2, u, v, a) - kinv_full_plane_2d(e1, e2, u, v, a, 256)) < 1e-10);
}

TEST_CASE("full plane: K * Kinv is the identity on the infinite lattice") {
    for (double a : {0.5, 0.875}) {
        const Point y{20, 21};
        for (const Point y2 : {Point{20, 21}, Point{22, 21}, Point{24, 25}, Point{18, 23}}) {
            cplx s = 0;
            for (const Point st : kStep) {
                const Point x = y2 - st;
                s += kasteleyn_entry(y2, x, a) * kinv_translation(x, y, a);
            }
            CHECK(std::abs(s - (y2 == y ? 1.0 : 0.0)) < 1e-10);
        }
    }
}
