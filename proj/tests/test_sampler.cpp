#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "aztec/sampler.hpp"

using namespace aztec;

TEST_CASE("initial tiling is a perfect matching with consistent weight") {
    for (int n : {1, 2, 4, 16}) {
        const Graph g(n);
        const auto t = initial_tiling(g, 0.7);
        CHECK(is_perfect_matching(g, t));
        CHECK(std::abs(t.log_weight - recompute_log_weight(g, t, 0.7)) < 1e-12);
    }
}

TEST_CASE("faces: heat-bath probabilities are weight ratios") {
    const double a = 0.6;
    const Graph g(4);
    const auto faces = build_faces(g, a);
    CHECK(faces.size() == 25);  // even-sum centres in [1, 7]^2
    for (const auto& f : faces) {
        double w0 = 1, w1 = 1;
        for (int k = 0; k < 2; ++k) {
            const Point x = g.white()[f.w[k]];
            w0 *= std::abs(kasteleyn_entry(x + kStep[f.d0[k]], x, a));
            w1 *= std::abs(kasteleyn_entry(x + kStep[f.d1[k]], x, a));
        }
        CHECK(f.p0 == doctest::Approx(w0 / (w0 + w1)).epsilon(1e-14));
    }
}

TEST_CASE("chain: validity, determinism and weight drift") {
    Chain c1(8, 0.5, 42), c2(8, 0.5, 42), c3(8, 0.5, 43);
    c1.sweeps(50);
    c2.sweeps(50);
    c3.sweeps(50);
    CHECK(is_perfect_matching(c1.graph(), c1.state()));
    CHECK(c1.state().dir == c2.state().dir);
    CHECK(c1.state().dir != c3.state().dir);
    CHECK(std::abs(c1.state().log_weight - recompute_log_weight(c1.graph(), c1.state(), 0.5)) < 1e-9);
}

TEST_CASE("chain: n=2 visits tilings in proportion to weight") {
    const double a = 0.5;
    const Graph g(2);
    const auto all = enumerate_tilings(g, a);
    std::map<std::vector<std::uint8_t>, double> expect;
    double Z = 0;
    for (const auto& t : all) Z += t.weight;
    for (const auto& t : all) expect[t.dir] = t.weight / Z;
    Chain c(2, a, 7);
    std::map<std::vector<std::uint8_t>, long> seen;
    const long N = 200000;
    for (long i = 0; i < N; ++i) {
        for (int k = 0; k < 10; ++k) c.flip_once();
        ++seen[c.state().dir];
    }
    CHECK(seen.size() == all.size());
    for (const auto& [d, p] : expect) {
        const double f = double(seen[d]) / N;
        CHECK(std::abs(f - p) < 0.01);
    }
}

TEST_CASE("rng: below is in range and uniform is in [0,1)") {
    Rng r(3);
    for (int i = 0; i < 10000; ++i) {
        const auto k = r.below(7);
        CHECK(k < 7);
        const double u = r.uniform();
        CHECK((u >= 0 && u < 1));
    }
}

TEST_CASE("dump round trip") {
    Chain c(8, 0.875, 11);
    c.sweeps(20);
    std::stringstream ss;
    write_dump(ss, c.state(), 0.875, 11, 20);
    long long sweep = 0;
    const auto t = read_dump(ss, c.graph(), 0.875, &sweep);
    CHECK(sweep == 20);
    CHECK(t.dir == c.state().dir);
    CHECK(is_perfect_matching(c.graph(), t));
    std::stringstream bad("# 8 0.875 11 20\n3:1 2:9\n");
    CHECK_THROWS(read_dump(bad, c.graph(), 0.875));
}
