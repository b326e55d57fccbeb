#include "aztec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aztec/bessel.hpp"

namespace aztec {

namespace {

constexpr Point kOrigin{1, 0};  // in W0

Point offset_black(int e2, int u, int v) {
    const Point b = kOrigin + (e2 == 1 ? E1 : E2);
    return {b.x1 + 2 * u * E1.x1 + 2 * v * E2.x1, b.x2 + 2 * u * E1.x2 + 2 * v * E2.x2};
}

double signed_value(cplx val, Point x, Point y, int u, int v) { return neg1pow(u + v) * (val / sigma(x, y)).real(); }

}  // namespace

bool CompareRow::within(double rel, double abs_floor) const {
    return std::abs(exact - asym) <= std::max(rel * std::abs(asym), abs_floor);
}

cplx kasym_offset(int e2, int u, int v, double a) {
    if (u == 0) throw DomainError("kasym_offset: u = 0");
    const double h = 1 - a, al = h * u;
    const double x = std::sqrt(2.0) * std::abs(al);
    const Point y = offset_black(e2, u, v);
    const double k = -bessel_k0(x) / (2 * PI) + e2 * (u > 0 ? 1 : -1) * bessel_k1(x) / (std::sqrt(2.0) * PI);
    return h * double(zeta(kOrigin, y)) / sigma(kOrigin, y) * k;
}

std::vector<CompareRow> compare_kinv(double a, const std::vector<int>& vs, const std::vector<double>& alphas,
                                     const std::vector<int>& classes) {
    if (!(a > 0 && a < 1)) throw ConfigError("compare-kinv needs 0 < a < 1");
    const double h = 1 - a;
    std::vector<CompareRow> out;
    for (int e2 : classes)
        for (int v : vs)
            for (double al : alphas) {
                const int u = static_cast<int>(std::lround(al / h));
                if (u == 0) continue;
                const Point y = offset_black(e2, u, v);
                CompareRow r{al, u, v, e2, kinv_full_plane(0, e2, u, v, a), kasym_offset(e2, u, v, a), 0, 0};
                r.signed_exact = signed_value(r.exact, kOrigin, y, u, v);
                r.signed_asym = signed_value(r.asym, kOrigin, y, u, v);
                out.push_back(r);
            }
    return out;
}

std::vector<double> default_compare_grid() {
    std::vector<double> g;
    for (int i = -100; i <= 100; ++i)
        if (std::abs(i) >= 5) g.push_back(i / 100.0);
    return g;
}

std::string PairType::label() const {
    return std::to_string(e1) + std::to_string(e2) + std::to_string(et1) + std::to_string(et2);
}

const std::array<PairType, 6>& pair_types() {
    static const std::array<PairType, 6> t{{{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 0, 1, 1},
                                            {1, 1, 0, 0}, {0, 0, 0, 0}, {1, 1, 1, 1}}};
    return t;
}

PairType parse_pair_type(const std::string& s) {
    for (const auto& t : pair_types())
        if (t.label() == s) return t;
    throw ConfigError("unknown pair type '" + s + "' (use 1010, 1001, 0011, 1100, 0000 or 1111)");
}

double exact_one_point(const Graph& g, const Eigen::MatrixXcd& Kinv, double a, Point w, Point b) {
    return (kasteleyn_entry(b, w, a) * Kinv(g.white_index(w), g.black_index(b))).real();
}

double exact_cov(const Graph& g, const Eigen::MatrixXcd& Kinv, double a, const EdgePair& p) {
    auto Ki = [&](Point w, Point b) { return Kinv(g.white_index(w), g.black_index(b)); };
    const cplx v = -kasteleyn_entry(p.b, p.w, a) * kasteleyn_entry(p.bt, p.wt, a) * Ki(p.w, p.bt) * Ki(p.wt, p.b);
    return v.real();
}

std::vector<CovRow> cov_experiment(const CovExperiment& c) {
    if (c.n <= 0 || c.n % 4) throw ConfigError("cov-experiment needs n = 4m");
    const long long m = c.n / 4;
    const double a = c.a > 0 ? c.a : 1 - c.B / std::sqrt(double(m));
    if (!(a > 0 && a < 1)) throw ConfigError("cov-experiment needs 0 < a < 1");
    const Graph g(c.n);
    std::vector<double> alphas = c.alphas;
    if (alphas.empty())
        for (int i = -24; i < 0; ++i) alphas.push_back(i * 0.25);
    const Edge et = diagonal_edge(c.alpha_tilde, m, c.B, c.type.et1, c.type.et2);
    if (g.white_index(et.w) < 0 || g.black_index(et.b) < 0) throw ConfigError("alpha-tilde edge lies outside the graph");

    std::vector<CovRow> rows;
    std::vector<EdgePair> pairs;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (double al : alphas) {
        if (al >= 0) continue;
        const Edge e = diagonal_edge(al, m, c.B, c.type.e1, c.type.e2);
        if (g.white_index(e.w) < 0 || g.black_index(e.b) < 0) continue;
        CovRow r{al, c.alpha_tilde, nan, nan, nan, 0, nan, std::abs(al - c.alpha_tilde) < 1};
        try {
            r.prediction = cov_prediction(e, et, m, c.B);
        } catch (const std::exception&) {
            r.near = true;  // flagged, kept
        }
        rows.push_back(r);
        pairs.push_back({e.w, e.b, et.w, et.b});
    }
    if (c.n <= 32) {
        const auto Kinv = invert_dense(build_kasteleyn(g, a));
        for (size_t i = 0; i < rows.size(); ++i) rows[i].exact = exact_cov(g, Kinv, a, pairs[i]);
    }
    if (c.run_chain && !pairs.empty()) {
        ChainConfig cc = c.chain;
        cc.a = a;
        const auto est = estimate_cov(c.n, pairs, cc);
        for (size_t i = 0; i < rows.size(); ++i) {
            rows[i].mc_mean = est[i].mean;
            rows[i].mc_stderr = est[i].stderr_;
            rows[i].n_samples = est[i].n;
        }
    }
    return rows;
}

std::vector<QRow> q_curves(double at, const std::vector<double>& alphas, double B) {
    std::vector<QRow> out;
    for (double al : alphas) {
        if (al == at) continue;
        QRow r{al, {}, 0};
        for (int e1 = 0; e1 < 2; ++e1)
            for (int e2 = 0; e2 < 2; ++e2) {
                const cplx q = q_function(e1, e2, al, at, B);
                const cplx qs = q_function(e2, e1, at, al, B);
                r.q[2 * e1 + e2] = q.real();
                r.sym_err = std::max(r.sym_err, std::abs(q - qs));
            }
        out.push_back(r);
    }
    return out;
}

std::vector<double> default_q_grid(int points) {
    std::vector<double> g;
    for (int i = 0; i < points; ++i) g.push_back(-6 + (6 - 0.05) * i / (points - 1));
    return g;
}

MesoTarget meso_target(const BoundaryIntegrals& bi, double ax, double ay, double B) {
    const long long m = bi.n() / 4;
    const long long dx = static_cast<long long>(std::floor(4.0 * m + 2 * std::sqrt(double(m)) * ax * B));
    const long long dy = static_cast<long long>(std::floor(4.0 * m + 2 * std::sqrt(double(m)) * ay * B));
    MesoTarget t{};
    for (int kx : {0, 2})
        for (int ky : {0, 2}) {
            const Point x{static_cast<int>((dx | 1) + kx), static_cast<int>(dx & ~1LL)};
            const Point y{static_cast<int>((dy & ~1LL) + ky), static_cast<int>(dy | 1)};
            const cplx v = -bi.combination(x, y) * sigma(x, y) * std::sqrt(double(m)) / (double(zeta(x, y)) * B);
            t.exact[2 * eps_of(x) + eps_of(y)] = v.real();
        }
    return t;
}

std::vector<std::pair<Point, Point>> edge_panel(const Graph& g, int count, std::uint64_t seed) {
    std::vector<std::pair<Point, Point>> all;
    for (const Point w : g.white())
        for (const Point s : kStep)
            if (g.black_index(w + s) >= 0) all.push_back({w, w + s});
    Rng r(seed);
    for (size_t i = all.size() - 1; i > 0; --i) std::swap(all[i], all[r.below(i + 1)]);
    all.resize(std::min<size_t>(count, all.size()));
    return all;
}

// Half of the pairs are close (second edge within a few lattice steps), half arbitrary.
std::vector<EdgePair> pair_panel(const Graph& g, int count, std::uint64_t seed) {
    const auto edges = edge_panel(g, 1 << 30, seed);
    Rng r(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<EdgePair> out;
    while (static_cast<int>(out.size()) < count) {
        const auto& e = edges[r.below(edges.size())];
        const bool close = out.size() % 2 == 0;
        for (int tries = 0; tries < 1000; ++tries) {
            const auto& f = edges[r.below(edges.size())];
            const int d = std::abs(f.first.x1 - e.first.x1) + std::abs(f.first.x2 - e.first.x2);
            if (f.first == e.first || f.second == e.second) continue;
            if (close && d > 6) continue;
            out.push_back({e.first, e.second, f.first, f.second});
            break;
        }
    }
    return out;
}

}  // namespace aztec
