#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "aztec/csv.hpp"
#include "aztec/exact.hpp"
#include "aztec/experiments.hpp"
#include "aztec/kernels.hpp"
#include "svg.hpp"

namespace aztec::cli {

namespace {

void emit(const CsvTable& t, const Options& o) {
    if (o.out.empty() || o.out == "-")
        t.write(std::cout);
    else
        t.save(o.out);
}

void add_header(CsvTable& t, const Options& o) {
    std::istringstream s(o.header);
    for (std::string line; std::getline(s, line);)
        if (!line.empty()) t.comment(line);
    t.comment(std::string("kernels: ") + kernels::name(kernels::active()));
}

// Long runs need an explicit go-ahead.
void guard_long(const Options& o, int n, double updates) {
    if (n < 128) return;
    std::cerr << "estimated cost: " << updates << " single-face updates (n=" << n << ")\n";
    if (!o.confirm_long) throw ConfigError("n >= 128 is a long run; pass --confirm-long to proceed");
}

}  // namespace

int compare_kinv(const Options& o) {
    const double a = o.a > 0 ? o.a : 0.999;
    if (o.eps2 != 0 && o.eps2 != 1) throw ConfigError("--eps2 must be 0 or 1");
    const auto rows = aztec::compare_kinv(a, o.v, default_compare_grid(), {o.eps2});
    CsvTable t({"alpha", "v", "exact_re", "exact_im", "asym_re", "asym_im", "signed_exact", "signed_asym"});
    add_header(t, o);
    t.comment("class (0," + std::to_string(o.eps2) + "), a=" + format_double(a));
    int bad = 0;
    for (const auto& r : rows) {
        t.row({r.alpha, double(r.v), r.exact.real(), r.exact.imag(), r.asym.real(), r.asym.imag(), r.signed_exact,
               r.signed_asym});
        bad += !r.within();
    }
    t.comment("rows outside max(5% rel, 1e-4): " + std::to_string(bad) + "/" + std::to_string(rows.size()));
    emit(t, o);
    if (!o.svg.empty()) {
        std::vector<svg::Series> ss;
        for (int v : o.v) {
            svg::Series e{"exact v=" + std::to_string(v), {}, {}, true}, s{"asym v=" + std::to_string(v), {}, {}, false};
            for (const auto& r : rows)
                if (r.v == v) {
                    e.x.push_back(r.alpha);
                    e.y.push_back(r.signed_exact);
                    s.x.push_back(r.alpha);
                    s.y.push_back(r.signed_asym);
                }
            ss.push_back(s);
            ss.push_back(e);
        }
        svg::plot(o.svg, "(-1)^{u+v} K^{-1} / Sigma, a=" + format_double(a), "alpha", ss);
    }
    return 0;
}

int validate_theorem(const Options& o) {
    const int n = o.n > 0 ? o.n : 4;
    const double a = o.a > 0 ? o.a : 0.5;
    if (n > 32) throw ConfigError("validate-theorem needs n <= 32 (dense oracle)");
    const Graph g(n);
    const auto Kinv = invert_dense(build_kasteleyn(g, a));
    BoundaryQuadrature q = BoundaryQuadrature::automatic(n, a);
    if (o.quad_points > 0) {
        q.points = o.quad_points;
        q.windowed = false;
    }
    if (o.radius > 0) {
        q.route = BoundaryQuadrature::Route::Circle;
        q.radius = o.radius;
    }
    const BoundaryIntegrals bi(n, a, q);
    CsvTable t({"x1", "x2", "y1", "y2", "abs_err"});
    add_header(t, o);
    const bool sampled = n > 8;
    std::vector<std::pair<int, int>> entries;
    if (!sampled) {
        for (int i = 0; i < g.size(); ++i)
            for (int j = 0; j < g.size(); ++j) entries.push_back({i, j});
    } else {
        Rng r(o.seed);
        for (int k = 0; k < 2000; ++k) entries.push_back({int(r.below(g.size())), int(r.below(g.size()))});
    }
    double mx = 0, mean = 0;
    for (auto [i, j] : entries) {
        const Point x = g.white()[i], y = g.black()[j];
        const double e = std::abs(kinv_theorem(x, y, bi) - Kinv(i, j));
        mx = std::max(mx, e);
        mean += e / entries.size();
        t.row({double(x.x1), double(x.x2), double(y.x1), double(y.x2), e});
    }
    t.comment("entries " + std::to_string(entries.size()) + (sampled ? " (sampled subset)" : " (all n(n+1)^2 pairs)"));
    t.comment("max_abs_err " + format_double(mx) + " mean_abs_err " + format_double(mean));
    emit(t, o);
    std::cerr << "max |theorem - dense| = " << mx << ", mean = " << mean << "\n";
    return 0;
}

int cov_experiment(const Options& o) {
    CovExperiment c;
    c.n = o.n > 0 ? o.n : 256;
    c.a = o.a;
    c.B = o.B;
    c.type = parse_pair_type(o.pair_type);
    c.chain.seed = o.seed;
    c.chain.burnin = o.burnin;
    c.chain.gap = o.gap;
    if (o.samples > 0) c.chain.samples = o.samples;
    const long long n2 = 1LL * c.n * c.n;
    const long long bi = o.burnin >= 0 ? o.burnin : 20 * n2, gap = o.gap >= 0 ? o.gap : std::max(1LL, n2 / 4);
    guard_long(o, c.n, 2.0 * n2 * (bi + c.chain.samples * gap));
    const std::vector<double> ats = o.alpha_tilde.empty() ? std::vector<double>{-3.0} : o.alpha_tilde;
    CsvTable t({"alpha", "alpha_tilde", "prediction", "mc_mean", "mc_stderr", "n_samples", "exact", "near"});
    add_header(t, o);
    t.comment("pair type " + c.type.label() + " (e1 e2 et1 et2)");
    std::vector<svg::Series> ss;
    for (double at : ats) {
        c.alpha_tilde = at;
        const auto rows = aztec::cov_experiment(c);
        svg::Series p{"prediction, at=" + format_double(at), {}, {}, false}, m{"MC, at=" + format_double(at), {}, {}, true};
        for (const auto& r : rows) {
            t.row({r.alpha, r.alpha_tilde, r.prediction, r.mc_mean, r.mc_stderr, double(r.n_samples), r.exact,
                   double(r.near)});
            p.x.push_back(r.alpha);
            p.y.push_back(r.prediction);
            m.x.push_back(r.alpha);
            m.y.push_back(r.mc_mean);
        }
        ss.push_back(p);
        ss.push_back(m);
    }
    emit(t, o);
    if (!o.svg.empty()) svg::plot(o.svg, "cov, pair type " + c.type.label(), "alpha", ss);
    return 0;
}

int sample(const Options& o) {
    const int n = o.n > 0 ? o.n : 16;
    if (n % 2) throw ConfigError("sample: n must be even");
    const double a = o.a > 0 ? o.a : 0.875;
    const long long n2 = 1LL * n * n;
    const long long bi = o.burnin >= 0 ? o.burnin : 20 * n2;
    const long long every = o.sweeps > 0 ? o.sweeps : (o.gap > 0 ? o.gap : std::max(1LL, n2 / 4));
    const long long records = o.samples > 0 ? o.samples : 1;
    guard_long(o, n, 2.0 * n2 * (bi + records * every));
    Chain ch(n, a, o.seed);
    ch.sweeps(bi);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!o.out.empty() && o.out != "-") {
        file.open(o.out);
        if (!file) throw IoError("cannot open " + o.out + " for writing");
        os = &file;
    }
    for (long long r = 0; r < records; ++r) {
        if (r) ch.sweeps(every);
        if (!is_perfect_matching(ch.graph(), ch.state())) throw NumericError("chain left the set of perfect matchings");
        write_dump(*os, ch.state(), a, o.seed, ch.sweeps_done());
    }
    if (file.is_open() && !file) throw IoError("write failed: " + o.out);
    const double lw = recompute_log_weight(ch.graph(), ch.state(), a);
    std::cerr << "n=" << n << " a=" << a << " sweeps=" << ch.sweeps_done()
              << " flippable faces=" << flippable_faces(ch.state(), ch.faces()).size() << "/" << ch.faces().size()
              << " log weight=" << ch.state().log_weight << " (recomputed " << lw << ")\n";
    if (!o.svg.empty()) svg::tiling(o.svg, ch.graph(), ch.state());
    return 0;
}

int q_curves(const Options& o) {
    const std::vector<double> ats = o.alpha_tilde.empty() ? std::vector<double>{-3.0, -0.6} : o.alpha_tilde;
    if (o.points < 2) throw ConfigError("--points must be at least 2");
    CsvTable t({"alpha_tilde", "alpha", "q00", "q01", "q10", "q11", "sym_err"});
    add_header(t, o);
    std::vector<svg::Series> ss;
    for (double at : ats) {
        const auto rows = aztec::q_curves(at, default_q_grid(o.points), o.B);
        svg::Series s[4];
        for (int k = 0; k < 4; ++k) s[k].name = "q" + std::to_string(k / 2) + std::to_string(k % 2) + ", at=" + format_double(at);
        for (const auto& r : rows) {
            t.row({at, r.alpha, r.q[0], r.q[1], r.q[2], r.q[3], r.sym_err});
            for (int k = 0; k < 4; ++k) {
                s[k].x.push_back(r.alpha);
                s[k].y.push_back(r.q[k]);
            }
        }
        for (auto& x : s) ss.push_back(x);
    }
    emit(t, o);
    if (!o.svg.empty()) svg::plot(o.svg, "q functions", "alpha", ss);
    return 0;
}

}  // namespace aztec::cli
