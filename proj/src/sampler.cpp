#include "aztec/sampler.hpp"

#include <array>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace aztec {

namespace {

int code_of(Point d) {
    for (int k = 0; k < 4; ++k)
        if (kStep[k] == d) return k;
    return -1;
}

double edge_log_weight(Point w, int d, double a) { return std::log(std::abs(kasteleyn_entry(w + kStep[d], w, a))); }

void fill_partners(const Graph& g, TilingState& t) {
    t.partner.assign(g.size(), -1);
    for (int i = 0; i < g.size(); ++i) {
        const int b = g.black_index(g.white()[i] + kStep[t.dir[i]]);
        if (b < 0 || t.partner[b] >= 0) throw NumericError("tiling is not a perfect matching");
        t.partner[b] = i;
    }
}

}  // namespace

// Whites below the anti-diagonal x1 + x2 = 2n pair with +e2, the rest with -e2.
TilingState initial_tiling(const Graph& g, double a) {
    TilingState t;
    t.n = g.n();
    t.dir.resize(g.size());
    for (int i = 0; i < g.size(); ++i) {
        const Point w = g.white()[i];
        t.dir[i] = w.x1 + w.x2 < 2 * g.n() ? 2 : 3;
    }
    fill_partners(g, t);
    t.log_weight = recompute_log_weight(g, t, a);
    return t;
}

double recompute_log_weight(const Graph& g, const TilingState& t, double a) {
    double s = 0;
    for (int i = 0; i < g.size(); ++i) s += edge_log_weight(g.white()[i], t.dir[i], a);
    return s;
}

bool is_perfect_matching(const Graph& g, const TilingState& t) {
    if (static_cast<int>(t.dir.size()) != g.size()) return false;
    std::vector<char> seen(g.size(), 0);
    for (int i = 0; i < g.size(); ++i) {
        if (t.dir[i] > 3) return false;
        const int b = g.black_index(g.white()[i] + kStep[t.dir[i]]);
        if (b < 0 || seen[b]) return false;
        seen[b] = 1;
    }
    return true;
}

std::vector<Face> build_faces(const Graph& g, double a) {
    std::vector<Face> out;
    const int n = g.n();
    for (int f2 = 1; f2 < 2 * n; ++f2)
        for (int f1 = 1; f1 < 2 * n; ++f1) {
            if ((f1 + f2) & 1) continue;
            const Point c{f1, f2};
            const Point nb[4] = {c + Point{1, 0}, c - Point{1, 0}, c + Point{0, 1}, c - Point{0, 1}};
            Point W[2], Bk[2];
            int nw = 0, nbk = 0;
            for (const Point p : nb) (p.x1 & 1 ? W[nw++] : Bk[nbk++]) = p;
            Face f;
            for (int k = 0; k < 2; ++k) {
                f.w[k] = g.white_index(W[k]);
                f.b[k] = g.black_index(Bk[k]);
                f.d0[k] = static_cast<std::uint8_t>(code_of(Bk[k] - W[k]));
                f.d1[k] = static_cast<std::uint8_t>(code_of(Bk[1 - k] - W[k]));
            }
            const double w0 = std::abs(kasteleyn_entry(Bk[0], W[0], a) * kasteleyn_entry(Bk[1], W[1], a));
            const double w1 = std::abs(kasteleyn_entry(Bk[1], W[0], a) * kasteleyn_entry(Bk[0], W[1], a));
            f.p0 = w0 / (w0 + w1);
            out.push_back(f);
        }
    return out;
}

int face_state(const TilingState& t, const Face& f) {
    if (t.dir[f.w[0]] == f.d0[0] && t.dir[f.w[1]] == f.d0[1]) return 0;
    if (t.dir[f.w[0]] == f.d1[0] && t.dir[f.w[1]] == f.d1[1]) return 1;
    return -1;
}

std::vector<int> flippable_faces(const TilingState& t, const std::vector<Face>& faces) {
    std::vector<int> out;
    for (size_t i = 0; i < faces.size(); ++i)
        if (face_state(t, faces[i]) >= 0) out.push_back(static_cast<int>(i));
    return out;
}

void heat_bath_flip(TilingState& t, const Face& f, double u, double a, const Graph& g) {
    const int cur = face_state(t, f);
    if (cur < 0) throw DomainError("heat_bath_flip: face is not flippable");
    const int next = u < f.p0 ? 0 : 1;
    if (next == cur) return;
    for (int k = 0; k < 2; ++k) t.log_weight -= edge_log_weight(g.white()[f.w[k]], t.dir[f.w[k]], a);
    const std::uint8_t* d = next == 0 ? f.d0 : f.d1;
    for (int k = 0; k < 2; ++k) {
        t.dir[f.w[k]] = d[k];
        t.log_weight += edge_log_weight(g.white()[f.w[k]], d[k], a);
    }
    if (next == 0) {
        t.partner[f.b[0]] = f.w[0];
        t.partner[f.b[1]] = f.w[1];
    } else {
        t.partner[f.b[1]] = f.w[0];
        t.partner[f.b[0]] = f.w[1];
    }
}

std::uint64_t Rng::below(std::uint64_t n) {
    const std::uint64_t lim = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = e_();
        if (r >= lim) return r % n;
    }
}

Chain::Chain(int n, double a, std::uint64_t seed) : g_(n), a_(a), rng_(seed) {
    if (!(a > 0 && a <= 1)) throw ConfigError("weight a must lie in (0,1]");
    faces_ = build_faces(g_, a);
    t_ = initial_tiling(g_, a);
}

void Chain::flip_once() {
    const Face& f = faces_[rng_.below(faces_.size())];
    const double u = rng_.uniform();
    if (face_state(t_, f) >= 0) heat_bath_flip(t_, f, u, a_, g_);
}

void Chain::sweep() {
    for (size_t i = 0; i < faces_.size(); ++i) flip_once();
    ++sweeps_;
}

bool Chain::occupied(const Point& w, const Point& b) const {
    const int i = g_.white_index(w);
    return i >= 0 && kStep[t_.dir[i]] == b - w;
}

namespace {

void resolve_defaults(int n, ChainConfig& c) {
    if (c.burnin < 0) c.burnin = 20LL * n * n;
    if (c.gap < 0) c.gap = std::max(1LL, 1LL * n * n / 4);
    if (c.samples < c.batches || c.batches < 2) throw ConfigError("need samples >= batches >= 2");
}

Estimate batch_means(const std::vector<double>& batch, long long n) {
    double m = 0;
    for (double v : batch) m += v;
    m /= batch.size();
    double s2 = 0;
    for (double v : batch) s2 += (v - m) * (v - m);
    s2 /= (batch.size() - 1);
    return {m, std::sqrt(s2 / batch.size()), n};
}

}  // namespace

std::vector<Estimate> estimate_one_point(int n, const std::vector<std::pair<Point, Point>>& edges,
                                         const ChainConfig& cfg0) {
    ChainConfig cfg = cfg0;
    resolve_defaults(n, cfg);
    Chain ch(n, cfg.a, cfg.seed);
    ch.sweeps(cfg.burnin);
    const long long per = cfg.samples / cfg.batches, used = per * cfg.batches;
    std::vector<std::vector<double>> batch(edges.size(), std::vector<double>(cfg.batches, 0.0));
    for (long long s = 0; s < used; ++s) {
        ch.sweeps(cfg.gap);
        for (size_t e = 0; e < edges.size(); ++e)
            if (ch.occupied(edges[e].first, edges[e].second)) batch[e][s / per] += 1.0 / per;
    }
    std::vector<Estimate> out;
    for (auto& b : batch) out.push_back(batch_means(b, used));
    return out;
}

std::vector<Estimate> estimate_cov(int n, const std::vector<EdgePair>& pairs, const ChainConfig& cfg0) {
    ChainConfig cfg = cfg0;
    resolve_defaults(n, cfg);
    Chain ch(n, cfg.a, cfg.seed);
    ch.sweeps(cfg.burnin);
    const long long per = cfg.samples / cfg.batches, used = per * cfg.batches;
    // per pair and batch: sums of x, y, xy
    std::vector<std::vector<std::array<double, 3>>> acc(pairs.size(),
                                                        std::vector<std::array<double, 3>>(cfg.batches, {0, 0, 0}));
    for (long long s = 0; s < used; ++s) {
        ch.sweeps(cfg.gap);
        for (size_t k = 0; k < pairs.size(); ++k) {
            const double x = ch.occupied(pairs[k].w, pairs[k].b), y = ch.occupied(pairs[k].wt, pairs[k].bt);
            auto& a = acc[k][s / per];
            a[0] += x;
            a[1] += y;
            a[2] += x * y;
        }
    }
    std::vector<Estimate> out;
    for (auto& pb : acc) {
        std::vector<double> cov;
        for (auto& a : pb) cov.push_back(a[2] / per - (a[0] / per) * (a[1] / per));
        // per-batch covariance is biased by a factor (per-1)/per; undo it
        for (auto& c : cov) c *= double(per) / (per - 1);
        out.push_back(batch_means(cov, used));
    }
    return out;
}

void write_dump(std::ostream& os, const TilingState& t, double a, std::uint64_t seed, long long sweep) {
    os << std::setprecision(17) << "# " << t.n << ' ' << a << ' ' << seed << ' ' << sweep << '\n';
    for (size_t i = 0; i < t.dir.size();) {
        size_t j = i;
        while (j < t.dir.size() && t.dir[j] == t.dir[i]) ++j;
        os << (j - i) << ':' << int(t.dir[i]) << (j < t.dir.size() ? " " : "");
        i = j;
    }
    os << '\n';
    if (!os) throw IoError("write_dump: stream failure");
}

TilingState read_dump(std::istream& is, const Graph& g, double a, long long* sweep) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# ", 0) != 0) throw IoError("read_dump: missing header");
    std::istringstream hs(line.substr(2));
    int n;
    double a0;
    std::uint64_t seed;
    long long sw;
    if (!(hs >> n >> a0 >> seed >> sw)) throw IoError("read_dump: bad header");
    if (n != g.n()) throw ConfigError("read_dump: size mismatch");
    if (sweep) *sweep = sw;
    if (!std::getline(is, line)) throw IoError("read_dump: missing record");
    TilingState t;
    t.n = n;
    std::istringstream rs(line);
    std::string tok;
    while (rs >> tok) {
        const auto c = tok.find(':');
        if (c == std::string::npos) throw IoError("read_dump: bad run '" + tok + "'");
        const long cnt = std::stol(tok.substr(0, c));
        const int code = std::stoi(tok.substr(c + 1));
        if (cnt <= 0 || code < 0 || code > 3) throw IoError("read_dump: bad run '" + tok + "'");
        t.dir.insert(t.dir.end(), cnt, static_cast<std::uint8_t>(code));
    }
    if (static_cast<int>(t.dir.size()) != g.size()) throw IoError("read_dump: record length mismatch");
    if (!is_perfect_matching(g, t)) throw IoError("read_dump: record is not a perfect matching");
    fill_partners(g, t);
    t.log_weight = recompute_log_weight(g, t, a);
    return t;
}

}  // namespace aztec
