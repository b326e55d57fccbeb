#include "aztec/asym.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "aztec/bessel.hpp"
#include "aztec/kernels.hpp"

namespace aztec {

cplx A_jk(int j, int k, int e1, int e2, cplx w, Roots rw, cplx z, Roots rz) {
    const double S = neg1pow(e1 + e2);
    const cplx pw = rw.p, qw = rw.q, pz = rz.p, qz = rz.q;
    const cplx pre = -S / (pw * qw * pz * qz);
    const cplx t1 = 2.0 * I * (w - z);
    const cplx t2 = S * (pw + double(neg1pow(j)) * pz) * (double(neg1pow(k)) * qw + qz);
    const cplx t3 = (double(neg1pow(e1)) * pw + double(neg1pow(e2 + k)) * qw + double(neg1pow(e2)) * qz +
                     double(neg1pow(e1 + j)) * pz) *
                    (pw * qz + double(neg1pow(j + k)) * qw * pz);
    return pre * (t1 + t2 + t3);
}

cplx A_jk(int j, int k, int e1, int e2, cplx w, cplx z) { return A_jk(j, k, e1, e2, w, roots(w), z, roots(z)); }

namespace {

cplx fw_of(int k, Roots r) { return k == 0 ? r.p - r.q : r.p + r.q; }
cplx fz_of(int j, Roots r) { return j == 0 ? r.q - r.p : r.p + r.q; }

}  // namespace

cplx g_phase(int j, int k, double B, double ax, double ay, cplx w, cplx z) {
    return B * B * (-2.0 * I * (w - z) + ax * fw_of(k, roots(w)) + ay * fz_of(j, roots(z)));
}

namespace {

using ContourKey = std::tuple<int, double, double, double, double, int>;

std::shared_ptr<const ContourPath> cached_contour(ContourKind kind, double alpha, double B, const TraceOptions& t) {
    static std::mutex mu;
    static std::map<ContourKey, std::shared_ptr<const ContourPath>> cache;
    const ContourKey key{static_cast<int>(kind), alpha, B, t.step, t.drop, t.gl_order};
    {
        std::lock_guard<std::mutex> lk(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto c = std::make_shared<const ContourPath>(trace_contour(kind, alpha, B, t));
    std::lock_guard<std::mutex> lk(mu);
    if (cache.size() > 256) cache.clear();
    return cache.emplace(key, c).first->second;
}

double dist_to_polyline(cplx w, const std::vector<cplx>& Z) {
    double best = INFINITY;
    for (size_t k = 0; k + 1 < Z.size(); ++k) {
        const cplx a = Z[k], d = Z[k + 1] - a;
        const double L2 = std::norm(d);
        const double t = L2 > 0 ? std::clamp(((w - a) * std::conj(d)).real() / L2, 0.0, 1.0) : 0.0;
        best = std::min(best, std::abs(w - (a + t * d)));
    }
    return best;
}

// int dz/(z - w) along the polyline
cplx log_ratio_sum(cplx w, const std::vector<cplx>& Z) {
    cplx s = 0;
    for (size_t k = 0; k + 1 < Z.size(); ++k) s += std::log((Z[k + 1] - w) / (Z[k] - w));
    return s;
}

// gamma through two mirror crossing points, or nothing
std::optional<ContourPath> gamma_of(const std::vector<cplx>& X) {
    if (X.empty()) return std::nullopt;
    if (X.size() != 2) throw NumericError("contours cross " + std::to_string(X.size()) + " times, expected 0 or 2");
    const cplx mu = X[0].real() > X[1].real() ? X[0] : X[1];
    const cplx other = X[0].real() > X[1].real() ? X[1] : X[0];
    if (std::abs(other + std::conj(mu)) > 1e-6 * std::max(1.0, std::abs(mu)))
        throw NumericError("crossing points are not mirror images");
    ContourPath g;
    g.kind = ContourKind::Gamma;
    g.gl_order = 40;
    g.arcs = {{-std::conj(mu), cplx(-mu.real(), 0), cplx(mu.real(), 0), mu}};
    return g;
}

struct DoubleResult {
    std::array<cplx, 4> I;      // per class 2 e1 + e2, including residue corrections (idx 2..4)
    std::optional<ContourPath> gamma;
};

// Lebesgue double integral of A^{jk} exp(g) / (i (z - w)) over C_k(ax) x C_j'(ay)
// for all four classes at once. The z-dependence of A is spanned by
// {1, z, pq, q, p, q^2, p^2} / (pq), so one Cauchy sum serves every class.
DoubleResult double_integral(int j, int k, double ax, double ay, double B, const AsymOptions& opt) {
    const auto wc = cached_contour(k == 0 ? ContourKind::C0 : ContourKind::C1, ax, B, opt.trace);
    const auto zc = cached_contour(j == 0 ? ContourKind::C0prime : ContourKind::C1prime, ay, B, opt.trace);
    const auto Zp = zc->polyline();
    const auto X = crossings(*wc, *zc);
    const Discretized W = discretize(*wc, X.empty() ? std::vector<cplx>{} : Zp);
    const Discretized Z = discretize(*zc);
    const int nw = static_cast<int>(W.x.size()), nz = static_cast<int>(Z.x.size());
    const double B2 = B * B;

    std::vector<cplx> ew(nw), ez(nz);
    double Ew = -INFINITY, Ez = -INFINITY;
    for (int i = 0; i < nw; ++i) {
        ew[i] = B2 * (-2.0 * I * W.x[i] + ax * fw_of(k, W.r[i]));
        Ew = std::max(Ew, ew[i].real());
    }
    for (int i = 0; i < nz; ++i) {
        ez[i] = B2 * (2.0 * I * Z.x[i] + ay * fz_of(j, Z.r[i]));
        Ez = std::max(Ez, ez[i].real());
    }

    constexpr int R = 8;
    std::vector<cplx> c(static_cast<size_t>(R) * nz);
    for (int i = 0; i < nz; ++i) {
        const cplx p = Z.r[i].p, q = Z.r[i].q, z = Z.x[i];
        const cplx base = Z.dx[i] * std::exp(ez[i] - Ez) / (p * q * I);
        const cplx b[7] = {1.0, z, p * q, q, p, q * q, p * p};
        for (int r = 0; r < 7; ++r) c[r * nz + i] = base * b[r];
        c[7 * nz + i] = Z.dx[i];
    }
    std::vector<cplx> out(static_cast<size_t>(nw) * R);
    kernels::cauchy(W.x.data(), nw, Z.x.data(), nz, c.data(), R, out.data());

    const double sj = neg1pow(j), sk = neg1pow(k);
    DoubleResult res{};
    std::vector<cplx> LmD(nw, 0.0);
    std::vector<char> near(nw, 0);
    for (int i = 0; i < nw; ++i)
        if (dist_to_polyline(W.x[i], Zp) < opt.near) {
            near[i] = 1;
            LmD[i] = log_ratio_sum(W.x[i], Zp) - out[static_cast<size_t>(i) * R + 7];
        }

    for (int e1 = 0; e1 < 2; ++e1)
        for (int e2 = 0; e2 < 2; ++e2) {
            const double S = neg1pow(e1 + e2), e1s = neg1pow(e1), e2s = neg1pow(e2);
            cplx tot = 0;
            for (int i = 0; i < nw; ++i) {
                const cplx P = W.r[i].p, Q = W.r[i].q, w = W.x[i];
                const cplx Xw = e1s * P + e2s * sk * Q;
                const cplx coef[7] = {2.0 * I * w + S * sk * P * Q,
                                      -2.0 * I,
                                      S * sj + P * e1s * sj + sj * sk * Q * e2s,
                                      S * P + Xw * P,
                                      sj * sk * (S * Q + Xw * Q),
                                      P * e2s,
                                      sk * e1s * Q};
                const cplx* o = &out[static_cast<size_t>(i) * R];
                cplx phi = 0;
                for (int r = 0; r < 7; ++r) phi += coef[r] * o[r];
                cplx term = -S / (P * Q) * std::exp(ew[i] - Ew) * phi;
                if (near[i]) {
                    const Roots rz = roots(w);
                    const cplx ezw = B2 * (2.0 * I * w + ay * fz_of(j, rz));
                    const cplx Fww = A_jk(j, k, e1, e2, w, W.r[i], w, rz) * std::exp(ew[i] - Ew + ezw - Ez);
                    term += Fww * LmD[i] / I;
                }
                tot += W.dx[i] * term;
            }
            res.I[2 * e1 + e2] = tot * std::exp(Ew + Ez);
        }

    res.gamma = gamma_of(X);
    if (res.gamma && !(j == 0 && k == 0)) {
        // residue from moving the w-contour across the z-contour
        const Discretized G = discretize(*res.gamma);
        for (int e1 = 0; e1 < 2; ++e1)
            for (int e2 = 0; e2 < 2; ++e2) {
                cplx s = 0;
                for (size_t i = 0; i < G.x.size(); ++i) {
                    const cplx gww = B2 * (ax * fw_of(k, G.r[i]) + ay * fz_of(j, G.r[i]));
                    s += G.dx[i] * A_jk(j, k, e1, e2, G.x[i], G.r[i], G.x[i], G.r[i]) * std::exp(gww);
                }
                res.I[2 * e1 + e2] -= 2 * PI * s;
            }
    }
    return res;
}

using DoubleKey = std::tuple<int, int, double, double, double, double, double, int, double>;

std::shared_ptr<const DoubleResult> cached_double(int j, int k, double ax, double ay, double B,
                                                  const AsymOptions& o) {
    static std::mutex mu;
    static std::map<DoubleKey, std::shared_ptr<const DoubleResult>> cache;
    const DoubleKey key{j, k, ax, ay, B, o.trace.step, o.trace.drop, o.trace.gl_order, o.near};
    {
        std::lock_guard<std::mutex> lk(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto r = std::make_shared<const DoubleResult>(double_integral(j, k, ax, ay, B, o));
    std::lock_guard<std::mutex> lk(mu);
    if (cache.size() > 4096) cache.clear();
    return cache.emplace(key, r).first->second;
}

constexpr int kJ[5] = {0, 0, 1, 0, 1}, kK[5] = {0, 0, 0, 1, 1};

void check_coords(const AsymCoords& co) {
    if (!(co.B > 0)) throw DomainError("asymptotics: need B > 0");
    if (!(co.alpha_x < 0 && co.alpha_y < 0)) throw DomainError("asymptotics: need alpha_x, alpha_y < 0");
    if ((co.eps1 | co.eps2) & ~1) throw DomainError("asymptotics: classes must be 0 or 1");
}

}  // namespace

cplx integral_I(int idx, const AsymCoords& co, const AsymOptions& opt) {
    if (idx < 1 || idx > 4) throw DomainError("integral_I: idx must be 1..4");
    check_coords(co);
    return cached_double(kJ[idx], kK[idx], co.alpha_x, co.alpha_y, co.B, opt)->I[2 * co.eps1 + co.eps2];
}

cplx integral_I0(const AsymCoords& co, const ContourPath& gamma) {
    const Discretized G = discretize(gamma);
    const double e1s = neg1pow(co.eps1), e2s = neg1pow(co.eps2), B2 = co.B * co.B;
    cplx s = 0;
    for (size_t i = 0; i < G.x.size(); ++i) {
        const cplx p = G.r[i].p, q = G.r[i].q;
        s += G.dx[i] * (1.0 + e2s * p + e1s * q) / (p * q) * std::exp(B2 * (co.alpha_x - co.alpha_y) * (p - q));
    }
    return s;
}

std::optional<cplx> integral_I0(const AsymCoords& co, const AsymOptions& opt) {
    check_coords(co);
    const auto& g = cached_double(0, 0, co.alpha_x, co.alpha_y, co.B, opt)->gamma;
    if (!g) return std::nullopt;
    return integral_I0(co, *g);
}

cplx psi(const AsymCoords& co, const AsymOptions& opt) {
    check_coords(co);
    const int c = 2 * co.eps1 + co.eps2;
    cplx v[5];
    for (int idx = 1; idx <= 4; ++idx)
        v[idx] = cached_double(kJ[idx], kK[idx], co.alpha_x, co.alpha_y, co.B, opt)->I[c];
    return (v[1] - v[2] - v[3] + v[4]) / (32 * PI * PI);
}

double bessel_part(const AsymCoords& co) {
    const double d = co.alpha_y - co.alpha_x;
    if (d == 0) throw DomainError("bessel_part: alpha_x == alpha_y");
    const double x = std::sqrt(2.0) * co.B * co.B * std::abs(d);
    return -bessel_k0(x) / (2 * PI) + (co.eps2 - co.eps1) * (d > 0 ? 1 : -1) * bessel_k1(x) / (std::sqrt(2.0) * PI);
}

cplx q_function(int e1, int e2, double ax, double ay, double B, const AsymOptions& opt) {
    const AsymCoords co{B, 0, ax, ay, e1, e2};
    cplx q = bessel_part(co) + psi(co, opt);
    if (auto i0 = integral_I0(co, opt)) q += *i0 / (4 * PI);
    return q;
}

// alpha from the diagonal position (x1 + x2)/2 = 4m + 2 sqrt(m) alpha B
AsymCoords coords_for(Point x, Point y, long long m, double B) {
    if (!is_white(x.x1, x.x2) || !is_black(y.x1, y.x2)) throw DomainError("coords_for: need white x, black y");
    if (m <= 0 || !(B > 0)) throw DomainError("coords_for: need m > 0, B > 0");
    const double sm = std::sqrt(double(m));
    auto al = [&](Point p) { return ((p.x1 + p.x2) / 2.0 - 4.0 * m) / (2 * sm * B); };
    return {B, m, al(x), al(y), eps_of(x), eps_of(y)};
}

cplx kinv_asym(Point x, Point y, long long m, double B, const AsymOptions& opt) {
    const AsymCoords co = coords_for(x, y, m, B);
    const cplx q = q_function(co.eps1, co.eps2, co.alpha_x, co.alpha_y, B, opt);
    return B / std::sqrt(double(m)) * double(zeta(x, y)) / sigma(x, y) * q;
}

cplx kinv_translation_asym(Point x, Point y, long long m, double B) {
    const AsymCoords co = coords_for(x, y, m, B);
    return B / std::sqrt(double(m)) * double(zeta(x, y)) / sigma(x, y) * bessel_part(co);
}

int s_factor(Point x, Point y, Point xt, Point yt) {
    const cplx s = sigma(x, y) * sigma(xt, yt) / (sigma(x, yt) * sigma(xt, y)) * double(zeta(x, yt) * zeta(xt, y));
    if (std::abs(s.imag()) > 1e-12 || std::abs(std::abs(s.real()) - 1) > 1e-12)
        throw NumericError("s_factor: not +-1");
    return s.real() > 0 ? 1 : -1;
}

double cov_prediction(const Edge& e, const Edge& et, long long m, double B, const AsymOptions& opt) {
    const AsymCoords a = coords_for(e.w, et.b, m, B), b = coords_for(et.w, e.b, m, B);
    const cplx q1 = q_function(a.eps1, a.eps2, a.alpha_x, a.alpha_y, B, opt);
    const cplx q2 = q_function(b.eps1, b.eps2, b.alpha_x, b.alpha_y, B, opt);
    const cplx v = -B * B / double(m) * double(s_factor(e.w, e.b, et.w, et.b)) * q1 * q2;
    if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v.real())) + 1e-14)
        throw NumericError("cov_prediction: imaginary residue " + std::to_string(v.imag()));
    return v.real();
}

Point diagonal_white(double alpha, long long m, double B, int eps) {
    const long long D = static_cast<long long>(std::floor(4.0 * m + 2 * std::sqrt(double(m)) * alpha * B));
    Point x{static_cast<int>(D | 1), static_cast<int>(D & ~1LL)};
    if (eps_of(x) != eps) x.x1 += 2;
    return x;
}

Edge diagonal_edge(double alpha, long long m, double B, int e1, int e2) {
    const Point x = diagonal_white(alpha, m, B, e1);
    return {x, e1 == e2 ? x + E2 : x + E1};
}

}  // namespace aztec
