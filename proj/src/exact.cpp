#include "aztec/exact.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "aztec/kernels.hpp"

namespace aztec {

cplx branch_sqrt(cplx w, double c) {
    const double s = std::sqrt(2 * c);
    if (std::abs(w.real()) == 0.0 && std::abs(w.imag()) <= s)
        throw DomainError("branch_sqrt: argument on the cut i[-sqrt(2c), sqrt(2c)]");
    return I * std::sqrt(-I * (w + I * s)) * std::sqrt(-I * (w - I * s));
}

cplx G(cplx w, double c) { return (w - branch_sqrt(w, c)) / std::sqrt(2 * c); }

cplx t_fn(cplx w, double c) { return w * branch_sqrt(1.0 / w, c); }

cplx f_ab(double a, double b, cplx u, cplx v) {
    const cplx p = 2 * a * a * u * v + 2 * b * b * u * v;
    const cplx q = a * b * (u * u - 1.0) * (v * v - 1.0);
    return (p - q) * (p + q);
}

namespace {

cplx y00(int g1, int g2, double a, double b, cplx u, cplx v) {
    const cplx f = f_ab(a, b, u, v);
    const cplx u2 = u * u, v2 = v * v;
    const double a2 = a * a, b2 = b * b;
    if (g1 == 0 && g2 == 0) {
        const cplx num = 2 * std::pow(a, 7) * u2 * v2
                         - std::pow(a, 5) * b2 * (1.0 + u2 * u2 + u2 * v2 - u2 * u2 * v2 + v2 * v2 - u2 * v2 * v2)
                         - std::pow(a, 3) * b2 * b2 *
                               (1.0 + 3.0 * u2 + 3.0 * v2 + 2.0 * u2 * v2 + u2 * u2 * v2 + u2 * v2 * v2 - u2 * u2 * v2 * v2)
                         - a * b2 * b2 * b2 * (1.0 + v2 + u2 + 3.0 * u2 * v2);
        return num / (4 * (a2 + b2) * (a2 + b2) * f);
    }
    if (g1 == 0 && g2 == 1)
        return a / (4 * (a2 + b2) * f) * (b2 + a2 * u2) * (2 * a2 * v2 + b2 * (1.0 + v2 - u2 + u2 * v2));
    if (g1 == 1 && g2 == 0)
        // the u^2 and v^2 signs in the second factor are the mirror of (0,1)
        return a / (4 * (a2 + b2) * f) * (b2 + a2 * v2) * (2 * a2 * u2 + b2 * (1.0 + u2 - v2 + u2 * v2));
    return a / (4.0 * f) * (2 * a2 * u2 * v2 + b2 * (-1.0 + v2 + u2 + u2 * v2));
}

}  // namespace

cplx y_function(int e1, int e2, int g1, int g2, double a, double b, cplx u, cplx v) {
    if (e1 == 0 && e2 == 0) return y00(g1, g2, a, b, u, v);
    if (e1 == 0 && e2 == 1) return y00(g1, g2, b, a, u, 1.0 / v) / (v * v);
    if (e1 == 1 && e2 == 0) return y00(g1, g2, b, a, 1.0 / u, v) / (u * u);
    return y00(g1, g2, a, b, 1.0 / u, 1.0 / v) / (u * u * v * v);
}

cplx x_function(int e1, int e2, int g1, int g2, cplx w1, cplx w2, double a) {
    const double c = c_of(a);
    const cplx G1 = G(w1, c), G2 = G(w2, c);
    const cplx den = branch_sqrt(w1, c) * branch_sqrt(1.0 / w1, c) * branch_sqrt(w2, c) * branch_sqrt(1.0 / w2, c);
    return G1 * G2 / den * y_function(e1, e2, g1, g2, a, 1.0, G1, G2) * (1.0 - w1 * w1 * w2 * w2);
}

namespace {
int q_sign(int e1, int e2, int g1, int g2) { return neg1pow(e1 + e2 + e1 * e2 + g1 * (1 + e2) + g2 * (1 + e1)); }
}  // namespace

cplx Q_function(int e1, int e2, int g1, int g2, cplx w1, cplx w2, double a) {
    const double c = c_of(a);
    const cplx iw2 = 1.0 / w2;
    return double(q_sign(e1, e2, g1, g2)) * std::pow(t_fn(w1, c), g1) * std::pow(t_fn(iw2, c), g2) *
           std::pow(G(w1, c), e1) * std::pow(G(iw2, c), e2) * x_function(e1, e2, g1, g2, w1, iw2, a);
}

cplx V_jk(int j, int k, int e1, int e2, cplx w1, cplx w2, double a) {
    cplx s = 0;
    for (int g1 = 0; g1 < 2; ++g1)
        for (int g2 = 0; g2 < 2; ++g2)
            s += double(neg1pow(g2 * j + g1 * k)) *
                 (Q_function(e1, e2, g1, g2, w1, w2, a) + double(neg1pow(e2 + 1)) * Q_function(e1, e2, g1, g2, w1, -w2, a));
    return s / 2.0;
}

cplx log_H_tilde(int x1, int x2, cplx w, int m, double c) {
    if ((x1 & 1) || (x2 & 1)) throw DomainError("H_tilde: indices must be even");
    return 2.0 * m * std::log(w) + double(2 * m - x1 / 2) * std::log(-I * G(w, c)) -
           double(2 * m - x2 / 2) * std::log(I * G(1.0 / w, c));
}

HValue H_tilde(int x1, int x2, cplx w, int m, double c) {
    const cplx L = log_H_tilde(x1, x2, w, m, c);
    return {L.real(), std::polar(1.0, L.imag())};
}

BoundaryQuadrature BoundaryQuadrature::automatic(int n, double a) {
    BoundaryQuadrature q;
    const double h = 1 - a;
    const int need = 64 * static_cast<int>(std::ceil(64.0 / h / 64.0));
    if (need <= 2048) {
        q.points = std::max(512, need);
    } else {
        (void)n;
        q.windowed = true;
    }
    return q;
}

namespace {

int thread_count() {
    if (const char* e = std::getenv("AZTEC_THREADS")) {
        const int t = std::atoi(e);
        if (t > 0) return t;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

template <class F>
void parallel_rows(int rows, F&& body) {
    const int T = std::min(thread_count(), std::max(1, rows / 16));
    if (T <= 1) {
        for (int r = 0; r < rows; ++r) body(r);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < T; ++t)
        pool.emplace_back([&, t] {
            for (int r = t; r < rows; r += T) body(r);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

BoundaryIntegrals::BoundaryIntegrals(int n, double a, BoundaryQuadrature q) : n_(n), m_(n / 4), a_(a), c_(c_of(a)) {
    if (n % 4 != 0 || n <= 0) throw ConfigError("boundary integrals need n = 4m");
    if (!(a > 0 && a < 1)) throw ConfigError("boundary integrals need 0 < a < 1");
    const double s = std::sqrt(2 * c_), h = 1 - a;
    if (q.route == BoundaryQuadrature::Route::Circle) {
        const double r = q.radius > 0 ? q.radius : (s + 1) / 2;
        if (!(r > s && r < 1)) throw ConfigError("circle radius must satisfy sqrt(2c) < r < 1");
        const int P = q.points;
        for (int i = 0; i < P; ++i) {
            const double th = 2 * PI * (i + 0.5) / P;
            const cplx e = std::polar(1.0, th);
            w1_.push_back(r * e);
            dw1_.push_back(I * r * e * (2 * PI / P));
            w2_.push_back(e / r);
            dw2_.push_back(I * e / r * (2 * PI / P));
        }
        return;
    }
    // Joukowski ellipse w = s(zeta - 1/zeta)/2 with |zeta| = R; the second
    // contour is its image under w -> 1/w, kept counter-clockwise.
    const double R = 1 + h / 3;
    std::vector<double> phi, wt;
    if (!q.windowed) {
        for (int i = 0; i < q.points; ++i) {
            phi.push_back(2 * PI * (i + 0.5) / q.points);
            wt.push_back(2 * PI / q.points);
        }
    } else {
        if (q.gl_order != 16) throw ConfigError("windowed boundary quadrature uses 16-point Gauss-Legendre panels");
        using GL = boost::math::quadrature::gauss<double, 16>;
        std::vector<double> gx, gw;
        for (size_t i = 0; i < GL::abscissa().size(); ++i) {
            gx.push_back(GL::abscissa()[i]);
            gw.push_back(GL::weights()[i]);
            if (GL::abscissa()[i] != 0) {
                gx.push_back(-GL::abscissa()[i]);
                gw.push_back(GL::weights()[i]);
            }
        }
        const int panels = static_cast<int>(std::lround(2 * q.window / q.panel));
        for (double cen : {PI / 2, 3 * PI / 2})
            for (int p = 0; p < panels; ++p) {
                const double lo = cen + (-q.window + p * q.panel) * h, hi = lo + q.panel * h;
                for (size_t i = 0; i < gx.size(); ++i) {
                    phi.push_back((lo + hi) / 2 + (hi - lo) / 2 * gx[i]);
                    wt.push_back((hi - lo) / 2 * gw[i]);
                }
            }
    }
    for (size_t i = 0; i < phi.size(); ++i) {
        const cplx z = std::polar(R, phi[i]);
        const cplx w = s * (z - 1.0 / z) / 2.0;
        const cplx dw = s * (1.0 + 1.0 / (z * z)) / 2.0 * I * z * wt[i];
        w1_.push_back(w);
        dw1_.push_back(dw);
        w2_.push_back(1.0 / w);
        dw2_.push_back(dw / (w * w));
    }
}

const BoundaryIntegrals::Table& BoundaryIntegrals::table(int e1, int e2) const {
    const int id = 2 * e1 + e2;
    std::call_once(once_[id], [&] {
        const int N = nodes();
        auto T = std::make_unique<Table>();
        for (auto& M : *T) M.assign(static_cast<size_t>(N) * N, 0.0);
        // per-node pieces: w1 side, and 1/w2 for both signs of w2
        struct Side {
            cplx Gv, tv, den;
        };
        std::vector<Side> s1(N), s2p(N), s2m(N);
        for (int i = 0; i < N; ++i) {
            const cplx w = w1_[i];
            s1[i] = {G(w, c_), t_fn(w, c_), branch_sqrt(w, c_) * branch_sqrt(1.0 / w, c_)};
            for (int sg = 0; sg < 2; ++sg) {
                const cplx W = sg ? -w2_[i] : w2_[i];
                const cplx iW = 1.0 / W;
                Side& d = sg ? s2m[i] : s2p[i];
                d = {G(iW, c_), t_fn(iW, c_), branch_sqrt(iW, c_) * branch_sqrt(W, c_)};
            }
        }
        const double sgnm = neg1pow(e2 + 1);
        parallel_rows(N, [&](int a) {
            const Side& A = s1[a];
            for (int b = 0; b < N; ++b) {
                const cplx rr = w1_[a] / w2_[b];
                const cplx tail = 1.0 - rr * rr;
                cplx q[2][2][2];  // [sign][g1][g2]
                for (int sg = 0; sg < 2; ++sg) {
                    const Side& B = sg ? s2m[b] : s2p[b];
                    const cplx base = A.Gv * B.Gv / (A.den * B.den) * tail * std::pow(A.Gv, e1) * std::pow(B.Gv, e2);
                    for (int g1 = 0; g1 < 2; ++g1)
                        for (int g2 = 0; g2 < 2; ++g2) {
                            cplx v = double(q_sign(e1, e2, g1, g2)) * base * y_function(e1, e2, g1, g2, a_, 1.0, A.Gv, B.Gv);
                            if (g1) v *= A.tv;
                            if (g2) v *= B.tv;
                            q[sg][g1][g2] = v;
                        }
                }
                const cplx inv = 1.0 / (w2_[b] - w1_[a]);
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) {
                        cplx s = 0;
                        for (int g1 = 0; g1 < 2; ++g1)
                            for (int g2 = 0; g2 < 2; ++g2)
                                s += double(neg1pow(g2 * j + g1 * k)) * (q[0][g1][g2] + sgnm * q[1][g1][g2]);
                        (*T)[2 * j + k][static_cast<size_t>(a) * N + b] = s * 0.5 * inv;
                    }
            }
        });
        tables_[id] = std::move(T);
    });
    return *tables_[id];
}

std::vector<cplx> BoundaryIntegrals::left(int k, Point x, double& scale) const {
    const int N = nodes();
    std::vector<cplx> L(N), u(N);
    for (int i = 0; i < N; ++i) L[i] = log_H_tilde(x.x1 + 1, k ? 2 * n_ - x.x2 : x.x2, w1_[i], m_, c_);
    scale = std::max_element(L.begin(), L.end(), [](cplx p, cplx q) { return p.real() < q.real(); })->real();
    for (int i = 0; i < N; ++i) u[i] = std::exp(L[i] - scale) * dw1_[i] / w1_[i];
    return u;
}

std::vector<cplx> BoundaryIntegrals::right(int j, Point y, double& scale) const {
    const int N = nodes();
    std::vector<cplx> L(N), v(N);
    for (int i = 0; i < N; ++i) L[i] = -log_H_tilde(j ? 2 * n_ - y.x1 : y.x1, y.x2 + 1, w2_[i], m_, c_);
    scale = std::max_element(L.begin(), L.end(), [](cplx p, cplx q) { return p.real() < q.real(); })->real();
    for (int i = 0; i < N; ++i) v[i] = std::exp(L[i] - scale) * dw2_[i];
    return v;
}

cplx BoundaryIntegrals::I_script(int j, int k, Point x, Point y) const {
    if (!is_white(x.x1, x.x2) || !is_black(y.x1, y.x2)) throw DomainError("I_script: need white x, black y");
    const Table& T = table(eps_of(x), eps_of(y));
    double sx, sy;
    const auto u = left(k, x, sx);
    const auto v = right(j, y, sy);
    const int N = nodes();
    std::vector<cplx> t(N);
    kernels::vecmat(u.data(), T[2 * j + k].data(), N, N, t.data());
    const cplx pre = ipow(y.x1 - x.x1) / ((2 * PI * I) * (2 * PI * I));
    return pre * std::exp(sx + sy) * kernels::dot(t.data(), v.data(), N);
}

cplx BoundaryIntegrals::combination(Point x, Point y) const {
    return I_script(0, 0, x, y) - I_script(1, 0, x, y) - I_script(0, 1, x, y) + I_script(1, 1, x, y);
}

cplx kinv_theorem(Point x, Point y, const BoundaryIntegrals& bi) {
    return kinv_translation(x, y, bi.a()) - bi.combination(x, y);
}

}  // namespace aztec
