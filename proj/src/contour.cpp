#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <functional>
#include <optional>

#include "aztec/asym.hpp"
#include "aztec/quadrature.hpp"

namespace aztec {

Roots roots(cplx w) { return {std::sqrt(0.5 - 2.0 * I * w), std::sqrt(0.5 + 2.0 * I * w)}; }

cplx f_pm(int sign, cplx w) {
    if (w.real() == 0 && std::abs(w.imag()) > 0.25) throw DomainError("f_pm: point on a branch cut");
    const Roots r = roots(w);
    return sign > 0 ? r.p + r.q : r.p - r.q;
}

namespace {

double bracket_root(const std::function<double(double)>& f, double lo, double hi) {
    boost::math::tools::eps_tolerance<double> tol(52);
    std::uintmax_t it = 200;
    auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, tol, it);
    // near t = 1/4 the equation is steep; keep the neighbouring double with the smallest residual
    double best = (a + b) / 2, r = std::abs(f(best));
    for (double x = std::nextafter(a, lo), k = 0; k < 64 && x <= std::nextafter(b, hi); ++k, x = std::nextafter(x, hi))
        if (std::abs(f(x)) < r) r = std::abs(f(best = x));
    return best;
}

}  // namespace

cplx solve_eta(double alpha) {
    if (!(alpha < 0)) throw DomainError("solve_eta: need alpha < 0");
    if (std::abs(alpha - kCritical) < 1e-15) return 0.0;
    const double r = -2 / alpha;
    if (alpha > kCritical) {
        // eta = i t, 0 < t < 1/4
        auto f = [&](double t) { return 1 / std::sqrt(0.5 + 2 * t) + 1 / std::sqrt(0.5 - 2 * t) - r; };
        return I * bracket_root(f, 0.0, std::nextafter(0.25, 0.0));
    }
    // eta real: 1/p + 1/q = 2 Re(1/p)
    auto f = [&](double x) { return 2 * (1.0 / roots(x).p).real() - r; };
    double hi = 1;
    while (f(hi) > 0) hi *= 2;
    return bracket_root(f, 0.0, hi);
}

cplx solve_eta_prime(double alpha) {
    if (!(alpha < 0)) throw DomainError("solve_eta_prime: need alpha < 0");
    auto f = [&](double s) { return 1 / std::sqrt(0.5 + 2 * s) - 1 / std::sqrt(0.5 - 2 * s) - 2 / alpha; };
    return I * bracket_root(f, 0.0, std::nextafter(0.25, 0.0));
}

namespace {

// -2iw + alpha f(w), f = p - q (family 0) or p + q (family 1)
struct Phase {
    int fam;
    double al;
    cplx val(cplx w, Roots r) const { return -2.0 * I * w + al * (fam == 0 ? r.p - r.q : r.p + r.q); }
    cplx d1(cplx, Roots r) const {
        return -2.0 * I - I * al * (fam == 0 ? 1.0 / r.p + 1.0 / r.q : 1.0 / r.p - 1.0 / r.q);
    }
    cplx d2(Roots r) const {
        const cplx p3 = r.p * r.p * r.p, q3 = r.q * r.q * r.q;
        return al * (fam == 0 ? 1.0 / p3 - 1.0 / q3 : 1.0 / p3 + 1.0 / q3);
    }
};

using StopRule = std::function<std::optional<cplx>(cplx prev, cplx w)>;

struct Traced {
    std::vector<cplx> pts;
    bool stopped = false;
};

// Follow Im phi = Im phi(s0) from s0 along u0 until Re phi has dropped by `drop`.
Traced trace(const Phase& F, cplx s0, cplx u0, double step, double drop, const StopRule& stop = {}) {
    const cplx f0 = F.val(s0, roots(s0));
    const double T = f0.imag(), R0 = f0.real();
    Traced out;
    out.pts.push_back(s0);
    cplx w = s0 + step * u0;
    for (int it = 0; it < 400000; ++it) {
        if (stop)
            if (auto r = stop(out.pts.back(), w)) {
                out.pts.push_back(*r);
                out.stopped = true;
                return out;
            }
        for (int k = 0; k < 3; ++k) {
            const Roots r = roots(w);
            w -= I * (F.val(w, r).imag() - T) / F.d1(w, r);
        }
        if (stop)
            if (auto r = stop(out.pts.back(), w)) {
                out.pts.push_back(*r);
                out.stopped = true;
                return out;
            }
        out.pts.push_back(w);
        const Roots r = roots(w);
        if (F.val(w, r).real() < R0 - drop) return out;
        const cplx g = F.d1(w, r);
        if (!(std::abs(g) > 1e-14)) throw NumericError("contour tracer stalled");
        const cplx u = -std::conj(g) / std::abs(g);
        const double dbp = std::min(std::abs(w - 0.25 * I), std::abs(w + 0.25 * I));
        w += std::min(step, 0.2 * dbp) * u;
    }
    throw NumericError("contour tracer did not reach the drop level");
}

std::vector<cplx> refine(const std::vector<cplx>& pts) {
    std::vector<cplx> out{pts.front()};
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const cplx a = pts[i], b = pts[i + 1], mid = (a + b) / 2.0;
        const double d = std::min(std::abs(mid - 0.25 * I), std::abs(mid + 0.25 * I));
        const int k = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / (0.3 * d))));
        for (int t = 1; t <= k; ++t) out.push_back(a + (b - a) * (double(t) / k));
    }
    return out;
}

std::pair<cplx, cplx> descent_dirs(const Phase& F, cplx s) {
    cplx u = std::sqrt(-1.0 / F.d2(roots(s)));
    u /= std::abs(u);
    return {u, -u};
}

// Two descending branches joined through the saddle, lower-Re end first.
std::vector<cplx> through_saddle(const Phase& F, cplx s, cplx u1, cplx u2, double st, double dr,
                                 std::vector<cplx>& raw) {
    auto A = trace(F, s, u1, st, dr).pts;
    auto B = trace(F, s, u2, st, dr).pts;
    if (A.back().real() > B.back().real()) std::swap(A, B);
    std::vector<cplx> path(A.rbegin(), A.rend());
    path.insert(path.end(), B.begin() + 1, B.end());
    raw = path;
    return refine(path);
}

ContourPath trace_unprimed(int fam, double alpha, double B, const TraceOptions& opt) {
    ContourPath c;
    c.kind = fam == 0 ? ContourKind::C0 : ContourKind::C1;
    c.alpha = alpha;
    c.B = B;
    c.gl_order = opt.gl_order;
    const double st = opt.step / (B * B), dr = opt.drop / (B * B);
    const Phase F{fam, alpha};
    if (fam == 1) {
        c.saddle = -solve_eta_prime(alpha);
        auto [u1, u2] = descent_dirs(F, c.saddle);
        c.arcs.push_back(through_saddle(F, c.saddle, u1, u2, st, dr, c.vertices));
    } else if (std::abs(alpha - kCritical) < 1e-14) {
        // degenerate saddle at 0: the two steepest directions are fixed
        c.saddle = 0;
        c.arcs.push_back(
            through_saddle(F, 0.0, std::polar(1.0, -5 * PI / 6), std::polar(1.0, -PI / 6), st, dr, c.vertices));
    } else if (alpha > kCritical) {
        c.saddle = -solve_eta(alpha);
        auto [u1, u2] = descent_dirs(F, c.saddle);
        c.arcs.push_back(through_saddle(F, c.saddle, u1, u2, st, dr, c.vertices));
    } else {
        // Saddle on the negative real axis. The upward branch runs into the
        // cut at iT; the contour goes round it (the loop, in the q variable)
        // and comes back as the mirror image w -> -conj(w).
        const cplx s = -solve_eta(alpha);
        c.saddle = s;
        const double tau = F.val(s, roots(s)).imag() / alpha;
        const double T = 0.25 + tau * tau / 2;
        StopRule stop = [T](cplx prev, cplx w) -> std::optional<cplx> {
            if (w.real() >= 0 || std::abs(w - I * T) < 1.5 * std::abs(w - prev)) return I * T;
            return std::nullopt;
        };
        auto [u1, u2] = descent_dirs(F, s);
        const cplx up = u1.imag() > 0 ? u1 : u2, dn = u1.imag() > 0 ? u2 : u1;
        auto D = trace(F, s, dn, st, dr).pts;
        auto U = trace(F, s, up, st, dr, stop);
        if (!U.stopped) throw NumericError("C0: upper branch missed the branch cut");
        std::vector<cplx> left(D.rbegin(), D.rend());
        left.insert(left.end(), U.pts.begin() + 1, U.pts.end());
        c.vertices.assign(left.begin(), left.end() - 1);  // the endpoint iT sits on the cut
        left = refine(left);
        std::vector<cplx> right;
        for (auto it = left.rbegin(); it != left.rend(); ++it) right.push_back(-std::conj(*it));
        c.arcs = {left, right};
        c.loop_tau = tau;
    }
    c.phase_level = F.val(c.saddle, roots(c.saddle)).imag();
    return c;
}

}  // namespace

ContourPath trace_contour(ContourKind kind, double alpha, double B, const TraceOptions& opt) {
    if (!(B > 0)) throw DomainError("trace_contour: need B > 0");
    switch (kind) {
    case ContourKind::C0: return trace_unprimed(0, alpha, B, opt);
    case ContourKind::C1: return trace_unprimed(1, alpha, B, opt);
    case ContourKind::C0prime:
    case ContourKind::C1prime: {
        // z-contours are the complex conjugates of the w-contours
        ContourPath c = trace_unprimed(kind == ContourKind::C0prime ? 0 : 1, alpha, B, opt);
        c.kind = kind;
        c.saddle = std::conj(c.saddle);
        c.phase_level = -c.phase_level;
        for (auto& arc : c.arcs)
            for (auto& z : arc) z = std::conj(z);
        for (auto& z : c.vertices) z = std::conj(z);
        return c;
    }
    default: throw DomainError("trace_contour: not a traced contour kind");
    }
}

std::vector<cplx> ContourPath::polyline() const {
    std::vector<cplx> out;
    for (const auto& arc : arcs)
        for (const cplx z : arc)
            if (out.empty() || z != out.back()) out.push_back(z);
    return out;
}

cplx contour_phase(const ContourPath& c, cplx w) {
    const int fam = (c.kind == ContourKind::C0 || c.kind == ContourKind::C0prime) ? 0 : 1;
    const Phase F{fam, c.alpha};
    if (c.primed()) {
        const cplx v = std::conj(w);
        return std::conj(F.val(v, roots(v)));
    }
    return F.val(w, roots(w));
}

double level_drift(const ContourPath& c) {
    double worst = 0;
    for (const cplx v : c.vertices) worst = std::max(worst, std::abs(contour_phase(c, v).imag() - c.phase_level));
    return worst;
}

namespace {

// Parameters (t on segment a->b, u on segment c->d) of a proper intersection.
std::optional<std::pair<double, double>> seg_cross(cplx a, cplx b, cplx c, cplx d) {
    const cplx r = b - a, s = d - c, ca = c - a;
    const double den = r.real() * s.imag() - r.imag() * s.real();
    if (den == 0) return std::nullopt;
    const double t = (ca.real() * s.imag() - ca.imag() * s.real()) / den;
    const double u = (ca.real() * r.imag() - ca.imag() * r.real()) / den;
    if (t >= 0 && t < 1 && u >= 0 && u < 1) return std::make_pair(t, u);
    return std::nullopt;
}

std::vector<cplx> insert_splits(const std::vector<cplx>& pts, const std::vector<cplx>& other) {
    if (other.size() < 2) return pts;
    std::vector<cplx> out{pts.front()};
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        std::vector<double> ts;
        for (size_t k = 0; k + 1 < other.size(); ++k)
            if (auto x = seg_cross(pts[i], pts[i + 1], other[k], other[k + 1])) ts.push_back(x->first);
        std::sort(ts.begin(), ts.end());
        for (const double t : ts)
            if (t > 0) out.push_back(pts[i] + t * (pts[i + 1] - pts[i]));
        out.push_back(pts[i + 1]);
    }
    return out;
}

}  // namespace

Discretized discretize(const ContourPath& c, const std::vector<cplx>& split) {
    const GaussRule& g = gauss_legendre(c.gl_order);
    Discretized d;
    auto add_polyline = [&](const std::vector<cplx>& pts0) {
        const auto pts = insert_splits(pts0, split);
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            const cplx mid = (pts[i] + pts[i + 1]) / 2.0, half = (pts[i + 1] - pts[i]) / 2.0;
            if (half == 0.0) continue;
            for (size_t k = 0; k < g.x.size(); ++k) {
                const cplx x = mid + half * g.x[k];
                d.x.push_back(x);
                d.dx.push_back(half * g.w[k]);
                d.r.push_back(roots(x));
            }
        }
    };
    auto add_loop = [&]() {
        // q = i t, t in [-tau, tau]: w = (q^2 - 1/2)/(2i), p = sqrt(1 - q^2), dw = i t dt
        const double tau = c.loop_tau;
        const int npan = std::max(8, static_cast<int>(std::ceil(2 * tau / 0.05)));
        for (int k = 0; k < npan; ++k) {
            const double lo = -tau + 2 * tau * k / npan, hi = -tau + 2 * tau * (k + 1) / npan;
            for (size_t i = 0; i < g.x.size(); ++i) {
                const double t = (lo + hi) / 2 + (hi - lo) / 2 * g.x[i];
                const cplx q = I * t, p = std::sqrt(1.0 - q * q), w = (q * q - 0.5) / (2.0 * I);
                const cplx dw = I * t * ((hi - lo) / 2 * g.w[i]);
                if (c.primed()) {
                    d.x.push_back(std::conj(w));
                    d.dx.push_back(std::conj(dw));
                    d.r.push_back({std::conj(q), std::conj(p)});
                } else {
                    d.x.push_back(w);
                    d.dx.push_back(dw);
                    d.r.push_back({p, q});
                }
            }
        }
    };
    if (c.kind == ContourKind::Gamma) {
        add_polyline(c.arcs.front());
        return d;
    }
    add_polyline(c.arcs.front());
    if (c.loop_tau > 0) add_loop();
    for (size_t i = 1; i < c.arcs.size(); ++i) add_polyline(c.arcs[i]);
    return d;
}

std::vector<cplx> crossings(const ContourPath& w, const ContourPath& z) {
    const auto P = w.polyline(), Q = z.polyline();
    std::vector<cplx> out;
    for (size_t i = 0; i + 1 < P.size(); ++i)
        for (size_t k = 0; k + 1 < Q.size(); ++k)
            if (auto x = seg_cross(P[i], P[i + 1], Q[k], Q[k + 1])) {
                const cplx pt = P[i] + x->first * (P[i + 1] - P[i]);
                bool dup = false;
                for (const cplx o : out) dup = dup || std::abs(o - pt) < 1e-9;
                if (!dup) out.push_back(pt);
            }
    return out;
}

ContourPath gamma_contour(const ContourPath& c0, const ContourPath& c0p) {
    const auto X = crossings(c0, c0p);
    if (X.size() != 2)
        throw DomainError("gamma_contour: expected two crossings, found " + std::to_string(X.size()));
    const cplx mu = X[0].real() > X[1].real() ? X[0] : X[1];
    const cplx other = X[0].real() > X[1].real() ? X[1] : X[0];
    if (std::abs(other + std::conj(mu)) > 1e-6 * std::max(1.0, std::abs(mu)))
        throw NumericError("gamma_contour: crossings are not mirror images");
    ContourPath g;
    g.kind = ContourKind::Gamma;
    g.alpha = c0.alpha;
    g.B = c0.B;
    g.gl_order = 40;
    g.arcs = {{-std::conj(mu), cplx(-mu.real(), 0), cplx(mu.real(), 0), mu}};
    return g;
}

}  // namespace aztec
