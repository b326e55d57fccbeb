#pragma once
#include <optional>
#include <vector>

#include "aztec/common.hpp"
#include "aztec/lattice.hpp"

namespace aztec {

// p = sqrt(1/2 - 2iw), q = sqrt(1/2 + 2iw); principal branches, cuts on
// i(1/4, inf) and i(-inf, -1/4).
struct Roots {
    cplx p, q;
};
Roots roots(cplx w);
cplx f_pm(int sign, cplx w);  // sign = +1 or -1

inline const double kCritical = -1.0 / std::sqrt(2.0);

cplx solve_eta(double alpha);
cplx solve_eta_prime(double alpha);

cplx A_jk(int j, int k, int e1, int e2, cplx w, Roots rw, cplx z, Roots rz);
cplx A_jk(int j, int k, int e1, int e2, cplx w, cplx z);
cplx g_phase(int j, int k, double B, double ax, double ay, cplx w, cplx z);

enum class ContourKind { C0, C0prime, C1, C1prime, Gamma, BranchLoop };

struct TraceOptions {
    double step = 0.05;   // arc-length step, divided by B^2
    double drop = 40.0;   // stop once Re g is this far below the saddle
    int gl_order = 6;     // Gauss-Legendre nodes per straight segment
};

// A traced steepest-descent contour. `arcs` are the traced polylines in the
// contour's own variable (w for C0/C1, z for the primed ones); `vertices`
// keeps the raw tracer output for level-set checks. For alpha < -1/sqrt(2)
// the C0 family also carries the loop around the branch cut, parametrised by
// the root q (or p for C0') running over i[-tau, tau].
struct ContourPath {
    ContourKind kind;
    double alpha = 0, B = 1;
    cplx saddle = 0;
    double phase_level = 0;  // Im of the unscaled exponent along the path
    std::vector<std::vector<cplx>> arcs;
    std::vector<cplx> vertices;
    double loop_tau = 0;  // 0: no loop
    int gl_order = 6;

    bool primed() const { return kind == ContourKind::C0prime || kind == ContourKind::C1prime; }
    std::vector<cplx> polyline() const;  // arcs joined end to end
};

ContourPath trace_contour(ContourKind kind, double alpha, double B = 1.0, const TraceOptions& opt = {});

// Unscaled exponent of a contour family and its level-set drift over the traced vertices.
cplx contour_phase(const ContourPath& c, cplx w);
double level_drift(const ContourPath& c);

// Quadrature nodes with branch values, for a contour optionally split at given points.
struct Discretized {
    std::vector<cplx> x, dx;
    std::vector<Roots> r;
};
Discretized discretize(const ContourPath& c, const std::vector<cplx>& split = {});

std::vector<cplx> crossings(const ContourPath& w, const ContourPath& z);
// Straight lines -conj(mu) -> -Re mu -> Re mu -> mu between the two crossing points.
ContourPath gamma_contour(const ContourPath& c0, const ContourPath& c0p);

struct AsymCoords {
    double B = 1;
    long long m = 0;
    double alpha_x = 0, alpha_y = 0;
    int eps1 = 0, eps2 = 0;
};

struct AsymOptions {
    TraceOptions trace;
    double near = 0.15;  // w-nodes closer than this to the z-path get singularity subtraction
};

// I_idx, idx in 1..4, as a Lebesgue double integral over the traced contours.
// Where the w- and z-contours cross, the residue picked up by moving the
// w-contour across is included for idx 2 and 3; for idx 1 it is I0.
cplx integral_I(int idx, const AsymCoords& co, const AsymOptions& opt = {});
cplx integral_I0(const AsymCoords& co, const ContourPath& gamma);
std::optional<cplx> integral_I0(const AsymCoords& co, const AsymOptions& opt = {});

cplx psi(const AsymCoords& co, const AsymOptions& opt = {});
double bessel_part(const AsymCoords& co);
// q_{e1 e2}(alpha_x, alpha_y): Bessel part + psi + I0/(4 pi) when the contours cross
cplx q_function(int e1, int e2, double ax, double ay, double B = 1.0, const AsymOptions& opt = {});

AsymCoords coords_for(Point x, Point y, long long m, double B);
cplx kinv_asym(Point x, Point y, long long m, double B, const AsymOptions& opt = {});
cplx kinv_translation_asym(Point x, Point y, long long m, double B);

int s_factor(Point x, Point y, Point xt, Point yt);

struct Edge {
    Point w, b;
};
// Leading-order covariance -B^2 m^{-1} s q_{e1 et2}(alpha, alpha~) q_{et1 e2}(alpha~, alpha)
double cov_prediction(const Edge& e, const Edge& et, long long m, double B, const AsymOptions& opt = {});

// A white vertex of class eps near (4m + 2 sqrt(m) alpha B) on the diagonal,
// and the black partner that makes an edge of class pair (eps1, eps2).
Point diagonal_white(double alpha, long long m, double B, int eps);
Edge diagonal_edge(double alpha, long long m, double B, int e1, int e2);

}  // namespace aztec
