#pragma once
#include <array>
#include <memory>
#include <mutex>
#include <vector>

#include "aztec/common.hpp"
#include "aztec/lattice.hpp"

namespace aztec {

inline double c_of(double a) { return 1.0 / (a + 1.0 / a); }

// sqrt(w^2 + 2c) with the cut on i[-sqrt(2c), sqrt(2c)]
cplx branch_sqrt(cplx w, double c);
cplx G(cplx w, double c);
cplx t_fn(cplx w, double c);

cplx f_ab(double a, double b, cplx u, cplx v);
cplx y_function(int e1, int e2, int g1, int g2, double a, double b, cplx u, cplx v);
cplx x_function(int e1, int e2, int g1, int g2, cplx w1, cplx w2, double a);
cplx Q_function(int e1, int e2, int g1, int g2, cplx w1, cplx w2, double a);
cplx V_jk(int j, int k, int e1, int e2, cplx w1, cplx w2, double a);

// H~_{x1,x2}(w) = exp(log_mag) * phase; x1, x2 even.
struct HValue {
    double log_mag;
    cplx phase;
    cplx value() const { return std::exp(log_mag) * phase; }
};
cplx log_H_tilde(int x1, int x2, cplx w, int m, double c);
HValue H_tilde(int x1, int x2, cplx w, int m, double c);

struct BoundaryQuadrature {
    enum class Route { Joukowski, Circle };
    Route route = Route::Joukowski;
    int points = 512;        // trapezoid nodes per contour
    double radius = 0.0;     // circle route; 0 selects (sqrt(2c)+1)/2
    bool windowed = false;   // Gauss-Legendre panels around arg(zeta) = pi/2, 3pi/2 only
    double window = 10.0;    // half-width of each window, in units of 1-a
    double panel = 0.5;      // panel width, in units of 1-a
    int gl_order = 16;

    // Full trapezoid for small graphs; windowed panels once m is mesoscopic.
    static BoundaryQuadrature automatic(int n, double a);
};

// The four boundary integrals I^{j,k}_{e1,e2}(a, x, y) on a size-n graph.
// The kernel V(w1,w2)/(w2-w1) does not depend on x or y, so it is tabulated
// once per (e1,e2) and each integral reduces to a bilinear form.
class BoundaryIntegrals {
public:
    BoundaryIntegrals(int n, double a, BoundaryQuadrature q = {});

    int n() const { return n_; }
    double a() const { return a_; }
    int nodes() const { return static_cast<int>(w1_.size()); }

    cplx I_script(int j, int k, Point x, Point y) const;
    // I00 - I10 - I01 + I11
    cplx combination(Point x, Point y) const;

private:
    using Table = std::array<std::vector<cplx>, 4>;  // index 2j + k, row-major N x N
    const Table& table(int e1, int e2) const;
    std::vector<cplx> left(int k, Point x, double& scale) const;
    std::vector<cplx> right(int j, Point y, double& scale) const;

    int n_, m_;
    double a_, c_;
    std::vector<cplx> w1_, dw1_, w2_, dw2_;
    mutable std::array<std::once_flag, 4> once_;
    mutable std::array<std::unique_ptr<Table>, 4> tables_;
};

// Translation-invariant inverse on the infinite lattice.
struct FullPlaneOffset {
    int e1, e2, u, v;
};
// Decompose a white/black pair into (w, b + 2u e1 + 2v e2) with w in W0 and
// w, b in one fundamental domain {W0, W0+e1 (B1), W0+e2 (B0), W0+e1+e2 (W1)}.
FullPlaneOffset fundamental_offset(Point x, Point y);

// Residue in z, periodic trapezoid in arg w; nodes = 0 picks max(256, 40/(1-a)).
cplx kinv_full_plane(int e1, int e2, int u, int v, double a, int nodes = 0);
// Plain two-torus trapezoid; slow, used as an oracle.
cplx kinv_full_plane_2d(int e1, int e2, int u, int v, double a, int P);
cplx kinv_translation(Point x, Point y, double a);

cplx kinv_theorem(Point x, Point y, const BoundaryIntegrals& bi);

}  // namespace aztec
