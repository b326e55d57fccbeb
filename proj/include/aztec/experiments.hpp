#pragma once
#include <array>
#include <string>
#include <vector>

#include "aztec/asym.hpp"
#include "aztec/exact.hpp"
#include "aztec/sampler.hpp"

namespace aztec {

// Full-plane inverse against its Bessel asymptotics along a row of offsets.
// x = (1,0) in W0, y = b + 2u e1 + 2v e2 with b = x + e1 (class (0,1)) or
// x + e2 (class (0,0)); alpha = (1-a) u.
struct CompareRow {
    double alpha;
    int u, v, e2;
    cplx exact, asym;
    double signed_exact, signed_asym;  // (-1)^{u+v} Re(value / Sigma)
    bool within(double rel = 0.05, double abs_floor = 1e-4) const;
};
cplx kasym_offset(int e2, int u, int v, double a);
std::vector<CompareRow> compare_kinv(double a, const std::vector<int>& vs, const std::vector<double>& alphas,
                                     const std::vector<int>& classes = {1, 0});
// -1..1 step 0.01 without |alpha| < 0.05
std::vector<double> default_compare_grid();

// The six edge-pair types (e1 e2 et1 et2) of the covariance experiments.
struct PairType {
    int e1, e2, et1, et2;
    std::string label() const;
};
const std::array<PairType, 6>& pair_types();
PairType parse_pair_type(const std::string& s);  // "1010" etc.

// Exact covariance -K(b,w) K(bt,wt) K^{-1}(w,bt) K^{-1}(wt,b) from a dense inverse.
double exact_cov(const Graph& g, const Eigen::MatrixXcd& Kinv, double a, const EdgePair& p);
double exact_one_point(const Graph& g, const Eigen::MatrixXcd& Kinv, double a, Point w, Point b);

struct CovRow {
    double alpha, alpha_tilde, prediction, mc_mean, mc_stderr;
    long long n_samples;
    double exact;  // NaN when no dense inverse was formed
    bool near;     // |alpha - alpha_tilde| < 1: leading order not expected to hold
};
struct CovExperiment {
    int n = 256;
    double a = -1;  // -1: 1 - B / sqrt(m)
    double B = 1;
    double alpha_tilde = -3;
    PairType type{1, 0, 1, 0};
    std::vector<double> alphas;  // empty: -6..0 step 0.25, alpha != 0
    ChainConfig chain;
    bool run_chain = true;
};
std::vector<CovRow> cov_experiment(const CovExperiment& cfg);

struct QRow {
    double alpha;
    std::array<double, 4> q;  // q00 q01 q10 q11 at (alpha, alpha_tilde)
    double sym_err;           // max |q_{e1e2}(alpha,at) - q_{e2e1}(at,alpha)|
};
std::vector<QRow> q_curves(double alpha_tilde, const std::vector<double>& alphas, double B = 1.0);
std::vector<double> default_q_grid(int points = 121);  // [-6, -0.05]

// Exact mesoscopic target for psi + I0/(4 pi): -(I00 - I10 - I01 + I11) Sigma sqrt(m) / (zeta B)
// for the pair with floor(4m + 2 sqrt(m) alpha B) positions, class (e1, e2).
struct MesoTarget {
    std::array<double, 4> exact;  // per class 2 e1 + e2
};
// bi must be built for n = 4m, a = 1 - B/sqrt(m)
MesoTarget meso_target(const BoundaryIntegrals& bi, double ax, double ay, double B);

// Fixed n=16 panels for the chain-vs-dense check.
std::vector<std::pair<Point, Point>> edge_panel(const Graph& g, int count, std::uint64_t seed);
std::vector<EdgePair> pair_panel(const Graph& g, int count, std::uint64_t seed);

}  // namespace aztec
