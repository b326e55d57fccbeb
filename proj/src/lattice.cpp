#include "aztec/lattice.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace aztec {

LatticePoint classify(int x1, int x2, int n) {
    if (x1 < 0 || x2 < 0 || x1 > 2 * n || x2 > 2 * n)
        throw DomainError("classify: point outside [0,2n]^2");
    if (((x1 + x2) & 1) == 0) throw DomainError("classify: even coordinate sum is not a vertex");
    const int e = eps_of(x1, x2);
    if (x1 & 1) return {{x1, x2}, e ? VertexClass::W1 : VertexClass::W0};
    return {{x1, x2}, e ? VertexClass::B1 : VertexClass::B0};
}

LatticeSize::LatticeSize(int n_) : n(n_), m(n_ / 4) {
    if (n_ <= 0 || n_ % 4 != 0) throw ConfigError("n must be a positive multiple of 4, got " + std::to_string(n_));
}

cplx kasteleyn_entry(Point y, Point x, double a) {
    const double e = eps_of(x);
    const double fwd = a * (1 - e) + e;  // weight towards +e1 / +e2
    const double bwd = (1 - e) + a * e;
    const Point d = y - x;
    if (d == E1) return fwd;
    if (d == Point{-1, -1}) return bwd;
    if (d == E2) return I * fwd;
    if (d == Point{1, -1}) return I * bwd;
    return 0.0;
}

int zeta(Point x, Point y) {
    const int d = y.x2 - x.x1;
    if (d & 1) throw DomainError("zeta: y2 - x1 must be even");
    return neg1pow(d / 2);
}

cplx sigma(Point x, Point y) {
    const Point d = y - x;
    if ((d.x1 + d.x2) & 1) throw DomainError("sigma: y - x is not a lattice vector");
    const int k = (d.x1 + d.x2) / 2, l = (d.x2 - d.x1) / 2;
    if ((k & 1) && !(l & 1)) return 1.0;
    if (!(k & 1) && (l & 1)) return I;
    throw DomainError("sigma: y - x has no odd/even e1,e2 decomposition");
}

Graph::Graph(int n) : n_(n) {
    if (n <= 0) throw ConfigError("graph size must be positive");
    const int L = 2 * n + 1;
    index_.assign(static_cast<size_t>(L) * L, -1);
    for (int x2 = 0; x2 < L; ++x2)
        for (int x1 = 0; x1 < L; ++x1) {
            if (is_white(x1, x2)) {
                index_[x2 * L + x1] = static_cast<int>(white_.size());
                white_.push_back({x1, x2});
            } else if (is_black(x1, x2)) {
                index_[x2 * L + x1] = static_cast<int>(black_.size());
                black_.push_back({x1, x2});
            }
        }
}

int Graph::white_index(Point p) const {
    if (!inside(p) || !is_white(p.x1, p.x2)) return -1;
    return index_[p.x2 * (2 * n_ + 1) + p.x1];
}

int Graph::black_index(Point p) const {
    if (!inside(p) || !is_black(p.x1, p.x2)) return -1;
    return index_[p.x2 * (2 * n_ + 1) + p.x1];
}

Eigen::MatrixXcd build_kasteleyn(const Graph& g, double a) {
    if (!(a > 0 && a <= 1)) throw ConfigError("weight a must lie in (0,1]");
    const int N = g.size();
    Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(N, N);
    for (int j = 0; j < N; ++j) {
        const Point x = g.white()[j];
        for (const Point s : kStep) {
            const int i = g.black_index(x + s);
            if (i >= 0) K(i, j) = kasteleyn_entry(x + s, x, a);
        }
    }
    return K;
}

Eigen::MatrixXcd invert_dense(const Eigen::MatrixXcd& K, double tol) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(K);
    Eigen::MatrixXcd Ki = lu.inverse();
    const double res = (K * Ki - Eigen::MatrixXcd::Identity(K.rows(), K.cols())).cwiseAbs().maxCoeff();
    if (!(res <= tol)) throw NumericError("invert_dense: residual " + std::to_string(res));
    return Ki;
}

std::vector<Tiling> enumerate_tilings(const Graph& g, double a) {
    if (g.n() > 4) throw ConfigError("enumerate_tilings: n > 4 refused");
    const int N = g.size();
    std::vector<std::uint8_t> dir(N);
    std::vector<char> used(N, 0);
    std::vector<Tiling> out;
    std::function<void(int, double)> rec = [&](int i, double w) {
        if (i == N) {
            out.push_back({dir, w});
            return;
        }
        const Point x = g.white()[i];
        for (int d = 0; d < 4; ++d) {
            const int b = g.black_index(x + kStep[d]);
            if (b < 0 || used[b]) continue;
            used[b] = 1;
            dir[i] = static_cast<std::uint8_t>(d);
            rec(i + 1, w * std::abs(kasteleyn_entry(x + kStep[d], x, a)));
            used[b] = 0;
        }
    };
    rec(0, 1.0);
    return out;
}

}  // namespace aztec
