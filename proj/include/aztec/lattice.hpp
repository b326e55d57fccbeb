#pragma once
#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "aztec/common.hpp"

namespace aztec {

enum class VertexClass { W0, W1, B0, B1 };

struct Point {
    int x1 = 0, x2 = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
inline Point operator-(Point a, Point b) { return {a.x1 - b.x1, a.x2 - b.x2}; }

inline constexpr Point E1{1, 1};
inline constexpr Point E2{-1, 1};

// Direction codes used for matchings: the black partner of white x is x + kStep[d].
inline constexpr std::array<Point, 4> kStep{{{1, 1}, {-1, -1}, {-1, 1}, {1, -1}}};

struct LatticePoint {
    Point p;
    VertexClass cls;
    bool white() const { return cls == VertexClass::W0 || cls == VertexClass::W1; }
    int eps() const { return (cls == VertexClass::W1 || cls == VertexClass::B1) ? 1 : 0; }
};

inline bool is_white(int x1, int x2) { return (x1 & 1) && !(x2 & 1); }
inline bool is_black(int x1, int x2) { return !(x1 & 1) && (x2 & 1); }
// x1 + x2 = 2 eps + 1 (mod 4); valid for either colour.
inline int eps_of(int x1, int x2) { return (((x1 + x2 - 1) % 4 + 4) % 4) / 2; }
inline int eps_of(Point p) { return eps_of(p.x1, p.x2); }

LatticePoint classify(int x1, int x2, int n);

struct LatticeSize {
    int n, m;
    explicit LatticeSize(int n_);  // throws ConfigError unless n % 4 == 0
};

// Kasteleyn entry K_a(y, x) for black y and white x.
cplx kasteleyn_entry(Point y, Point x, double a);

int zeta(Point x, Point y);
cplx sigma(Point x, Point y);

// The Aztec graph of linear size n: every point of [0,2n]^2 with odd coordinate sum.
// Vertices are numbered row-major by (x2, x1) within each colour.
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(white_.size()); }
    const std::vector<Point>& white() const { return white_; }
    const std::vector<Point>& black() const { return black_; }
    bool inside(Point p) const { return p.x1 >= 0 && p.x2 >= 0 && p.x1 <= 2 * n_ && p.x2 <= 2 * n_; }
    int white_index(Point p) const;  // -1 if absent
    int black_index(Point p) const;

private:
    int n_;
    std::vector<Point> white_, black_;
    std::vector<int> index_;  // (2n+1)^2 grid, index within own colour
};

// Rows are black vertices, columns white vertices (K_a(y, x)).
Eigen::MatrixXcd build_kasteleyn(const Graph& g, double a);

// Inverse indexed [white, black]; checks the residual of K * K^{-1}.
Eigen::MatrixXcd invert_dense(const Eigen::MatrixXcd& K, double tol = 1e-10);

struct Tiling {
    std::vector<std::uint8_t> dir;  // per white vertex, code into kStep
    double weight;
};

// Exhaustive enumeration; refuses n > 4.
std::vector<Tiling> enumerate_tilings(const Graph& g, double a);

}  // namespace aztec
