#pragma once
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aztec/lattice.hpp"

namespace aztec {

// A perfect matching, stored as one direction code (into kStep) per white vertex.
struct TilingState {
    int n = 0;
    std::vector<std::uint8_t> dir;
    std::vector<int> partner;  // black index -> white index
    double log_weight = 0;
};

TilingState initial_tiling(const Graph& g, double a);
double recompute_log_weight(const Graph& g, const TilingState& t, double a);
bool is_perfect_matching(const Graph& g, const TilingState& t);

// Unit squares of the lattice: centres with even coordinate sum strictly inside.
// Whites are the two vertices with odd x1, blacks the two with odd x2.
struct Face {
    int w[2], b[2];      // indices; w[0]-b[0], w[1]-b[1] is orientation 0
    std::uint8_t d0[2];  // direction codes of orientation 0
    std::uint8_t d1[2];  // orientation 1: w[0]-b[1], w[1]-b[0]
    double p0;           // heat-bath probability of orientation 0
};
std::vector<Face> build_faces(const Graph& g, double a);
// -1 if not flippable, else the current orientation
int face_state(const TilingState& t, const Face& f);
std::vector<int> flippable_faces(const TilingState& t, const std::vector<Face>& faces);
// u in [0,1): orientation 0 iff u < p0
void heat_bath_flip(TilingState& t, const Face& f, double u, double a, const Graph& g);

// mt19937_64; uniforms from the top 53 bits so streams match across standard libraries
class Rng {
public:
    explicit Rng(std::uint64_t seed) : e_(seed) {}
    double uniform() { return static_cast<double>(e_() >> 11) * 0x1.0p-53; }
    std::uint64_t below(std::uint64_t n);
    std::uint64_t raw() { return e_(); }

private:
    std::mt19937_64 e_;
};

class Chain {
public:
    Chain(int n, double a, std::uint64_t seed);
    void flip_once();
    void sweep();  // one heat-bath update per face on average
    void sweeps(long long k) {
        for (long long i = 0; i < k; ++i) sweep();
    }

    const Graph& graph() const { return g_; }
    const TilingState& state() const { return t_; }
    TilingState& state() { return t_; }
    const std::vector<Face>& faces() const { return faces_; }
    double a() const { return a_; }
    long long sweeps_done() const { return sweeps_; }
    bool occupied(const Point& w, const Point& b) const;

private:
    Graph g_;
    double a_;
    Rng rng_;
    std::vector<Face> faces_;
    TilingState t_;
    long long sweeps_ = 0;
};

struct ChainConfig {
    std::uint64_t seed = 1;
    long long burnin = -1;  // sweeps; -1: 20 n^2
    long long gap = -1;     // sweeps; -1: max(1, n^2/4)
    long long samples = 2000;
    double a = 0.875;
    int batches = 20;
};

struct Estimate {
    double mean, stderr_;
    long long n;
};

std::vector<Estimate> estimate_one_point(int n, const std::vector<std::pair<Point, Point>>& edges,
                                         const ChainConfig& cfg);
struct EdgePair {
    Point w, b, wt, bt;
};
std::vector<Estimate> estimate_cov(int n, const std::vector<EdgePair>& pairs, const ChainConfig& cfg);

// One tiling per record: '# n a seed sweep' header line, then run-length
// encoded direction codes 'count:code' separated by spaces.
void write_dump(std::ostream& os, const TilingState& t, double a, std::uint64_t seed, long long sweep);
TilingState read_dump(std::istream& is, const Graph& g, double a, long long* sweep = nullptr);

}  // namespace aztec
