#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace aztec::cli {

struct Options {
    int n = 0;           // 0: command default
    double a = -1;       // -1: command default (or 1 - B/sqrt(m))
    double B = 1;
    std::vector<double> alpha_tilde;
    std::string pair_type = "1010";
    std::uint64_t seed = 1;
    long long sweeps = -1;  // sample: sweeps between records (-1: gap default)
    long long burnin = -1;
    long long gap = -1;
    long long samples = -1;
    int quad_points = 0;
    double radius = 0;
    int points = 121;
    int eps2 = 1;
    std::vector<int> v{-2, -1, 0, 1, 2};
    std::string out;
    std::string svg;
    bool confirm_long = false;
    std::string header;  // config echo written as CSV comments
};

int compare_kinv(const Options& o);
int validate_theorem(const Options& o);
int cov_experiment(const Options& o);
int sample(const Options& o);
int q_curves(const Options& o);

}  // namespace aztec::cli
