#pragma once
#include <vector>

namespace aztec {

struct GaussRule {
    std::vector<double> x, w;  // on [-1, 1]
};

// Gauss-Legendre rule of the given order (6, 8, 12, 16, 20, 24, 30, 32 or 40).
const GaussRule& gauss_legendre(int order);

}  // namespace aztec
