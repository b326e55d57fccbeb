#pragma once
#include <complex>
#include <stdexcept>
#include <string>

namespace aztec {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};
inline constexpr double PI = 3.14159265358979323846;

// Error families map onto the CLI exit codes (config 2, numeric 3, io 4).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// i^k for any integer k
inline cplx ipow(long long k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

inline int neg1pow(long long k) { return (k & 1) ? -1 : 1; }

}  // namespace aztec
