#include "aztec/bessel.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <limits>

#include "aztec/common.hpp"

namespace aztec {

namespace {

constexpr double kEuler = 0.57721566490153286061;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Pair {
    double k0, k1;
};

// I0, I1 and K0 from their series; K1 from the Wronskian I0 K1 + I1 K0 = 1/x.
Pair small(double x) {
    const double y = x * x / 4;
    double term = 1, i0 = 1, i1 = 0.5, hk = 0, k0s = 0, t1 = 0.5;
    for (int k = 1; k < 60; ++k) {
        term *= y / (double(k) * k);
        hk += 1.0 / k;
        i0 += term;
        k0s += term * hk;
        t1 *= y / (double(k) * (k + 1));
        i1 += t1;
        if (term < kEps * i0 && t1 < kEps * i1) break;
    }
    i1 *= x;
    const double k0 = -(std::log(x / 2) + kEuler) * i0 + k0s;
    return {k0, (1.0 / x - i1 * k0) / i0};
}

// Steed's CF2 in the Temme normalisation, nu = 0.
Pair large(double x) {
    double b = 2 * (1 + x), d = 1 / b, h = d, delh = d;
    double q1 = 0, q2 = 1;
    const double a1 = 0.25;
    double q = a1, c = a1, a = -a1;
    double s = 1 + q * delh;
    for (int i = 2; i < 100000; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qn = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qn;
        q += c * qn;
        b += 2;
        d = 1 / (b + a * d);
        delh = (b * d - 1) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    const double k0 = std::sqrt(PI / (2 * x)) * std::exp(-x) / s;
    return {k0, k0 * (x + 0.5 - a1 * h) / x};
}

Pair both(double x) {
    if (!(x > 0)) throw DomainError("bessel_k: need x > 0");
    return x <= 2 ? small(x) : large(x);
}

}  // namespace

double bessel_k0(double x) { return both(x).k0; }
double bessel_k1(double x) { return both(x).k1; }

double bessel_k(int order, double x) {
    if (order == 0) return bessel_k0(x);
    if (order == 1) return bessel_k1(x);
    throw DomainError("bessel_k: order must be 0 or 1");
}

double bessel_k_integral(int order, double x) {
    if (!(x > 0)) throw DomainError("bessel_k_integral: need x > 0");
    boost::math::quadrature::exp_sinh<double> q;
    auto f = [&](double t) {
        const double e = x * std::cosh(t);
        if (e > 745) return 0.0;
        return std::exp(-e) * std::cosh(order * t);
    };
    return q.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-14);
}

}  // namespace aztec
