#pragma once

namespace aztec {

// Modified Bessel functions of the second kind, orders 0 and 1, x > 0.
// Power series for x <= 2, Steed's continued fraction (CF2) beyond.
double bessel_k0(double x);
double bessel_k1(double x);
double bessel_k(int order, double x);

// Independent check: int_0^inf exp(-x cosh t) cosh(nu t) dt by adaptive quadrature.
double bessel_k_integral(int order, double x);

}  // namespace aztec
