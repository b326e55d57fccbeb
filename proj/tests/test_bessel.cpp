#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>

#include "aztec/bessel.hpp"
#include "aztec/common.hpp"

using namespace aztec;

TEST_CASE("bessel: reference values") {
    CHECK(bessel_k0(1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-13));
    CHECK(bessel_k1(1.0) == doctest::Approx(0.60190723019723457).epsilon(1e-13));
}

TEST_CASE("bessel: agrees with boost and with the integral representation") {
    for (int nu : {0, 1})
        for (double x : {0.01, 0.1, 0.5, 1.0, 1.99, 2.01, 5.0, 20.0, 50.0}) {
            const double v = bessel_k(nu, x);
            CHECK(std::abs(v - boost::math::cyl_bessel_k(nu, x)) <= 1e-12 * v);
            CHECK(std::abs(v - bessel_k_integral(nu, x)) <= 1e-10 * v);
        }
}

TEST_CASE("bessel: K0' = -K1") {
    for (double x : {0.05, 0.7, 3.0, 12.0}) {
        const double h = 1e-5 * x;
        const double d = (bessel_k0(x + h) - bessel_k0(x - h)) / (2 * h);
        CHECK(d == doctest::Approx(-bessel_k1(x)).epsilon(1e-7));
    }
}

TEST_CASE("bessel: domain") {
    CHECK_THROWS_AS(bessel_k0(0.0), DomainError);
    CHECK_THROWS_AS(bessel_k1(-1.0), DomainError);
    CHECK_THROWS_AS(bessel_k(2, 1.0), DomainError);
}
