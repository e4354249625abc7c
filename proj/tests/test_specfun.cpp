#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <cimet/specfun.hpp>

#include "oracle.hpp"

using namespace cimet;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST_CASE("validating argument types") {
    CHECK_NOTHROW(UnitInterval(0.5));
    CHECK_THROWS_AS(UnitInterval(0.0), std::domain_error);
    CHECK_THROWS_AS(UnitInterval(1.0), std::domain_error);
    CHECK_THROWS_AS(UnitInterval(-0.2), std::domain_error);
    CHECK_NOTHROW(CapacityArg(1.0000001));
    CHECK_THROWS_AS(CapacityArg(1.0), std::domain_error);
    CHECK_THROWS_AS(CapacityArg(0.5), std::domain_error);
    CHECK_NOTHROW(Dimension(2));
    CHECK_THROWS_AS(Dimension(1), std::domain_error);
    CHECK_THROWS_AS(Dimension(0), std::domain_error);
}

TEST_CASE("agm basics and reference value") {
    CHECK(agm(3.0, 3.0) == 3.0);
    CHECK(agm(0.0, 5.0) == 0.0);
    CHECK(agm(5.0, 0.0) == 0.0);
    CHECK(agm(2.0, 8.0) == agm(8.0, 2.0));
    CHECK_THROWS_AS(agm(-1.0, 2.0), std::domain_error);

    // agm(1, sqrt(2)) — the lemniscatic value
    const double v = agm(1.0, std::sqrt(2.0));
    CHECK(v == Approx(1.1981402347355922074).epsilon(1e-15));
    CHECK(rel(v, oracle::agm(1.0, std::sqrt(2.0))) < 1e-15);

    // random-ish spot checks against the 256-bit oracle
    for (double a : {0.1, 0.37, 1.0, 2.5}) {
        for (double b : {0.004, 0.82, 3.0, 117.0}) {
            CHECK(rel(agm(a, b), oracle::agm(a, b)) < 1e-14);
        }
    }
}

TEST_CASE("complete elliptic integral of the first kind") {
    CHECK(ellip_k(0.0) == Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(ellip_k(0.5) == Approx(1.6857503548125960429).epsilon(1e-14));
    CHECK(ellip_k(0.9) == Approx(2.2805491384227702046).epsilon(1e-14));
    CHECK(rel(ellip_k(0.5), oracle::ellip_k(0.5)) < 1e-13);
    CHECK(rel(ellip_k(0.9), oracle::ellip_k(0.9)) < 1e-13);
    CHECK_THROWS_AS(ellip_k(1.0), std::domain_error);
    CHECK_THROWS_AS(ellip_k(-0.1), std::domain_error);
}

TEST_CASE("Grotzsch modulus: reference values and oracle agreement") {
    CHECK(grotzsch_mu(UnitInterval(0.5)) == Approx(2.0094593770052851728).epsilon(1e-14));
    // fixed point: mu(sqrt(2)-1) = pi/sqrt(2)
    CHECK(std::abs(grotzsch_mu(UnitInterval(std::sqrt(2.0) - 1.0)) - kPi / std::sqrt(2.0)) <=
          1e-13);
    for (double r : {1e-6, 1e-3, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999999}) {
        CHECK(rel(grotzsch_mu(UnitInterval(r)), oracle::grotzsch_mu(r)) < 1e-13);
    }
}

TEST_CASE("Grotzsch modulus: functional identities") {
    for (double r : {0.05, 0.3, 0.6, 0.95}) {
        const double rc = std::sqrt((1.0 - r) * (1.0 + r));
        CHECK(grotzsch_mu(UnitInterval(r)) * grotzsch_mu(UnitInterval(rc)) ==
              Approx(kPi * kPi / 4.0).epsilon(1e-13));
        const double r2 = (1.0 - r) / (1.0 + r);
        CHECK(grotzsch_mu(UnitInterval(r)) * grotzsch_mu(UnitInterval(r2)) ==
              Approx(kPi * kPi / 2.0).epsilon(1e-13));
    }
}

TEST_CASE("Grotzsch modulus: asymptotic branch is seamless") {
    // at and below the cut the log(4/r) form is exact
    CHECK(grotzsch_mu(UnitInterval(1e-12)) == std::log(4.0 / 1e-12));
    CHECK(grotzsch_mu(UnitInterval(1e-15)) == std::log(4.0 / 1e-15));
    // just above the cut the AGM path continues the same function
    CHECK(rel(grotzsch_mu(UnitInterval(1.0000000001e-12)), std::log(4.0 / 1.0000000001e-12)) <
          1e-13);
    CHECK(rel(grotzsch_mu(UnitInterval(2e-12)), oracle::grotzsch_mu(2e-12)) < 1e-13);
    CHECK(rel(grotzsch_mu(UnitInterval(1e-9)), oracle::grotzsch_mu(1e-9)) < 1e-13);
}

TEST_CASE("gamma_2: reference values, identity with mu, monotonicity") {
    CHECK(gamma2(CapacityArg(2.0)) == Approx(3.1268038453922230139).epsilon(1e-14));
    CHECK(rel(gamma2(CapacityArg(2.0)), oracle::gamma2(2.0)) < 1e-13);
    // gamma_2(1 + sqrt(2)) = 2 sqrt(2)
    CHECK(gamma2(CapacityArg(1.0 + std::sqrt(2.0))) ==
          Approx(2.0 * std::sqrt(2.0)).epsilon(1e-13));
    for (double s : {1.01, 1.5, 4.0, 250.0}) {
        CHECK(rel(gamma2(CapacityArg(s)),
                  4.0 / kPi * grotzsch_mu(UnitInterval((s - 1.0) / (s + 1.0)))) < 1e-12);
    }
    CHECK(gamma2(CapacityArg(2.0)) > gamma2(CapacityArg(3.0)));
    CHECK_THROWS_AS(gamma2(CapacityArg(1.0)), std::domain_error);
}

TEST_CASE("tau_2") {
    // tau_2(t) = gamma_2(sqrt(t+1)) / 2
    CHECK(tau2(3.0) == Approx(1.56340192269611150695).epsilon(1e-14));
    CHECK(tau2(3.0) == Approx(gamma2(CapacityArg(2.0)) / 2.0).epsilon(1e-15));
    CHECK(2.0 * tau2(4.0 * 4.0 - 1.0) == Approx(gamma2(CapacityArg(4.0))).epsilon(1e-13));
    CHECK_THROWS_AS(tau2(0.0), std::domain_error);
    CHECK_THROWS_AS(tau2(-1.0), std::domain_error);
}

TEST_CASE("surface area of the unit sphere") {
    CHECK(surface_area_omega(0) == Approx(2.0).epsilon(1e-15));
    CHECK(surface_area_omega(1) == Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(surface_area_omega(2) == Approx(4.0 * kPi).epsilon(1e-15));
    CHECK(surface_area_omega(3) == Approx(2.0 * kPi * kPi).epsilon(1e-15));
}

TEST_CASE("dimensional constant c_n") {
    CHECK(constant_cn(Dimension(2)) == 2.0 / kPi); // exact closed form in the plane
    CHECK(constant_cn(Dimension(3)) == Approx(0.22847329052223181269).epsilon(5e-13));
    CHECK(constant_cn(Dimension(4)) == Approx(0.032490093171842012109).epsilon(5e-13));
    CHECK(rel(constant_cn(Dimension(3)), oracle::constant_cn(3)) < 5e-13);
    CHECK(rel(constant_cn(Dimension(4)), oracle::constant_cn(4)) < 5e-13);
    // the underlying integral, against the oracle's frozen values
    CHECK(oracle::sin_power_integral(3) == Approx(2.62205755429211981046).epsilon(1e-13));
    CHECK(oracle::sin_power_integral(4) == Approx(3.64297597183136648562).epsilon(1e-13));
}
