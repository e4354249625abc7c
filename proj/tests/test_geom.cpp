#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <cimet/geom.hpp>

using namespace cimet;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const DomainSpec kDisk = DomainSpec::unit_ball(2);
const DomainSpec kHalf = DomainSpec::half_space(2);
} // namespace

TEST_CASE("point arithmetic") {
    const Point a = Point::xy(3.0, 4.0);
    const Point b = Point::xy(1.0, -2.0);
    CHECK(a.norm() == 5.0);
    CHECK(a.dot(b) == -5.0);
    CHECK((a + b).coords == std::vector<double>{4.0, 2.0});
    CHECK((a - b).coords == std::vector<double>{2.0, 6.0});
    CHECK((a * 0.5).coords == std::vector<double>{1.5, 2.0});
    CHECK(a.dim() == 2);
}

TEST_CASE("domain membership") {
    CHECK(kDisk.contains(Point::xy(0.3, -0.4)));
    CHECK_FALSE(kDisk.contains(Point::xy(0.8, 0.8)));
    CHECK_FALSE(kDisk.contains(Point::xy(1.0, 0.0)));
    CHECK(kHalf.contains(Point::xy(-40.0, 0.001)));
    CHECK_FALSE(kHalf.contains(Point::xy(0.0, 0.0)));
    CHECK_FALSE(kHalf.contains(Point::xy(0.0, -1.0)));
}

TEST_CASE("hyperbolic distance in the ball") {
    // radial distance: rho(0, t e1) = 2 arth t
    for (double t : {0.1, 0.5, 0.9, 0.999}) {
        CHECK(rho_ball(Point::xy(0.0, 0.0), Point::xy(t, 0.0)) ==
              Approx(2.0 * std::atanh(t)).epsilon(1e-13));
    }
    // reference pair
    const Point x = Point::xy(0.6, 0.3);
    const Point y = Point::xy(0.1, 0.1);
    CHECK(rho_ball(x, y) == Approx(1.3598020131905580295).epsilon(1e-14));
    CHECK(rho_ball(x, y) == rho_ball(y, x)); // exact symmetry
    CHECK(rho_ball(x, x) == 0.0);
    CHECK(rho(kDisk, x, y) == rho_ball(x, y));

    CHECK_THROWS_AS(rho_ball(Point::xy(1.1, 0.0), Point::xy(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(rho_ball(Point::xy(0.0, 0.0), Point::xy(0.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(rho_ball(Point(std::vector<double>{0.1, 0.1, 0.1}), Point::xy(0.0, 0.0)),
                    std::domain_error);
}

TEST_CASE("hyperbolic distance in the half-space") {
    CHECK(rho_halfspace(Point::xy(0.0, 1.0), Point::xy(1.0, 1.0)) ==
          Approx(0.962423650119206895).epsilon(1e-14));
    CHECK(rho_halfspace(Point::xy(0.0, 1.0), Point::xy(1.0, 1.0)) ==
          Approx(2.0 * std::asinh(0.5)).epsilon(1e-15));
    // vertical pair: rho = |log(y2/y1)|
    CHECK(rho_halfspace(Point::xy(0.0, 1.0), Point::xy(0.0, std::exp(1.0))) ==
          Approx(1.0).epsilon(1e-13));
    CHECK(rho(kHalf, Point::xy(0.0, 1.0), Point::xy(1.0, 1.0)) ==
          rho_halfspace(Point::xy(0.0, 1.0), Point::xy(1.0, 1.0)));
    CHECK_THROWS_AS(rho_halfspace(Point::xy(0.0, 0.0), Point::xy(0.0, 1.0)), std::domain_error);
}

TEST_CASE("th and sech of half the distance") {
    const Point x = Point::xy(0.6, 0.3);
    const Point y = Point::xy(0.1, 0.1);
    const double th = th_half_rho(kDisk, x, y);
    const double sech = sech_half_rho(kDisk, x, y);
    CHECK(th == Approx(0.59145503557528214096).epsilon(1e-14));
    CHECK(th * th + sech * sech == Approx(1.0).epsilon(1e-15));
    CHECK(th == Approx(std::tanh(rho_ball(x, y) / 2.0)).epsilon(1e-14));
    CHECK(sech == Approx(1.0 / std::cosh(rho_ball(x, y) / 2.0)).epsilon(1e-14));
    // the pair (0.5 e1, 0) has th(rho/2) exactly 1/2
    CHECK(th_half_rho(kDisk, Point::xy(0.5, 0.0), Point::xy(0.0, 0.0)) == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("hyperbolic ball to euclidean ball") {
    const EuclideanBall ball = hyp_ball_to_euclidean(Point::xy(0.5, 0.0), 1.0);
    CHECK(ball.center[0] == Approx(0.41540134100829238089).epsilon(1e-14));
    CHECK(ball.center[1] == 0.0);
    CHECK(ball.radius == Approx(0.36613511384563576308).epsilon(1e-14));
    // boundary points along the axis sit at hyperbolic distance exactly 1
    const Point zp = Point::xy(ball.center[0] + ball.radius, 0.0);
    const Point zm = Point::xy(ball.center[0] - ball.radius, 0.0);
    CHECK(rho_ball(Point::xy(0.5, 0.0), zp) == Approx(1.0).epsilon(1e-12));
    CHECK(rho_ball(Point::xy(0.5, 0.0), zm) == Approx(1.0).epsilon(1e-12));
    // centered at the origin the euclidean center is the origin
    const EuclideanBall origin_ball = hyp_ball_to_euclidean(Point::xy(0.0, 0.0), 1.0);
    CHECK(origin_ball.center.norm() == 0.0);
    CHECK(origin_ball.radius == Approx(std::tanh(0.5)).epsilon(1e-15));
    CHECK_THROWS_AS(hyp_ball_to_euclidean(Point::xy(1.5, 0.0), 1.0), std::domain_error);
    CHECK_THROWS_AS(hyp_ball_to_euclidean(Point::xy(0.5, 0.0), 0.0), std::domain_error);
}

TEST_CASE("midpoint-rotation parameters") {
    // worked example: d = |x-y|/2, k = |x+y|/2, nu the chord/midpoint angle
    const RotationParams p = rotation_params(Point::xy(0.5, 0.3), Point::xy(0.1, 0.3));
    CHECK(p.d == Approx(0.2).epsilon(1e-15));
    CHECK(p.k == Approx(std::sqrt(0.72) / 2.0).epsilon(1e-15));
    CHECK(p.nu == Approx(kPi / 4.0).epsilon(1e-14));

    // reference pair
    const RotationParams q = rotation_params(Point::xy(0.6, 0.3), Point::xy(0.1, 0.1));
    CHECK(q.d == Approx(std::sqrt(0.29) / 2.0).epsilon(1e-15));
    CHECK(q.k == Approx(std::sqrt(0.65) / 2.0).epsilon(1e-15));
    CHECK(q.nu == Approx(0.138639737134158065468).epsilon(1e-13));

    CHECK_THROWS_AS(rotation_params(Point::xy(0.5, 0.5), Point::xy(0.5, 0.5)),
                    std::domain_error); // zero chord
    CHECK_THROWS_AS(rotation_params(Point::xy(0.5, 0.5), Point::xy(-0.5, -0.5)),
                    std::domain_error); // antipodal midpoint
    CHECK_THROWS_AS(rotation_params(Point::xy(1.5, 0.0), Point::xy(0.1, 0.1)),
                    std::domain_error); // outside the disk
    CHECK_THROWS_AS(rotation_params(Point(std::vector<double>{0.1, 0.1, 0.1}),
                                    Point(std::vector<double>{0.2, 0.1, 0.1})),
                    std::domain_error); // planar only

    CHECK_THROWS_AS(RotationParams(0.0, 0.5, 0.1), std::domain_error);
    CHECK_THROWS_AS(RotationParams(0.5, 1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(RotationParams(0.5, 0.5, -0.1), std::domain_error);
    CHECK_THROWS_AS(RotationParams(0.5, 0.5, 2.0), std::domain_error);
}

TEST_CASE("rotated distance: closed form, native consistency, monotonicity") {
    // (d, k, nu = 0) closed form: 2d / (1 + d^2 - k^2)
    CHECK(th_half_rho_rotated(RotationParams(0.125, 0.375, 0.0)) ==
          Approx(0.25 / 0.875).epsilon(1e-15));

    // the native parameters reproduce th(rho/2) of the original pair
    const Point x = Point::xy(0.6, 0.3);
    const Point y = Point::xy(0.1, 0.1);
    const RotationParams q = rotation_params(x, y);
    CHECK(th_half_rho_rotated(q) == Approx(th_half_rho(kDisk, x, y)).epsilon(1e-14));

    // decreasing in nu
    const double v0 = th_half_rho_rotated(RotationParams(0.2, 0.4, 0.0));
    const double v1 = th_half_rho_rotated(RotationParams(0.2, 0.4, 0.7));
    const double v2 = th_half_rho_rotated(RotationParams(0.2, 0.4, kPi / 2.0));
    CHECK(v0 > v1);
    CHECK(v1 > v2);
}
