#pragma once

// Hyperbolic geometry of the unit ball B^n and upper half-space H^n, plus the
// midpoint-rotation parametrization used by the two-sided rho bounds.

#include <cstddef>
#include <vector>

namespace cimet {

struct Point {
    std::vector<double> coords;

    Point() = default;
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}
    static Point xy(double x, double y) { return Point({x, y}); }

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }

    double norm() const;
    double dot(const Point& other) const;
    Point operator+(const Point& other) const;
    Point operator-(const Point& other) const;
    Point operator*(double s) const;
};

enum class DomainKind { UnitBall, HalfSpace };

// Which model (B^n or H^n) and its dimension.
struct DomainSpec {
    DomainKind kind;
    int n;
    static DomainSpec unit_ball(int n) { return {DomainKind::UnitBall, n}; }
    static DomainSpec half_space(int n) { return {DomainKind::HalfSpace, n}; }
    // true iff x is an interior point of the domain
    bool contains(const Point& x) const;
};

// Hyperbolic distance in the unit ball:
// sh^2(rho/2) = |x-y|^2 / ((1-|x|^2)(1-|y|^2)).
double rho_ball(const Point& x, const Point& y);

// Hyperbolic distance in the upper half-space (last coordinate positive):
// sh^2(rho/2) = |x-y|^2 / (4 x_n y_n).
double rho_halfspace(const Point& x, const Point& y);

double rho(const DomainSpec& dom, const Point& x, const Point& y);

// th(rho_D(x,y)/2) and 1/ch(rho_D(x,y)/2), computed directly from the
// sh^2(rho/2) closed form (stable near the boundary).
double th_half_rho(const DomainSpec& dom, const Point& x, const Point& y);
double sech_half_rho(const DomainSpec& dom, const Point& x, const Point& y);

// Map a hyperbolic ball B_rho(center, M) in B^n to its euclidean realization:
// a euclidean ball; returns its center (along the ray through `center`) and
// radius. Requires |center| < 1, M > 0.
struct EuclideanBall {
    Point center;
    double radius;
};
EuclideanBall hyp_ball_to_euclidean(const Point& center, double M);

// Midpoint-rotation parameters of a pair x, y in B^2:
//   d = |x-y|/2, k = |x+y|/2, nu = angle in [0, pi/2] between the chord
// direction (x-y) and the midpoint ray (x+y). For k = 0 or d = 0, nu = 0.
struct RotationParams {
    double d;
    double k;
    double nu;
    // validates 0 < d < 1, 0 < k < 1, 0 <= nu <= pi/2
    RotationParams(double d_, double k_, double nu_);
};
RotationParams rotation_params(const Point& x, const Point& y);

// th(rho/2) of the pair with parameters (d, k, nu):
//   th(rho/2) = 2d / sqrt((1 + d^2 - k^2)^2 + 4 k^2 d^2 sin^2 nu).
// Decreasing in nu on [0, pi/2], so nu = pi/2 gives the smallest and nu = 0 the
// largest distance over all rotations with fixed (d, k). The nu = 0 member
// corresponds to a pair inside B^2 only when d + k < 1.
double th_half_rho_rotated(const RotationParams& p);

} // namespace cimet
