#pragma once

// Special functions underlying the conformally invariant metrics:
// arithmetic-geometric mean, complete elliptic integral K, the Grotzsch ring
// function mu(r), the planar Grotzsch capacity gamma_2 and its ring-capacity
// companion tau_2, sphere surface areas, and the dimensional constants c_n.

namespace cimet {

// Argument in the open interval (0,1). Thin wrapper so signatures say what they
// accept; construction validates.
struct UnitInterval {
    double value;
    explicit UnitInterval(double v);
    operator double() const { return value; }
};

// Argument in (1, infinity), the natural domain of gamma_n.
struct CapacityArg {
    double value;
    explicit CapacityArg(double v);
    operator double() const { return value; }
};

// Dimension n >= 2.
struct Dimension {
    int value;
    explicit Dimension(int n);
    operator int() const { return value; }
};

// Arithmetic-geometric mean of a, b >= 0. agm(x,0) == 0.
double agm(double a, double b);

// Complete elliptic integral of the first kind, modulus r in [0,1).
// K(r) = pi / (2 agm(1, r')), r' = sqrt(1-r^2).
double ellip_k(double r);

// Grotzsch ring function mu(r) = (pi/2) K(r')/K(r), decreasing from +inf to 0
// on (0,1). For r <= 1e-12 uses the asymptotic log(4/r) (relative error O(r^2)).
double grotzsch_mu(UnitInterval r);

// Grotzsch capacity in the plane: gamma_2(s) = 2 pi / mu(1/s), s > 1.
double gamma2(CapacityArg s);

// Teichmuller capacity in the plane: tau_2(t) = gamma_2(sqrt(t+1)) / 2, t > 0.
double tau2(double t);

// Surface area of the unit sphere S^m in R^{m+1}:
// omega_m = 2 pi^{(m+1)/2} / Gamma((m+1)/2), m >= 0.
double surface_area_omega(int m);

// Dimensional constant c_n = 2^{1-n} omega_{n-2} I_n^{1-n} with
// I_n = integral_0^{pi/2} sin^{(2-n)/(n-1)} t dt. c_2 = 2/pi.
double constant_cn(Dimension n);

} // namespace cimet
