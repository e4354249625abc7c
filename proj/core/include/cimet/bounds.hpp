#pragma once

// Closed-form two-sided bounds: capacity log-brackets, the linear/quartic
// modulus-metric bounds, the Ferrand log-bracket, the midpoint-rotation
// bracket on th(rho/2) and its capacity transfer, and the classic
// product-form comparison bracket.

#include <optional>

#include <cimet/geom.hpp>
#include <cimet/specfun.hpp>

namespace cimet {

enum class BoundSource {
    CapacityLogBracket,       // gamma_n between 2^{n-1} c_n log((s+1)/(s-1)) and ... log(4(s+1)/(s-1))
    ModulusLinearBracket,     // mu_D between 2^{n-1} c_n rho and 2^{n-1} c_n (rho + log 4)
    FerrandLogBracket,        // lambda_D between c_n log t and c_n log 2t, t = coth(rho/4)
    MidpointRotation,         // th(rho/2) between the nu = pi/2 and nu = 0 rotation forms
    ProductForm,              // th(rho/2) between the min/max product comparison forms
    MidpointRotationCapacity, // mu_{B^2} bracket obtained from MidpointRotation via gamma_2
};

struct BoundPair {
    double lower;
    std::optional<double> upper; // absent when the inequality's validity condition fails
    BoundSource source;
    // validates lower <= upper when upper is present
    BoundPair(double lower_, std::optional<double> upper_, BoundSource source_);
};

// 2^{n-1} c_n log((s+1)/(s-1)) <= gamma_n(s) <= 2^{n-1} c_n log(4 (s+1)/(s-1)).
BoundPair gamma_n_bounds(Dimension n, CapacityArg s);
// Middle member 2^{n-1} c_n mu((s-1)/(s+1)); equals gamma_n(s) when n = 2.
double gamma_n_bounds_middle(Dimension n, CapacityArg s);

// 2^{n-1} c_n rho <= mu_D <= 2^{n-1} c_n (rho + log 4). For n = 2 this is the
// (4/pi) sandwich.
BoundPair mu_bounds_nd(Dimension n, double rho);
// Middle member 2^{n-1} c_n mu(e^{-rho}); equals mu_D when n = 2.
double mu_bounds_middle(Dimension n, double rho);

// (8 / (pi 2^{1/4})) rho^{1/4} <= mu_D in the plane.
double mu_lower_quartic(double rho);

// max of the quartic and linear lower bounds; the quartic wins exactly for
// rho < 2, the linear for rho > 2, and they agree at rho = 2.
double best_mu_lower(double rho);

// c_n log t <= lambda_D <= c_n log 2t with t = (e^{rho/2}+1)/(e^{rho/2}-1).
BoundPair lambda_bounds(Dimension n, double rho);
// Middle member (c_n/2) mu(t^{-2}); equals lambda_D when n = 2.
double lambda_bounds_middle(Dimension n, double rho);

// Midpoint-rotation bracket on th(rho_{B^2}(x,y)/2):
//   2|x-y| / sqrt(4 - 8 x.y + (|x|^2+|y|^2)^2)  <=  th(rho/2)  <=  |x-y| / (1 - x.y),
// the upper form reported only when |x+y| + |x-y| < 2 (otherwise it is >= 1
// and carries no information). Lower is tight iff |x| = |y|; upper is tight
// iff x, y are collinear with the origin.
BoundPair rho_bounds_midpoint(const Point& x, const Point& y);

// Classic product-form comparison bracket on th(rho_{B^2}(x,y)/2):
//   lower = |x-y| / min(|x-y| + sqrt(1-|x|^2) sqrt(1-|y|^2), 1 + |x||y|)
//   upper = |x-y| / max(|x-y| + (1-|x|)(1-|y|),               1 - |x||y|).
BoundPair rho_bounds_classic(const Point& x, const Point& y);

// Capacity transfer of rho_bounds_midpoint through gamma_2:
//   gamma_2(sqrt(4 - 8 x.y + (|x|^2+|y|^2)^2) / (2|x-y|)) <= mu_{B^2}(x,y)
//   <= gamma_2((1 - x.y)/|x-y|)   when |x+y| + |x-y| < 2.
BoundPair mu_bounds_midpoint(const Point& x, const Point& y);

// [arth((th t)^{1/p})]^p, strictly increasing in p for fixed t > 0; equals t
// at p = 1.
double arth_th_power(double t, double p);

} // namespace cimet
