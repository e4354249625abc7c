#pragma once

// The conformally invariant metrics themselves: the modulus metric mu_D and
// the Ferrand metric lambda_D in dimension 2, ring modulus/capacity of the
// spherical annulus, and the radial-stretch quasiconformal probe.

#include <utility>
#include <vector>

#include <cimet/geom.hpp>
#include <cimet/specfun.hpp>

namespace cimet {

// Modulus metric mu_D(x,y) = gamma_2(1/th(rho_D(x,y)/2)) = 2 pi / mu(th(rho/2)).
// Zero iff x = y. Only n = 2 has a closed form; other dimensions are served by
// the bracket functions in bounds.hpp and are rejected here.
double mu_metric(const DomainSpec& dom, const Point& x, const Point& y);

// Ferrand metric lambda_D(x,y) = gamma_2(ch(rho_D(x,y)/2)) / 4, n = 2 only.
// Diverges as y -> x (x = y is a domain error). Satisfies mu_D * lambda_D = 4.
double lambda_metric(const DomainSpec& dom, const Point& x, const Point& y);

// Spherical annulus  closure(B^n(0,b)) \ B^n(0,a),  0 < a < b.
struct RingCondenser {
    double a;
    double b;
    Dimension n;
    RingCondenser(double a_, double b_, Dimension n_);
};

// Conformal modulus of the ring's separating curve family:
// omega_{n-1} * (log(b/a))^{1-n}.
double ring_modulus(const RingCondenser& ring);

// Conformal capacity of the ring condenser; coincides with ring_modulus for
// this (the only closed-form) condenser family.
double capacity_ring(const RingCondenser& ring);

// Radial stretch g(x) = |x|^{alpha-1} x on B^n (g(0) = 0), alpha in (0, 1].
// Quasiconformal in the plane with maximal dilatation K = max(alpha, 1/alpha).
struct StretchParam {
    double alpha;
    explicit StretchParam(double a);
    double maximal_dilatation() const;
};

Point radial_stretch(const Point& x, const StretchParam& p);

// Distortion probe for Lipschitz behaviour of mu under the radial stretch:
// for each pair computes ratio = mu(g x, g y) / mu(x, y) and checks it lies in
// [1/K, K]. Reports the observed ratio range and overall pass/fail.
struct DistortionReport {
    double min_ratio;
    double max_ratio;
    int violations;
    bool pass;
};

DistortionReport qc_mu_distortion(const StretchParam& p,
                                  const std::vector<std::pair<Point, Point>>& pairs);

} // namespace cimet
