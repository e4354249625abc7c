#pragma once

#include <functional>

namespace cimet {

// Integrate f over (a,b) with a tanh-sinh (double-exponential) rule. The rule
// never evaluates f at the endpoints and converges fast for integrands with
// integrable endpoint singularities. Levels are doubled until two successive
// estimates agree to abs_tol (or an internal level cap is hit).
//
// Precision floor at singular endpoints: nodes are formed as a + d / b - d, so
// once d drops below ulp(endpoint)/2 the abscissa collapses onto the endpoint
// and the (non-finite) sample is skipped. A singularity at a nonzero endpoint
// therefore loses the last representable sliver — about 2*sqrt(ulp/2) ~ 2e-8
// absolute for an inverse-sqrt singularity at |endpoint| = 1. Singularities at
// an endpoint equal to 0 do not suffer this (0 + d is exact); place the
// singular end at 0 when full accuracy is needed.
double integrate_open(const std::function<double(double)>& f, double a, double b,
                      double abs_tol = 1e-10);

} // namespace cimet
