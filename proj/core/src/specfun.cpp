#include <cimet/specfun.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <cimet/quadrature.hpp>

namespace cimet {

namespace {
constexpr double kPi = std::numbers::pi;
// below this, mu(r) is evaluated as log(4/r); relative error O(r^2)
constexpr double kMuAsymptoticCut = 1e-12;
} // namespace

UnitInterval::UnitInterval(double v) : value(v) {
    if (!(v > 0.0) || !(v < 1.0))
        throw std::domain_error("UnitInterval: need 0 < r < 1, got " + std::to_string(v));
}

CapacityArg::CapacityArg(double v) : value(v) {
    if (!(v > 1.0) || !std::isfinite(v))
        throw std::domain_error("CapacityArg: need finite s > 1, got " + std::to_string(v));
}

Dimension::Dimension(int n) : value(n) {
    if (n < 2)
        throw std::domain_error("Dimension: need n >= 2, got " + std::to_string(n));
}

double agm(double a, double b) {
    if (a < 0.0 || b < 0.0)
        throw std::domain_error("agm: arguments must be nonnegative");
    if (a == 0.0 || b == 0.0)
        return 0.0;
    // quadratic convergence: 60 iterations is far beyond what doubles need
    for (int i = 0; i < 60 && std::abs(a - b) > 1e-15 * a; ++i) {
        const double am = 0.5 * (a + b);
        const double gm = std::sqrt(a * b);
        a = am;
        b = gm;
    }
    return 0.5 * (a + b);
}

double ellip_k(double r) {
    if (!(r >= 0.0) || !(r < 1.0))
        throw std::domain_error("ellip_k: need 0 <= r < 1, got " + std::to_string(r));
    const double rc = std::sqrt((1.0 - r) * (1.0 + r));
    return kPi / (2.0 * agm(1.0, rc));
}

double grotzsch_mu(UnitInterval r) {
    const double rv = r.value;
    if (rv <= kMuAsymptoticCut)
        return std::log(4.0 / rv);
    const double rc = std::sqrt((1.0 - rv) * (1.0 + rv));
    return kPi / 2.0 * agm(1.0, rc) / agm(1.0, rv);
}

double gamma2(CapacityArg s) {
    return 2.0 * kPi / grotzsch_mu(UnitInterval(1.0 / s.value));
}

double tau2(double t) {
    if (!(t > 0.0))
        throw std::domain_error("tau2: need t > 0, got " + std::to_string(t));
    return gamma2(CapacityArg(std::sqrt(t + 1.0))) / 2.0;
}

double surface_area_omega(int m) {
    if (m < 0)
        throw std::domain_error("surface_area_omega: need m >= 0, got " + std::to_string(m));
    const double h = (m + 1) / 2.0;
    return 2.0 * std::pow(kPi, h) / std::tgamma(h);
}

double constant_cn(Dimension n) {
    const int nv = n.value;
    if (nv == 2)
        return 2.0 / kPi;
    // I_n = integral over (0, pi/2) of sin(t)^{(2-n)/(n-1)} dt; the exponent
    // lies in (-1, 0) so the singularity at 0 is integrable.
    const double expo = (2.0 - nv) / (nv - 1.0);
    const double integral = integrate_open(
        [expo](double t) { return std::pow(std::sin(t), expo); }, 0.0, kPi / 2.0, 1e-13);
    return std::pow(2.0, 1.0 - nv) * surface_area_omega(nv - 2) * std::pow(integral, 1.0 - nv);
}

} // namespace cimet
