#include <cimet/bounds.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cimet {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLog4 = 2.0 * std::numbers::ln2;

double require_nonneg_rho(double rho) {
    if (!(rho >= 0.0))
        throw std::domain_error("rho must be nonnegative, got " + std::to_string(rho));
    return rho;
}

// 2^{n-1} c_n, the scale shared by the capacity and modulus brackets
double bracket_scale(Dimension n) {
    return std::pow(2.0, n.value - 1) * constant_cn(n);
}
} // namespace

BoundPair::BoundPair(double lower_, std::optional<double> upper_, BoundSource source_)
    : lower(lower_), upper(upper_), source(source_) {
    if (upper && !(lower <= *upper))
        throw std::invalid_argument("BoundPair: lower exceeds upper");
}

BoundPair gamma_n_bounds(Dimension n, CapacityArg s) {
    const double scale = bracket_scale(n);
    const double L = std::log((s.value + 1.0) / (s.value - 1.0));
    return BoundPair(scale * L, scale * (L + kLog4), BoundSource::CapacityLogBracket);
}

double gamma_n_bounds_middle(Dimension n, CapacityArg s) {
    const double r = (s.value - 1.0) / (s.value + 1.0);
    return bracket_scale(n) * grotzsch_mu(UnitInterval(r));
}

BoundPair mu_bounds_nd(Dimension n, double rho) {
    require_nonneg_rho(rho);
    const double scale = bracket_scale(n);
    return BoundPair(scale * rho, scale * (rho + kLog4), BoundSource::ModulusLinearBracket);
}

double mu_bounds_middle(Dimension n, double rho) {
    require_nonneg_rho(rho);
    if (rho == 0.0)
        return 0.0; // mu(e^0) = mu(1^-) = 0 in the limit
    const double scale = bracket_scale(n);
    const double r = std::exp(-rho);
    if (r == 0.0)
        return scale * (rho + kLog4); // asymptotic branch of mu after underflow
    return scale * grotzsch_mu(UnitInterval(r));
}

double mu_lower_quartic(double rho) {
    require_nonneg_rho(rho);
    return 8.0 / (kPi * std::pow(2.0, 0.25)) * std::pow(rho, 0.25);
}

double best_mu_lower(double rho) {
    require_nonneg_rho(rho);
    return std::max(mu_lower_quartic(rho), 4.0 / kPi * rho);
}

BoundPair lambda_bounds(Dimension n, double rho) {
    if (!(rho > 0.0))
        throw std::domain_error("lambda_bounds: need rho > 0 (t diverges at rho = 0)");
    const double cn = constant_cn(n);
    // log t with t = (e^{rho/2}+1)/(e^{rho/2}-1): equals 2 arth(e^{-rho/2})
    const double logt = 2.0 * std::atanh(std::exp(-rho / 2.0));
    return BoundPair(cn * logt, cn * (std::numbers::ln2 + logt), BoundSource::FerrandLogBracket);
}

double lambda_bounds_middle(Dimension n, double rho) {
    if (!(rho > 0.0))
        throw std::domain_error("lambda_bounds_middle: need rho > 0");
    const double cn = constant_cn(n);
    const double th = std::tanh(rho / 4.0);
    const double r = th * th; // t^{-2}
    if (r < 1.0)
        return 0.5 * cn * grotzsch_mu(UnitInterval(r));
    // th rounded to 1: go through the complement identity mu(r) mu(r') = pi^2/4
    const double rc = std::sqrt(2.0) / std::cosh(rho / 4.0); // sqrt(1 - r^2) here
    if (rc == 0.0)
        return 0.0; // rho astronomically large; the lower bound is 0 too
    return 0.5 * cn * kPi * kPi / (4.0 * grotzsch_mu(UnitInterval(rc)));
}

BoundPair rho_bounds_midpoint(const Point& x, const Point& y) {
    // validates membership, x != y, x != -y
    (void)rotation_params(x, y);
    const double s = (x - y).norm();
    const double dot = x.dot(y);
    const double n2sum = x.dot(x) + y.dot(y);
    const double lower = 2.0 * s / std::sqrt(4.0 - 8.0 * dot + n2sum * n2sum);
    const double sum = (x + y).norm() + s;
    std::optional<double> upper;
    if (sum < 2.0) {
        const double u = s / (1.0 - dot);
        if (u < 1.0) // defensive: the two proviso forms agree analytically
            upper = u;
    }
    return BoundPair(lower, upper, BoundSource::MidpointRotation);
}

BoundPair rho_bounds_classic(const Point& x, const Point& y) {
    const double nx = x.norm();
    const double ny = y.norm();
    if (!(nx < 1.0) || !(ny < 1.0))
        throw std::domain_error("rho_bounds_classic: points must lie in the unit disk");
    const double s = (x - y).norm();
    const double lo_den =
        std::min(s + std::sqrt((1.0 - nx) * (1.0 + nx)) * std::sqrt((1.0 - ny) * (1.0 + ny)),
                 1.0 + nx * ny);
    const double hi_den = std::max(s + (1.0 - nx) * (1.0 - ny), 1.0 - nx * ny);
    return BoundPair(s / lo_den, s / hi_den, BoundSource::ProductForm);
}

BoundPair mu_bounds_midpoint(const Point& x, const Point& y) {
    const BoundPair th = rho_bounds_midpoint(x, y);
    const double lower = gamma2(CapacityArg(1.0 / th.lower));
    std::optional<double> upper;
    if (th.upper)
        upper = gamma2(CapacityArg(1.0 / *th.upper));
    return BoundPair(lower, upper, BoundSource::MidpointRotationCapacity);
}

double arth_th_power(double t, double p) {
    if (!(t > 0.0))
        throw std::domain_error("arth_th_power: need t > 0, got " + std::to_string(t));
    if (!(p > 0.0))
        throw std::domain_error("arth_th_power: need p > 0, got " + std::to_string(p));
    if (p == 1.0)
        return t;
    // v = th(t)^{1/p} written as 1 + e with e = expm1(log(th t)/p), so that
    // arth(v) = (log(2+e) - log(-e)) / 2 stays accurate for v near 1
    const double L = std::log(std::tanh(t));
    const double e = std::expm1(L / p);
    const double arth = 0.5 * (std::log(2.0 + e) - std::log(-e));
    return std::pow(arth, p);
}

} // namespace cimet
