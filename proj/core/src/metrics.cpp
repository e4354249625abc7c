#include <cimet/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cimet {

namespace {
constexpr double kPi = std::numbers::pi;

void require_planar(const DomainSpec& dom) {
    if (dom.n != 2)
        throw std::domain_error("unsupported dimension: closed form exists only for n = 2 "
                                "(use the bracket functions for n > 2)");
}

void require_members(const DomainSpec& dom, const Point& x, const Point& y) {
    if (!dom.contains(x) || !dom.contains(y))
        throw std::domain_error("point outside the domain");
}

bool same_point(const Point& x, const Point& y) {
    if (x.dim() != y.dim())
        return false;
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (x[i] != y[i])
            return false;
    return true;
}
} // namespace

double mu_metric(const DomainSpec& dom, const Point& x, const Point& y) {
    require_planar(dom);
    require_members(dom, x, y);
    if (same_point(x, y))
        return 0.0;
    const double th = th_half_rho(dom, x, y);
    return 2.0 * kPi / grotzsch_mu(UnitInterval(th));
}

double lambda_metric(const DomainSpec& dom, const Point& x, const Point& y) {
    require_planar(dom);
    require_members(dom, x, y);
    if (same_point(x, y))
        throw std::domain_error("lambda_metric: x = y (the metric diverges)");
    // 1/ch(rho/2) is the complement of th(rho/2), so gamma_2(ch) reuses the
    // sech closed form directly
    const double sech = sech_half_rho(dom, x, y);
    return kPi / (2.0 * grotzsch_mu(UnitInterval(sech)));
}

RingCondenser::RingCondenser(double a_, double b_, Dimension n_) : a(a_), b(b_), n(n_) {
    if (!(a > 0.0) || !(a < b))
        throw std::domain_error("RingCondenser: need 0 < a < b");
}

double ring_modulus(const RingCondenser& ring) {
    const int n = ring.n.value;
    return surface_area_omega(n - 1) * std::pow(std::log(ring.b / ring.a), 1.0 - n);
}

double capacity_ring(const RingCondenser& ring) { return ring_modulus(ring); }

StretchParam::StretchParam(double a) : alpha(a) {
    if (!(a > 0.0) || !(a <= 1.0))
        throw std::domain_error("StretchParam: need 0 < alpha <= 1, got " + std::to_string(a));
}

double StretchParam::maximal_dilatation() const { return 1.0 / alpha; }

Point radial_stretch(const Point& x, const StretchParam& p) {
    const double r = x.norm();
    if (!(r < 1.0))
        throw std::domain_error("radial_stretch: point outside the open unit ball");
    if (r == 0.0)
        return x;
    return x * std::pow(r, p.alpha - 1.0);
}

DistortionReport qc_mu_distortion(const StretchParam& p,
                                  const std::vector<std::pair<Point, Point>>& pairs) {
    if (pairs.empty())
        throw std::invalid_argument("qc_mu_distortion: empty pair list");
    const DomainSpec disk = DomainSpec::unit_ball(2);
    const double K = p.maximal_dilatation();
    DistortionReport rep;
    rep.min_ratio = std::numeric_limits<double>::infinity();
    rep.max_ratio = 0.0;
    rep.violations = 0;
    for (const auto& [x, y] : pairs) {
        const double base = mu_metric(disk, x, y);
        const double mapped = mu_metric(disk, radial_stretch(x, p), radial_stretch(y, p));
        const double ratio = mapped / base;
        rep.min_ratio = std::min(rep.min_ratio, ratio);
        rep.max_ratio = std::max(rep.max_ratio, ratio);
        if (!(ratio >= 1.0 / K && ratio <= K))
            ++rep.violations;
    }
    rep.pass = rep.violations == 0;
    return rep;
}

} // namespace cimet
