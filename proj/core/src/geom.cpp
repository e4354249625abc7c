#include <cimet/geom.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cimet {

namespace {

void require_same_dim(const Point& x, const Point& y) {
    if (x.dim() != y.dim())
        throw std::domain_error("points have different dimensions");
    if (x.dim() < 2)
        throw std::domain_error("points must have dimension >= 2");
}

// sh^2(rho/2) = |x-y|^2 / q with q the domain's conformal factor product.
// th(rho/2) = s / sqrt(s^2 + q), 1/ch(rho/2) = sqrt(q / (s^2 + q)), s = |x-y|.
double conformal_q_ball(const Point& x, const Point& y) {
    const double nx2 = x.dot(x);
    const double ny2 = y.dot(y);
    if (!(nx2 < 1.0) || !(ny2 < 1.0))
        throw std::domain_error("point outside the open unit ball");
    return (1.0 - nx2) * (1.0 - ny2);
}

double conformal_q_halfspace(const Point& x, const Point& y) {
    const double xn = x[x.dim() - 1];
    const double yn = y[y.dim() - 1];
    if (!(xn > 0.0) || !(yn > 0.0))
        throw std::domain_error("point outside the open half-space (last coordinate must be positive)");
    return 4.0 * xn * yn;
}

double conformal_q(const DomainSpec& dom, const Point& x, const Point& y) {
    require_same_dim(x, y);
    if (static_cast<int>(x.dim()) != dom.n)
        throw std::domain_error("point dimension does not match the domain");
    return dom.kind == DomainKind::UnitBall ? conformal_q_ball(x, y)
                                            : conformal_q_halfspace(x, y);
}

} // namespace

double Point::norm() const { return std::sqrt(dot(*this)); }

double Point::dot(const Point& other) const {
    double s = 0.0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        s += coords[i] * other.coords[i];
    return s;
}

Point Point::operator+(const Point& other) const {
    Point r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i)
        r.coords[i] += other.coords[i];
    return r;
}

Point Point::operator-(const Point& other) const {
    Point r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i)
        r.coords[i] -= other.coords[i];
    return r;
}

Point Point::operator*(double s) const {
    Point r = *this;
    for (double& c : r.coords)
        c *= s;
    return r;
}

bool DomainSpec::contains(const Point& x) const {
    if (static_cast<int>(x.dim()) != n)
        return false;
    if (kind == DomainKind::UnitBall)
        return x.dot(x) < 1.0;
    return x[x.dim() - 1] > 0.0;
}

double rho_ball(const Point& x, const Point& y) {
    require_same_dim(x, y);
    const double q = conformal_q_ball(x, y);
    const Point diff = x - y;
    const double s = diff.norm();
    return 2.0 * std::asinh(s / std::sqrt(q));
}

double rho_halfspace(const Point& x, const Point& y) {
    require_same_dim(x, y);
    const double q = conformal_q_halfspace(x, y);
    const Point diff = x - y;
    const double s = diff.norm();
    return 2.0 * std::asinh(s / std::sqrt(q));
}

double rho(const DomainSpec& dom, const Point& x, const Point& y) {
    const double q = conformal_q(dom, x, y);
    const double s = (x - y).norm();
    return 2.0 * std::asinh(s / std::sqrt(q));
}

double th_half_rho(const DomainSpec& dom, const Point& x, const Point& y) {
    const double q = conformal_q(dom, x, y);
    const double s = (x - y).norm();
    return s / std::sqrt(s * s + q);
}

double sech_half_rho(const DomainSpec& dom, const Point& x, const Point& y) {
    const double q = conformal_q(dom, x, y);
    const double s = (x - y).norm();
    return std::sqrt(q / (s * s + q));
}

EuclideanBall hyp_ball_to_euclidean(const Point& center, double M) {
    const double nx2 = center.dot(center);
    if (!(nx2 < 1.0))
        throw std::domain_error("hyp_ball_to_euclidean: center outside the open unit ball");
    if (!(M > 0.0))
        throw std::domain_error("hyp_ball_to_euclidean: radius must be positive");
    const double t = std::tanh(M / 2.0);
    const double t2 = t * t;
    const double denom = 1.0 - nx2 * t2;
    EuclideanBall ball;
    ball.center = center * ((1.0 - t2) / denom);
    ball.radius = (1.0 - nx2) * t / denom;
    return ball;
}

RotationParams::RotationParams(double d_, double k_, double nu_) : d(d_), k(k_), nu(nu_) {
    if (!(d > 0.0) || !(d < 1.0))
        throw std::domain_error("RotationParams: need 0 < d < 1, got d = " + std::to_string(d));
    if (!(k > 0.0) || !(k < 1.0))
        throw std::domain_error("RotationParams: need 0 < k < 1, got k = " + std::to_string(k));
    if (!(nu >= 0.0) || !(nu <= std::numbers::pi / 2.0))
        throw std::domain_error("RotationParams: need 0 <= nu <= pi/2, got nu = " + std::to_string(nu));
}

RotationParams rotation_params(const Point& x, const Point& y) {
    require_same_dim(x, y);
    if (x.dim() != 2)
        throw std::domain_error("rotation_params: defined for planar points only");
    if (!(x.dot(x) < 1.0) || !(y.dot(y) < 1.0))
        throw std::domain_error("rotation_params: points must lie in the unit disk");
    const Point chord = x - y;
    const Point ray = x + y;
    const double d = chord.norm() / 2.0;
    const double k = ray.norm() / 2.0;
    if (d == 0.0)
        throw std::domain_error("rotation_params: zero chord (x = y)");
    if (k == 0.0)
        throw std::domain_error("rotation_params: degenerate midpoint (x = -y)");
    // smaller angle between the chord line and the midpoint ray
    const double dotv = std::abs(chord[0] * ray[0] + chord[1] * ray[1]);
    const double crossv = std::abs(chord[0] * ray[1] - chord[1] * ray[0]);
    const double nu = std::atan2(crossv, dotv);
    return RotationParams(d, k, nu);
}

double th_half_rho_rotated(const RotationParams& p) {
    const double c = 1.0 + p.d * p.d - p.k * p.k;
    const double sn = std::sin(p.nu);
    const double kd = 2.0 * p.k * p.d * sn;
    return 2.0 * p.d / std::sqrt(c * c + kd * kd);
}

} // namespace cimet
