#include "oracle.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <mpfr.h>

namespace oracle {

namespace {

constexpr mpfr_prec_t kPrec = 256;

// mu(r) into `out` given r at full precision
void mu_mpfr(mpfr_t out, const mpfr_t r) {
    mpfr_t rc, one, num, den, pi;
    mpfr_inits2(kPrec, rc, one, num, den, pi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(one, 1, MPFR_RNDN);
    mpfr_sqr(rc, r, MPFR_RNDN);
    mpfr_ui_sub(rc, 1, rc, MPFR_RNDN);
    mpfr_sqrt(rc, rc, MPFR_RNDN); // rc = sqrt(1 - r^2)
    mpfr_agm(num, one, rc, MPFR_RNDN);
    mpfr_agm(den, one, r, MPFR_RNDN);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_div(out, num, den, MPFR_RNDN);
    mpfr_mul(out, out, pi, MPFR_RNDN);
    mpfr_div_ui(out, out, 2, MPFR_RNDN);
    mpfr_clears(rc, one, num, den, pi, static_cast<mpfr_ptr>(nullptr));
}

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

double simpson_adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 60);
}

} // namespace

double agm(double a, double b) {
    mpfr_t x, y, out;
    mpfr_inits2(kPrec, x, y, out, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(x, a, MPFR_RNDN);
    mpfr_set_d(y, b, MPFR_RNDN);
    mpfr_agm(out, x, y, MPFR_RNDN);
    const double r = mpfr_get_d(out, MPFR_RNDN);
    mpfr_clears(x, y, out, static_cast<mpfr_ptr>(nullptr));
    return r;
}

double grotzsch_mu(double r) {
    if (!(r > 0.0) || !(r < 1.0))
        throw std::domain_error("oracle::grotzsch_mu: need 0 < r < 1");
    mpfr_t rr, out;
    mpfr_inits2(kPrec, rr, out, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(rr, r, MPFR_RNDN);
    mu_mpfr(out, rr);
    const double v = mpfr_get_d(out, MPFR_RNDN);
    mpfr_clears(rr, out, static_cast<mpfr_ptr>(nullptr));
    return v;
}

double gamma2(double s) {
    if (!(s > 1.0))
        throw std::domain_error("oracle::gamma2: need s > 1");
    mpfr_t rr, mu, pi, out;
    mpfr_inits2(kPrec, rr, mu, pi, out, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(rr, s, MPFR_RNDN);
    mpfr_ui_div(rr, 1, rr, MPFR_RNDN); // r = 1/s at full precision
    mu_mpfr(mu, rr);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul_ui(pi, pi, 2, MPFR_RNDN);
    mpfr_div(out, pi, mu, MPFR_RNDN);
    const double v = mpfr_get_d(out, MPFR_RNDN);
    mpfr_clears(rr, mu, pi, out, static_cast<mpfr_ptr>(nullptr));
    return v;
}

double ellip_k(double r) {
    const double r2 = r * r;
    return simpson_adaptive(
        [r2](double t) {
            const double s = std::sin(t);
            return 1.0 / std::sqrt(1.0 - r2 * s * s);
        },
        0.0, std::numbers::pi / 2.0, 1e-15);
}

double sin_power_integral(int n) {
    if (n < 2)
        throw std::domain_error("oracle::sin_power_integral: need n >= 2");
    if (n == 2)
        return std::numbers::pi / 2.0;
    // substitute t = u^(n-1); the transformed integrand extends continuously
    // to u = 0 with value n-1
    const double m = n - 1;
    const double p = (2.0 - n) / m;
    const auto g = [m, p](double u) {
        if (u == 0.0)
            return m;
        const double t = std::pow(u, m);
        return m * std::pow(std::sin(t) / t, p);
    };
    const double upper = std::pow(std::numbers::pi / 2.0, 1.0 / m);
    return simpson_adaptive(g, 0.0, upper, 1e-15);
}

double constant_cn(int n) {
    if (n < 2)
        throw std::domain_error("oracle::constant_cn: need n >= 2");
    if (n == 2)
        return 2.0 / std::numbers::pi;
    const double m = n - 1; // omega_{n-2} = 2 pi^{(n-1)/2} / Gamma((n-1)/2)
    const double omega = 2.0 * std::pow(std::numbers::pi, m / 2.0) / std::tgamma(m / 2.0);
    const double in = sin_power_integral(n);
    return std::pow(2.0, 1.0 - n) * omega * std::pow(in, 1.0 - n);
}

} // namespace oracle
