#include <cimet/harness.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include <cimet/quadrature.hpp>
#include <cimet/specfun.hpp>

namespace cimet::harness {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;
const DomainSpec kDisk = DomainSpec::unit_ball(2);

double mu_disk(const Point& x, const Point& y) { return mu_metric(kDisk, x, y); }

std::string fmt_point(const Point& p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g%+gi", p[0], p[1]);
    return buf;
}

} // namespace

void RunConfig::validate() const {
    if (samples < 1)
        throw std::invalid_argument("samples must be >= 1");
    if (grid < 2)
        throw std::invalid_argument("grid must be >= 2");
    if (!(tolerance > 0.0))
        throw std::invalid_argument("tolerance must be positive");
}

// ---- formatting ------------------------------------------------------------

std::string format_sig17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double round_half_away_6(double v) { return std::llround(v * 1e6) / 1e6; }

std::string format_fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", round_half_away_6(v));
    return buf;
}

// ---- sampling --------------------------------------------------------------

Point sample_disk(SplitMix64& rng, double radius) {
    for (;;) {
        const double a = radius * (2.0 * rng.uniform01() - 1.0);
        const double b = radius * (2.0 * rng.uniform01() - 1.0);
        if (a * a + b * b < radius * radius)
            return Point::xy(a, b);
    }
}

std::pair<Point, Point> sample_pair(SplitMix64& rng) {
    for (;;) {
        Point x = sample_disk(rng);
        Point y = sample_disk(rng);
        if ((x - y).norm() >= 1e-6 && (x + y).norm() >= 1e-6)
            return {std::move(x), std::move(y)};
    }
}

// ---- comparison table ------------------------------------------------------

std::array<TableRow, 2> comparison_table() {
    const std::array<std::pair<Point, Point>, 2> pairs = {
        std::make_pair(Point::xy(0.6, 0.3), Point::xy(0.1, 0.1)),
        std::make_pair(Point::xy(-0.7, 0.7), Point::xy(0.65, -0.6)),
    };
    std::array<TableRow, 2> rows;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [x, y] = pairs[i];
        const BoundPair mid = rho_bounds_midpoint(x, y);
        const BoundPair cls = rho_bounds_classic(x, y);
        TableRow& row = rows[i];
        row.x = x;
        row.y = y;
        row.exact_th = th_half_rho(kDisk, x, y);
        row.lower_rotation = mid.lower;
        row.lower_classic = cls.lower;
        if (!mid.upper)
            throw std::logic_error("table pair unexpectedly fails the rotation proviso");
        row.upper_rotation = *mid.upper;
        row.upper_classic = *cls.upper;
        row.tighter_lower = row.lower_rotation >= row.lower_classic ? "rotation" : "classic";
        row.tighter_upper = row.upper_rotation <= row.upper_classic ? "rotation" : "classic";
    }
    return rows;
}

std::string table_csv() {
    const auto rows = comparison_table();
    std::string out = "row,x,y,lower_rotation,lower_classic,upper_rotation,upper_classic,"
                      "exact_th,tighter_lower,tighter_upper\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const TableRow& r = rows[i];
        out += std::to_string(i + 1) + ',' + fmt_point(r.x) + ',' + fmt_point(r.y) + ',';
        out += format_fixed6(r.lower_rotation) + ',' + format_fixed6(r.lower_classic) + ',';
        out += format_fixed6(r.upper_rotation) + ',' + format_fixed6(r.upper_classic) + ',';
        out += format_sig17(r.exact_th) + ',' + r.tighter_lower + ',' + r.tighter_upper + '\n';
    }
    return out;
}

std::string table_json() {
    const auto rows = comparison_table();
    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const TableRow& r = rows[i];
        ordered_json jr;
        jr["row"] = i + 1;
        jr["x"] = fmt_point(r.x);
        jr["y"] = fmt_point(r.y);
        jr["lower_rotation"] = round_half_away_6(r.lower_rotation);
        jr["lower_classic"] = round_half_away_6(r.lower_classic);
        jr["upper_rotation"] = round_half_away_6(r.upper_rotation);
        jr["upper_classic"] = round_half_away_6(r.upper_classic);
        jr["exact_th"] = r.exact_th;
        jr["tighter_lower"] = r.tighter_lower;
        jr["tighter_upper"] = r.tighter_upper;
        doc["rows"].push_back(std::move(jr));
    }
    return doc.dump(2) + "\n";
}

// ---- figure scan -----------------------------------------------------------

namespace {
double lower_linear_of(double rho) { return 4.0 / kPi * rho; }

double bound_gap_at(double x) {
    const double rho = 2.0 * std::atanh(x);
    return mu_lower_quartic(rho) - lower_linear_of(rho);
}
} // namespace

FigureScan figure_scan(const RunConfig& cfg) {
    cfg.validate();
    FigureScan scan;
    const int g = cfg.grid;
    const Point origin = Point::xy(0.0, 0.0);
    scan.rows.reserve(g);
    for (int i = 0; i < g; ++i) {
        FigureRow row;
        row.x = 0.01 + (0.99 - 0.01) * i / (g - 1);
        row.rho = 2.0 * std::atanh(row.x);
        row.mu = mu_disk(Point::xy(row.x, 0.0), origin);
        row.lower_quartic = mu_lower_quartic(row.rho);
        row.lower_linear = lower_linear_of(row.rho);
        scan.rows.push_back(row);
    }
    int crossings = 0;
    double a = 0.0, b = 0.0;
    for (int i = 0; i + 1 < g; ++i) {
        const double d0 = scan.rows[i].lower_quartic - scan.rows[i].lower_linear;
        const double d1 = scan.rows[i + 1].lower_quartic - scan.rows[i + 1].lower_linear;
        if ((d0 > 0.0) != (d1 > 0.0)) {
            ++crossings;
            a = scan.rows[i].x;
            b = scan.rows[i + 1].x;
        }
    }
    scan.unique_switch = crossings == 1;
    if (crossings >= 1) {
        // bisect to machine precision; the gap is positive on the left of the root
        double fa = bound_gap_at(a);
        for (int iter = 0; iter < 200 && a < b; ++iter) {
            const double m = 0.5 * (a + b);
            if (m <= a || m >= b)
                break;
            const double fm = bound_gap_at(m);
            if ((fm > 0.0) == (fa > 0.0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        scan.switch_x = 0.5 * (a + b);
        scan.switch_rho = 2.0 * std::atanh(scan.switch_x);
    } else {
        scan.switch_x = std::numeric_limits<double>::quiet_NaN();
        scan.switch_rho = std::numeric_limits<double>::quiet_NaN();
    }
    return scan;
}

std::string figure_csv(const FigureScan& scan) {
    std::string out = "x,rho,mu,lower_quartic,lower_linear\n";
    for (const FigureRow& r : scan.rows) {
        out += format_sig17(r.x) + ',' + format_sig17(r.rho) + ',' + format_sig17(r.mu) + ',';
        out += format_sig17(r.lower_quartic) + ',' + format_sig17(r.lower_linear) + '\n';
    }
    return out;
}

std::string figure_json(const FigureScan& scan) {
    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (const FigureRow& r : scan.rows) {
        ordered_json jr;
        jr["x"] = r.x;
        jr["rho"] = r.rho;
        jr["mu"] = r.mu;
        jr["lower_quartic"] = r.lower_quartic;
        jr["lower_linear"] = r.lower_linear;
        doc["rows"].push_back(std::move(jr));
    }
    doc["switch_x"] = scan.switch_x;
    doc["switch_rho"] = scan.switch_rho;
    doc["unique_switch"] = scan.unique_switch;
    doc["switch_x_closed_form"] = "tanh(1)";
    doc["switch_x_rounded_convention"] = 0.75;
    return doc.dump(2) + "\n";
}

// ---- Holder-divergence probe -------------------------------------------------

double grotzsch_mu_log_upper(double r) {
    if (!(r > 0.0) || !(r < 1.0))
        throw std::domain_error("grotzsch_mu_log_upper: need 0 < r < 1");
    return std::log(2.0 * (1.0 + std::sqrt((1.0 - r) * (1.0 + r))) / r);
}

HolderScan holder_probe(double w, ProbeMetric metric, const RunConfig& cfg) {
    if (!(w > 0.0))
        throw std::invalid_argument("holder probe: need w > 0");
    cfg.validate();
    HolderScan scan;
    scan.w = w;
    scan.metric = metric;
    const Point origin = Point::xy(0.0, 0.0);
    for (int k = 1; k <= 12; ++k) {
        const double x = std::pow(10.0, -k);
        HolderRow row;
        row.k = k;
        row.rec.abscissa = x;
        row.rec.exact = mu_disk(Point::xy(x, 0.0), origin);
        const double base = metric == ProbeMetric::Euclidean ? x : 2.0 * std::atanh(x);
        row.denominator = std::pow(base, w);
        row.rec.quotient = row.rec.exact / row.denominator;
        row.rec.bound_low = 2.0 * kPi / grotzsch_mu_log_upper(x);
        row.rec.bound_high = std::nullopt;
        row.minorant = row.rec.bound_low / row.denominator;
        scan.rows.push_back(std::move(row));
    }
    scan.quotient_monotone_from_k3 = true;
    scan.first_violation_k = 0;
    for (int k = 4; k <= 12; ++k) {
        if (!(*scan.rows[k - 1].rec.quotient > *scan.rows[k - 2].rec.quotient)) {
            scan.quotient_monotone_from_k3 = false;
            scan.first_violation_k = k;
            break;
        }
    }
    return scan;
}

std::string holder_csv(const HolderScan& scan) {
    std::string out = "k,x,mu,denominator,quotient,minorant\n";
    for (const HolderRow& r : scan.rows) {
        out += std::to_string(r.k) + ',' + format_sig17(r.rec.abscissa) + ',';
        out += format_sig17(r.rec.exact) + ',' + format_sig17(r.denominator) + ',';
        out += format_sig17(*r.rec.quotient) + ',' + format_sig17(r.minorant) + '\n';
    }
    return out;
}

std::string holder_json(const HolderScan& scan) {
    ordered_json doc;
    doc["w"] = scan.w;
    doc["metric"] = scan.metric == ProbeMetric::Euclidean ? "euclidean" : "hyperbolic";
    doc["rows"] = ordered_json::array();
    for (const HolderRow& r : scan.rows) {
        ordered_json jr;
        jr["k"] = r.k;
        jr["x"] = r.rec.abscissa;
        jr["mu"] = r.rec.exact;
        jr["denominator"] = r.denominator;
        jr["quotient"] = *r.rec.quotient;
        jr["minorant"] = r.minorant;
        doc["rows"].push_back(std::move(jr));
    }
    doc["quotient_monotone_from_k3"] = scan.quotient_monotone_from_k3;
    doc["first_violation_k"] = scan.first_violation_k;
    return doc.dump(2) + "\n";
}

// ---- rotation scan -----------------------------------------------------------

RotationScan rotation_scan(const Point& x, const Point& y, const RunConfig& cfg) {
    cfg.validate();
    RotationParams native = [&] {
        try {
            return rotation_params(x, y);
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(e.what());
        }
    }();
    const double sum = (x + y).norm() + (x - y).norm();
    if (!(sum < 2.0))
        throw std::invalid_argument(
            "rotation scan requires |x+y| + |x-y| < 2 (the nu = 0 rotation would leave "
            "the unit disk); got " +
            format_sig17(sum));
    RotationScan scan;
    scan.d = native.d;
    scan.k = native.k;
    scan.native_nu = native.nu;
    const int g = cfg.grid;
    scan.rows.reserve(g);
    for (int i = 0; i < g; ++i) {
        const double nu = i == g - 1 ? kPi / 2.0 : kPi / 2.0 * i / (g - 1);
        RotationRow row;
        row.nu = nu;
        row.th = th_half_rho_rotated(RotationParams(native.d, native.k, nu));
        row.rho = 2.0 * std::atanh(row.th);
        row.mu = 2.0 * kPi / grotzsch_mu(UnitInterval(row.th));
        scan.rows.push_back(row);
    }
    scan.monotone = true;
    for (int i = 0; i + 1 < g; ++i) {
        const RotationRow& p = scan.rows[i];
        const RotationRow& q = scan.rows[i + 1];
        if (!(q.th <= p.th && q.rho <= p.rho && q.mu <= p.mu)) {
            scan.monotone = false;
            break;
        }
    }
    const BoundPair bracket = rho_bounds_midpoint(x, y);
    scan.endpoints_match = bracket.upper.has_value() &&
                           std::abs(scan.rows.front().th - *bracket.upper) <= 1e-12 &&
                           std::abs(scan.rows.back().th - bracket.lower) <= 1e-12;
    return scan;
}

std::string rotation_csv(const RotationScan& scan) {
    std::string out = "nu,th,rho,mu\n";
    for (const RotationRow& r : scan.rows) {
        out += format_sig17(r.nu) + ',' + format_sig17(r.th) + ',';
        out += format_sig17(r.rho) + ',' + format_sig17(r.mu) + '\n';
    }
    return out;
}

std::string rotation_json(const RotationScan& scan) {
    ordered_json doc;
    doc["d"] = scan.d;
    doc["k"] = scan.k;
    doc["native_nu"] = scan.native_nu;
    doc["rows"] = ordered_json::array();
    for (const RotationRow& r : scan.rows) {
        ordered_json jr;
        jr["nu"] = r.nu;
        jr["th"] = r.th;
        jr["rho"] = r.rho;
        jr["mu"] = r.mu;
        doc["rows"].push_back(std::move(jr));
    }
    doc["monotone"] = scan.monotone;
    doc["endpoints_match"] = scan.endpoints_match;
    return doc.dump(2) + "\n";
}

// ---- property-suite runner ---------------------------------------------------

namespace {

// accumulates checks/failures and the extremal value of a per-check measure
class Suite {
  public:
    Suite(std::string name, std::string worst_kind, bool worst_is_min) : worst_is_min_(worst_is_min) {
        res_.name = std::move(name);
        res_.worst_kind = std::move(worst_kind);
        res_.checks = 0;
        res_.failures = 0;
        res_.worst = worst_is_min ? std::numeric_limits<double>::infinity()
                                  : -std::numeric_limits<double>::infinity();
    }

    template <class MakeCounterexample>
    void record(bool ok, double measure, MakeCounterexample&& cex) {
        ++res_.checks;
        res_.worst = worst_is_min_ ? std::min(res_.worst, measure) : std::max(res_.worst, measure);
        if (!ok) {
            if (res_.failures == 0)
                res_.counterexample = cex();
            ++res_.failures;
        }
    }

    SuiteResult finish() {
        res_.pass = res_.failures == 0;
        if (res_.checks == 0)
            res_.worst = 0.0;
        return res_;
    }

  private:
    SuiteResult res_;
    bool worst_is_min_;
};

constexpr double kSlack = 1e-12; // bracket slack used by every sandwich suite

double uniform_pos(SplitMix64& rng) {
    for (;;) {
        const double u = rng.uniform01();
        if (u > 0.0)
            return u;
    }
}

// --- specfun suites ---

SuiteResult suite_mu_functional_identity(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("mu_functional_identity", "max_relative_error", false);
    const double target = kPi * kPi / 2.0;
    for (int i = 0; i < cfg.samples; ++i) {
        const double s = 1.0 + 999.0 * uniform_pos(rng);
        const double prod = grotzsch_mu(UnitInterval(1.0 / s)) *
                            grotzsch_mu(UnitInterval((s - 1.0) / (s + 1.0)));
        const double rel = std::abs(prod - target) / target;
        suite.record(rel < 1e-9, rel, [&] {
            return "s=" + format_sig17(s) + " product=" + format_sig17(prod);
        });
    }
    return suite.finish();
}

SuiteResult suite_mu_fixed_point(SplitMix64, const RunConfig&) {
    Suite suite("mu_fixed_point", "max_absolute_error", false);
    const double v = grotzsch_mu(UnitInterval(std::sqrt(2.0) - 1.0));
    const double err = std::abs(v - kPi / std::sqrt(2.0));
    suite.record(err <= 1e-10, err, [&] { return "mu(sqrt(2)-1)=" + format_sig17(v); });
    return suite.finish();
}

SuiteResult suite_gamma2_mu_identity(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("gamma2_mu_identity", "max_relative_error", false);
    for (int i = 0; i < cfg.samples; ++i) {
        const double s = 1.0 + 999.0 * uniform_pos(rng);
        const double lhs = gamma2(CapacityArg(s));
        const double rhs = 4.0 / kPi * grotzsch_mu(UnitInterval((s - 1.0) / (s + 1.0)));
        const double rel = std::abs(lhs - rhs) / lhs;
        suite.record(rel < 1e-10, rel, [&] {
            return "s=" + format_sig17(s) + " gamma2=" + format_sig17(lhs) +
                   " middle=" + format_sig17(rhs);
        });
    }
    return suite.finish();
}

SuiteResult suite_eq4_bracket(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("arth_quartic_bracket", "min_margin", true);
    for (int i = 0; i < cfg.samples; ++i) {
        const double r = uniform_pos(rng);
        const double mu = grotzsch_mu(UnitInterval(r));
        // arth evaluated via expm1/log1p: pow() alone loses the 1 - t
        // separation near t = 1 faster than the bracket margin closes
        const double u = std::expm1(std::log1p(-r * r) * 0.125); // (1-r^2)^{1/8} - 1
        const double lo = 0.5 * (std::log(2.0 + u) - std::log(-u));
        const double v = std::expm1(std::log1p(r - 1.0) * 0.25); // r^{1/4} - 1
        const double hi = kPi * kPi / (2.0 * (std::log(2.0 + v) - std::log(-v)));
        const double margin = std::min(mu - lo, hi - mu);
        suite.record(lo <= mu + kSlack && mu <= hi + kSlack, margin, [&] {
            return "r=" + format_sig17(r) + " lower=" + format_sig17(lo) +
                   " mu=" + format_sig17(mu) + " upper=" + format_sig17(hi);
        });
    }
    return suite.finish();
}

SuiteResult suite_mu_monotone(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("mu_monotone", "min_decrease", true);
    for (int i = 0; i < cfg.samples; ++i) {
        double r1 = uniform_pos(rng);
        double r2 = uniform_pos(rng);
        if (r1 == r2)
            continue;
        if (r1 > r2)
            std::swap(r1, r2);
        const double diff = grotzsch_mu(UnitInterval(r1)) - grotzsch_mu(UnitInterval(r2));
        suite.record(diff > 0.0, diff, [&] {
            return "r1=" + format_sig17(r1) + " r2=" + format_sig17(r2);
        });
    }
    return suite.finish();
}

SuiteResult suite_gamma2_monotone(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("gamma2_monotone", "min_decrease", true);
    for (int i = 0; i < cfg.samples; ++i) {
        double s1 = 1.0 + 999.0 * uniform_pos(rng);
        double s2 = 1.0 + 999.0 * uniform_pos(rng);
        if (s1 == s2)
            continue;
        if (s1 > s2)
            std::swap(s1, s2);
        const double diff = gamma2(CapacityArg(s1)) - gamma2(CapacityArg(s2));
        suite.record(diff > 0.0, diff, [&] {
            return "s1=" + format_sig17(s1) + " s2=" + format_sig17(s2);
        });
    }
    return suite.finish();
}

SuiteResult suite_ellip_k_quadrature(SplitMix64, const RunConfig&) {
    Suite suite("ellip_k_agm_vs_quadrature", "max_relative_error", false);
    for (int i = 1; i <= 9; ++i) {
        const double r = i / 10.0;
        const double agm_value = ellip_k(r);
        // theta form of the defining integral: smooth on [0, pi/2], so the
        // quadrature reaches full precision (the algebraic form is singular
        // at x = 1 and floors near 1e-8, see quadrature.hpp)
        const double quad_value = integrate_open(
            [r](double t) {
                const double s = std::sin(t);
                return 1.0 / std::sqrt(1.0 - r * r * s * s);
            },
            0.0, kPi / 2.0, 1e-12);
        const double rel = std::abs(agm_value - quad_value) / agm_value;
        suite.record(rel < 1e-10, rel, [&] {
            return "r=" + format_sig17(r) + " agm=" + format_sig17(agm_value) +
                   " quadrature=" + format_sig17(quad_value);
        });
    }
    return suite.finish();
}

SuiteResult suite_tau2_roundtrip(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("tau2_gamma2_roundtrip", "max_relative_error", false);
    for (int i = 0; i < cfg.samples; ++i) {
        const double s = 1.001 + 998.999 * uniform_pos(rng);
        const double lhs = 2.0 * tau2(s * s - 1.0);
        const double rhs = gamma2(CapacityArg(s));
        const double rel = std::abs(lhs - rhs) / rhs;
        suite.record(rel < 1e-9, rel, [&] {
            return "s=" + format_sig17(s) + " 2*tau2=" + format_sig17(lhs) +
                   " gamma2=" + format_sig17(rhs);
        });
    }
    return suite.finish();
}

SuiteResult suite_gamma2_mu_roundtrip(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("gamma2_mu_roundtrip", "max_relative_error", false);
    for (int i = 0; i < cfg.samples; ++i) {
        const double r = uniform_pos(rng);
        const double prod = gamma2(CapacityArg(1.0 / r)) * grotzsch_mu(UnitInterval(r));
        const double rel = std::abs(prod - 2.0 * kPi) / (2.0 * kPi);
        suite.record(rel < 1e-12, rel,
                     [&] { return "r=" + format_sig17(r) + " product=" + format_sig17(prod); });
    }
    return suite.finish();
}

// --- geom suites ---

SuiteResult suite_rotation_monotone_nu(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("rotation_monotone_nu", "min_decrease", true);
    for (int i = 0; i < cfg.samples; ++i) {
        double d, k;
        do {
            d = rng.uniform01();
            k = rng.uniform01();
        } while (d <= 0.0 || k <= 0.0 || d + k >= 1.0);
        double nu1 = kPi / 2.0 * rng.uniform01();
        double nu2 = kPi / 2.0 * rng.uniform01();
        if (nu1 == nu2)
            continue;
        if (nu1 > nu2)
            std::swap(nu1, nu2);
        const double v1 = th_half_rho_rotated(RotationParams(d, k, nu1));
        const double v2 = th_half_rho_rotated(RotationParams(d, k, nu2));
        suite.record(v1 > v2, v1 - v2, [&] {
            return "d=" + format_sig17(d) + " k=" + format_sig17(k) + " nu1=" + format_sig17(nu1) +
                   " nu2=" + format_sig17(nu2);
        });
    }
    return suite.finish();
}

SuiteResult suite_rotation_endpoint_forms(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("rotation_endpoint_forms", "max_absolute_error", false);
    for (int i = 0; i < cfg.samples; ++i) {
        const auto [x, y] = sample_pair(rng);
        const RotationParams p = rotation_params(x, y);
        const double s = (x - y).norm();
        const double dot = x.dot(y);
        const double n2sum = x.dot(x) + y.dot(y);
        const double v0 = th_half_rho_rotated(RotationParams(p.d, p.k, 0.0));
        const double vh = th_half_rho_rotated(RotationParams(p.d, p.k, kPi / 2.0));
        const double form0 = s / (1.0 - dot);
        const double formh = 2.0 * s / std::sqrt(4.0 - 8.0 * dot + n2sum * n2sum);
        const double err = std::max(std::abs(v0 - form0), std::abs(vh - formh));
        suite.record(err <= 1e-12, err, [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y);
        });
    }
    return suite.finish();
}

SuiteResult suite_rho_triangle(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("rho_ball_triangle", "min_slack", true);
    for (int i = 0; i < cfg.samples; ++i) {
        const Point x = sample_disk(rng);
        const Point y = sample_disk(rng);
        const Point z = sample_disk(rng);
        const double xy = rho_ball(x, y);
        const double yz = rho_ball(y, z);
        const double xz = rho_ball(x, z);
        const bool sym = rho_ball(y, x) == xy;
        const double slack = xy + yz - xz;
        suite.record(sym && xz <= xy + yz + kSlack, slack, [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y) + " z=" + fmt_point(z);
        });
    }
    return suite.finish();
}

SuiteResult suite_rho_radial(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("rho_ball_radial", "max_absolute_error", false);
    const Point origin = Point::xy(0.0, 0.0);
    for (int i = 0; i < cfg.samples; ++i) {
        const double t = 0.999 * uniform_pos(rng);
        const double err = std::abs(rho_ball(origin, Point::xy(t, 0.0)) - 2.0 * std::atanh(t));
        suite.record(err <= kSlack, err, [&] { return "t=" + format_sig17(t); });
    }
    return suite.finish();
}

SuiteResult suite_hyp_ball_roundtrip(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("hyp_ball_roundtrip", "max_absolute_error", false);
    for (int i = 0; i < cfg.samples; ++i) {
        const Point c = sample_disk(rng, 0.9);
        const double M = 2.0 * uniform_pos(rng);
        const EuclideanBall ball = hyp_ball_to_euclidean(c, M);
        const double nc = c.norm();
        const Point dir = nc > 0.0 ? c * (1.0 / nc) : Point::xy(1.0, 0.0);
        const Point zp = ball.center + dir * ball.radius;
        const Point zm = ball.center - dir * ball.radius;
        const double err =
            std::max(std::abs(rho_ball(c, zp) - M), std::abs(rho_ball(c, zm) - M));
        suite.record(err <= 1e-10, err, [&] {
            return "center=" + fmt_point(c) + " M=" + format_sig17(M);
        });
    }
    return suite.finish();
}

// --- metrics suites ---

SuiteResult suite_mu_sandwich_linear(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("mu_sandwich_linear", "min_margin", true);
    const Dimension two(2);
    for (int i = 0; i < cfg.samples; ++i) {
        const auto [x, y] = sample_pair(rng);
        const double r = rho_ball(x, y);
        const double m = mu_disk(x, y);
        const BoundPair bp = mu_bounds_nd(two, r);
        const double margin = std::min(m - bp.lower, *bp.upper - m);
        suite.record(bp.lower <= m + kSlack && m <= *bp.upper + kSlack, margin, [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y) + " mu=" + format_sig17(m);
        });
    }
    return suite.finish();
}

SuiteResult suite_lambda_sandwich(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("lambda_sandwich", "min_margin", true);
    const Dimension two(2);
    for (int i = 0; i < cfg.samples; ++i) {
        const auto [x, y] = sample_pair(rng);
        const double r = rho_ball(x, y);
        const double lam = lambda_metric(kDisk, x, y);
        const BoundPair bp = lambda_bounds(two, r);
        const double middle = lambda_bounds_middle(two, r);
        const double rel_mid = std::abs(lam - middle) / lam;
        const bool ok = bp.lower <= lam + kSlack && lam <= *bp.upper + kSlack &&
                        middle <= *bp.upper + kSlack && rel_mid < 1e-9;
        const double margin = std::min(lam - bp.lower, *bp.upper - lam);
        suite.record(ok, margin, [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y) + " lambda=" + format_sig17(lam) +
                   " middle=" + format_sig17(middle);
        });
    }
    return suite.finish();
}

SuiteResult suite_mu_lambda_product(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("mu_lambda_product", "max_relative_error", false);
    for (int i = 0; i < cfg.samples; ++i) {
        const auto [x, y] = sample_pair(rng);
        const double prod = mu_disk(x, y) * lambda_metric(kDisk, x, y);
        const double rel = std::abs(prod - 4.0) / 4.0;
        suite.record(rel < 1e-9, rel, [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y) + " product=" + format_sig17(prod);
        });
    }
    return suite.finish();
}

SuiteResult suite_mu_triangle(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("mu_triangle", "min_slack", true);
    for (int i = 0; i < cfg.samples; ++i) {
        const Point x = sample_disk(rng);
        const Point y = sample_disk(rng);
        const Point z = sample_disk(rng);
        const double xy = mu_disk(x, y);
        const double yz = mu_disk(y, z);
        const double xz = mu_disk(x, z);
        const bool sym = mu_disk(y, x) == xy;
        const double slack = xy + yz - xz;
        suite.record(sym && xz <= xy + yz + kSlack, slack, [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y) + " z=" + fmt_point(z);
        });
    }
    return suite.finish();
}

SuiteResult suite_mu_monotone_link(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("mu_monotone_link", "min_increase", true);
    for (int i = 0; i < cfg.samples; ++i) {
        const auto [x1, y1] = sample_pair(rng);
        const auto [x2, y2] = sample_pair(rng);
        double r1 = rho_ball(x1, y1);
        double r2 = rho_ball(x2, y2);
        double m1 = mu_disk(x1, y1);
        double m2 = mu_disk(x2, y2);
        if (std::abs(r1 - r2) <= 1e-9)
            continue;
        if (r1 > r2) {
            std::swap(r1, r2);
            std::swap(m1, m2);
        }
        suite.record(m1 < m2, m2 - m1, [&] {
            return "rho1=" + format_sig17(r1) + " rho2=" + format_sig17(r2) +
                   " mu1=" + format_sig17(m1) + " mu2=" + format_sig17(m2);
        });
    }
    return suite.finish();
}

SuiteResult suite_qc_distortion_half(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("qc_distortion_half", "min_margin", true);
    const StretchParam p(0.5);
    const double K = p.maximal_dilatation();
    for (int i = 0; i < cfg.samples; ++i) {
        const auto [x, y] = sample_pair(rng);
        const double ratio =
            mu_disk(radial_stretch(x, p), radial_stretch(y, p)) / mu_disk(x, y);
        const double margin = std::min(ratio - 1.0 / K, K - ratio);
        suite.record(ratio >= 1.0 / K && ratio <= K, margin, [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y) + " ratio=" + format_sig17(ratio);
        });
    }
    return suite.finish();
}

SuiteResult suite_qc_identity(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("qc_identity_alpha1", "max_absolute_error", false);
    const StretchParam p(1.0);
    for (int i = 0; i < cfg.samples; ++i) {
        const auto [x, y] = sample_pair(rng);
        const double ratio =
            mu_disk(radial_stretch(x, p), radial_stretch(y, p)) / mu_disk(x, y);
        suite.record(ratio == 1.0, std::abs(ratio - 1.0), [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y) + " ratio=" + format_sig17(ratio);
        });
    }
    return suite.finish();
}

// --- bounds suites ---

SuiteResult suite_rho_midpoint_bracket(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("rho_midpoint_bracket", "min_margin", true);
    for (int i = 0; i < cfg.samples; ++i) {
        const auto [x, y] = sample_pair(rng);
        const double th = th_half_rho(kDisk, x, y);
        const BoundPair bp = rho_bounds_midpoint(x, y);
        bool ok = bp.lower <= th + kSlack;
        double margin = th - bp.lower;
        if (bp.upper) {
            ok = ok && th <= *bp.upper + kSlack;
            margin = std::min(margin, *bp.upper - th);
        }
        suite.record(ok, margin, [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y) + " th=" + format_sig17(th);
        });
    }
    return suite.finish();
}

SuiteResult suite_rho_classic_bracket(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("rho_classic_bracket", "min_margin", true);
    for (int i = 0; i < cfg.samples; ++i) {
        const auto [x, y] = sample_pair(rng);
        const double th = th_half_rho(kDisk, x, y);
        const BoundPair bp = rho_bounds_classic(x, y);
        const double margin = std::min(th - bp.lower, *bp.upper - th);
        suite.record(bp.lower <= th + kSlack && th <= *bp.upper + kSlack, margin, [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y) + " th=" + format_sig17(th);
        });
    }
    return suite.finish();
}

SuiteResult suite_mu_midpoint_bracket(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("mu_midpoint_bracket", "min_margin", true);
    for (int i = 0; i < cfg.samples; ++i) {
        const auto [x, y] = sample_pair(rng);
        const double m = mu_disk(x, y);
        const BoundPair bp = mu_bounds_midpoint(x, y);
        bool ok = bp.lower <= m + kSlack;
        double margin = m - bp.lower;
        if (bp.upper) {
            ok = ok && m <= *bp.upper + kSlack;
            margin = std::min(margin, *bp.upper - m);
        }
        suite.record(ok, margin, [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y) + " mu=" + format_sig17(m);
        });
    }
    return suite.finish();
}

SuiteResult suite_equality_certificates(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("equality_certificates", "max_absolute_error", false);
    for (int i = 0; i < cfg.samples; ++i) {
        // equal norms: rotate x by a random angle
        Point x(std::vector<double>{0.0, 0.0});
        Point y = x;
        for (;;) {
            x = sample_disk(rng);
            const double theta = 2.0 * kPi * rng.uniform01();
            const double c = std::cos(theta), s = std::sin(theta);
            y = Point::xy(c * x[0] - s * x[1], s * x[0] + c * x[1]);
            if ((x - y).norm() >= 1e-6 && (x + y).norm() >= 1e-6)
                break;
        }
        const double th_equal = th_half_rho(kDisk, x, y);
        const double lower = rho_bounds_midpoint(x, y).lower;
        double err = std::abs(lower - th_equal);

        // collinear with the origin: y = t x
        Point cx(std::vector<double>{0.0, 0.0});
        Point cy = cx;
        for (;;) {
            cx = sample_disk(rng);
            const double t = rng.uniform01();
            cy = cx * t;
            if ((cx - cy).norm() >= 1e-6 && (cx + cy).norm() >= 1e-6)
                break;
        }
        const double th_col = th_half_rho(kDisk, cx, cy);
        const BoundPair bp = rho_bounds_midpoint(cx, cy);
        if (!bp.upper) {
            suite.record(false, 1.0, [&] {
                return "collinear pair lost its upper bound: x=" + fmt_point(cx) +
                       " y=" + fmt_point(cy);
            });
            continue;
        }
        err = std::max(err, std::abs(*bp.upper - th_col));
        suite.record(err <= kSlack, err, [&] {
            return "equal-norm x=" + fmt_point(x) + " y=" + fmt_point(y) +
                   "; collinear x=" + fmt_point(cx) + " y=" + fmt_point(cy);
        });
    }
    return suite.finish();
}

SuiteResult suite_arth_th_power_monotone(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("arth_th_power_monotone", "min_increase", true);
    for (int i = 0; i < cfg.samples; ++i) {
        const double t = 5.0 * uniform_pos(rng);
        double p1 = 10.0 * uniform_pos(rng);
        double p2 = 10.0 * uniform_pos(rng);
        if (p1 == p2)
            continue;
        if (p1 > p2)
            std::swap(p1, p2);
        const double v1 = arth_th_power(t, p1);
        const double v2 = arth_th_power(t, p2);
        suite.record(v1 < v2, v2 - v1, [&] {
            return "t=" + format_sig17(t) + " p1=" + format_sig17(p1) + " p2=" + format_sig17(p2) +
                   " v1=" + format_sig17(v1) + " v2=" + format_sig17(v2);
        });
    }
    return suite.finish();
}

SuiteResult suite_quartic_dominance(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("quartic_dominance", "min_margin", true);
    for (int i = 0; i < cfg.samples; ++i) {
        const auto [x, y] = sample_pair(rng);
        const double m = mu_disk(x, y);
        const double q = mu_lower_quartic(rho_ball(x, y));
        suite.record(q < m, m - q, [&] {
            return "x=" + fmt_point(x) + " y=" + fmt_point(y) + " mu=" + format_sig17(m) +
                   " quartic=" + format_sig17(q);
        });
    }
    return suite.finish();
}

SuiteResult suite_crossover_branch(SplitMix64, const RunConfig&) {
    Suite suite("crossover_branch", "max_absolute_error", false);
    const double eight_over_pi = 8.0 / kPi;
    const double q2 = mu_lower_quartic(2.0);
    const double l2 = 4.0 / kPi * 2.0;
    suite.record(std::abs(q2 - l2) <= 1e-12 * eight_over_pi, std::abs(q2 - l2),
                 [&] { return "quartic(2)=" + format_sig17(q2) + " linear(2)=" + format_sig17(l2); });
    suite.record(std::abs(best_mu_lower(2.0) - eight_over_pi) <= 1e-12 * eight_over_pi,
                 std::abs(best_mu_lower(2.0) - eight_over_pi),
                 [&] { return "best_mu_lower(2)=" + format_sig17(best_mu_lower(2.0)); });
    const bool quartic_side = best_mu_lower(1.9) == mu_lower_quartic(1.9) &&
                              mu_lower_quartic(1.9) > 4.0 / kPi * 1.9;
    suite.record(quartic_side, mu_lower_quartic(1.9) - 4.0 / kPi * 1.9,
                 [&] { return std::string("branch at rho=1.9"); });
    const bool linear_side =
        best_mu_lower(2.1) == 4.0 / kPi * 2.1 && 4.0 / kPi * 2.1 > mu_lower_quartic(2.1);
    suite.record(linear_side, 4.0 / kPi * 2.1 - mu_lower_quartic(2.1),
                 [&] { return std::string("branch at rho=2.1"); });
    return suite.finish();
}

SuiteResult suite_gamma_bracket(SplitMix64 rng, const RunConfig& cfg) {
    Suite suite("gamma_bracket", "min_margin", true);
    const int per_dim = std::max(1, cfg.samples / 3);
    for (int nv = 2; nv <= 4; ++nv) {
        const Dimension n(nv);
        for (int i = 0; i < per_dim; ++i) {
            const double s = 1.0 + 999.0 * uniform_pos(rng);
            const BoundPair bp = gamma_n_bounds(n, CapacityArg(s));
            const double mid = gamma_n_bounds_middle(n, CapacityArg(s));
            bool ok = bp.lower <= mid + kSlack && mid <= *bp.upper + kSlack;
            double margin = std::min(mid - bp.lower, *bp.upper - mid);
            if (nv == 2) {
                const double g = gamma2(CapacityArg(s));
                ok = ok && std::abs(mid - g) / g < 1e-10 && bp.lower <= g + kSlack &&
                     g <= *bp.upper + kSlack;
            }
            suite.record(ok, margin, [&] {
                return "n=" + std::to_string(nv) + " s=" + format_sig17(s) +
                       " middle=" + format_sig17(mid);
            });
        }
    }
    return suite.finish();
}

SuiteResult suite_table_reproduction(SplitMix64, const RunConfig&) {
    Suite suite("table_reproduction", "max_prerounding_distance", false);
    const auto rows = comparison_table();
    const char* expected[2][4] = {
        {"0.575624", "0.491855", "0.591776", "0.594959"},
        {"0.997999", "0.999183", "0.999555", "0.999381"},
    };
    for (int i = 0; i < 2; ++i) {
        const double values[4] = {rows[i].lower_rotation, rows[i].lower_classic,
                                  rows[i].upper_rotation, rows[i].upper_classic};
        for (int j = 0; j < 4; ++j) {
            const std::string got = format_fixed6(values[j]);
            const double target = std::atof(expected[i][j]);
            const double dist = std::abs(values[j] - target);
            suite.record(got == expected[i][j] && dist < 5e-7, dist, [&] {
                return "row " + std::to_string(i + 1) + " column " + std::to_string(j) +
                       ": got " + got + " expected " + expected[i][j];
            });
        }
    }
    suite.record(rows[0].tighter_lower == "rotation" && rows[0].tighter_upper == "rotation", 0.0,
                 [&] { return std::string("row 1 tighter sides"); });
    suite.record(rows[1].tighter_lower == "classic" && rows[1].tighter_upper == "classic", 0.0,
                 [&] { return std::string("row 2 tighter sides"); });
    return suite.finish();
}

SuiteResult suite_figure_switch(SplitMix64, const RunConfig& cfg) {
    Suite suite("figure_switch", "max_absolute_error", false);
    const FigureScan scan = figure_scan(cfg);
    suite.record(scan.unique_switch, 0.0, [&] { return std::string("switch not unique"); });
    const double err = std::abs(scan.switch_rho - 2.0);
    suite.record(err <= 1e-9, err,
                 [&] { return "switch_rho=" + format_sig17(scan.switch_rho); });
    suite.record(bound_gap_at(0.5) > 0.0, 0.0,
                 [&] { return std::string("quartic should dominate at x=0.5"); });
    suite.record(bound_gap_at(0.9) < 0.0, 0.0,
                 [&] { return std::string("linear should dominate at x=0.9"); });
    return suite.finish();
}

SuiteResult suite_holder_divergence(SplitMix64, const RunConfig& cfg) {
    Suite suite("holder_quotient_divergence", "min_quotient_step", true);
    const double ws[4] = {0.1, 0.25, 0.5, 1.0};
    for (const double w : ws) {
        for (const ProbeMetric metric : {ProbeMetric::Euclidean, ProbeMetric::Hyperbolic}) {
            const char* mname = metric == ProbeMetric::Euclidean ? "euclidean" : "hyperbolic";
            const HolderScan scan = holder_probe(w, metric, cfg);
            // strict growth of the quotient from k = 3 on
            double min_step = std::numeric_limits<double>::infinity();
            for (int k = 4; k <= 12; ++k)
                min_step = std::min(min_step, *scan.rows[k - 1].rec.quotient -
                                                  *scan.rows[k - 2].rec.quotient);
            suite.record(scan.quotient_monotone_from_k3, min_step, [&] {
                const int k = scan.first_violation_k;
                return std::string("w=") + format_sig17(w) + " metric=" + mname +
                       ": Q(k=" + std::to_string(k) + ")=" +
                       format_sig17(*scan.rows[k - 1].rec.quotient) +
                       " <= Q(k=" + std::to_string(k - 1) + ")=" +
                       format_sig17(*scan.rows[k - 2].rec.quotient);
            });
            // every row's quotient sits above the analytic minorant
            for (const HolderRow& row : scan.rows) {
                const double q = *row.rec.quotient;
                suite.record(row.minorant <= q * (1.0 + 1e-13), q - row.minorant, [&] {
                    return std::string("w=") + format_sig17(w) + " metric=" + mname +
                           " k=" + std::to_string(row.k) + ": minorant " +
                           format_sig17(row.minorant) + " > quotient " + format_sig17(q);
                });
            }
            if (w == 0.25) {
                const double ratio =
                    *scan.rows[11].rec.quotient / *scan.rows[2].rec.quotient;
                suite.record(ratio > 10.0, ratio, [&] {
                    return std::string("metric=") + mname +
                           ": divergence ratio=" + format_sig17(ratio);
                });
            }
        }
    }
    return suite.finish();
}

} // namespace

VerifyReport run_verify(const RunConfig& cfg) {
    cfg.validate();
    VerifyReport report;
    report.seed = cfg.seed;
    report.samples = cfg.samples;
    const SplitMix64 root(cfg.seed);

    using SuiteFn = SuiteResult (*)(SplitMix64, const RunConfig&);
    const std::pair<const char*, SuiteFn> suites[] = {
        {"mu_functional_identity", suite_mu_functional_identity},
        {"mu_fixed_point", suite_mu_fixed_point},
        {"gamma2_mu_identity", suite_gamma2_mu_identity},
        {"arth_quartic_bracket", suite_eq4_bracket},
        {"mu_monotone", suite_mu_monotone},
        {"gamma2_monotone", suite_gamma2_monotone},
        {"ellip_k_agm_vs_quadrature", suite_ellip_k_quadrature},
        {"tau2_gamma2_roundtrip", suite_tau2_roundtrip},
        {"gamma2_mu_roundtrip", suite_gamma2_mu_roundtrip},
        {"rotation_monotone_nu", suite_rotation_monotone_nu},
        {"rotation_endpoint_forms", suite_rotation_endpoint_forms},
        {"rho_ball_triangle", suite_rho_triangle},
        {"rho_ball_radial", suite_rho_radial},
        {"hyp_ball_roundtrip", suite_hyp_ball_roundtrip},
        {"mu_sandwich_linear", suite_mu_sandwich_linear},
        {"lambda_sandwich", suite_lambda_sandwich},
        {"mu_lambda_product", suite_mu_lambda_product},
        {"mu_triangle", suite_mu_triangle},
        {"mu_monotone_link", suite_mu_monotone_link},
        {"qc_distortion_half", suite_qc_distortion_half},
        {"qc_identity_alpha1", suite_qc_identity},
        {"rho_midpoint_bracket", suite_rho_midpoint_bracket},
        {"rho_classic_bracket", suite_rho_classic_bracket},
        {"mu_midpoint_bracket", suite_mu_midpoint_bracket},
        {"equality_certificates", suite_equality_certificates},
        {"arth_th_power_monotone", suite_arth_th_power_monotone},
        {"quartic_dominance", suite_quartic_dominance},
        {"crossover_branch", suite_crossover_branch},
        {"gamma_bracket", suite_gamma_bracket},
        {"table_reproduction", suite_table_reproduction},
        {"figure_switch", suite_figure_switch},
        {"holder_quotient_divergence", suite_holder_divergence},
    };

    report.all_pass = true;
    for (const auto& [name, fn] : suites) {
        SuiteResult res = fn(root.split(name), cfg);
        report.all_pass = report.all_pass && res.pass;
        report.suites.push_back(std::move(res));
    }
    return report;
}

std::string verify_json(const VerifyReport& report) {
    ordered_json doc;
    doc["seed"] = report.seed;
    doc["samples"] = report.samples;
    doc["suites"] = ordered_json::array();
    for (const SuiteResult& s : report.suites) {
        ordered_json js;
        js["name"] = s.name;
        js["checks"] = s.checks;
        js["failures"] = s.failures;
        js["worst"] = s.worst;
        js["worst_kind"] = s.worst_kind;
        js["pass"] = s.pass;
        if (!s.counterexample.empty())
            js["counterexample"] = s.counterexample;
        doc["suites"].push_back(std::move(js));
    }
    doc["all_pass"] = report.all_pass;
    return doc.dump(2) + "\n";
}

// ---- quasiconformal distortion check ----------------------------------------

QcReport qc_check(double alpha, const RunConfig& cfg) {
    cfg.validate();
    const StretchParam p(alpha); // validates the range
    const SplitMix64 root(cfg.seed);
    SplitMix64 rng = root.split("qc_check");
    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(cfg.samples);
    for (int i = 0; i < cfg.samples; ++i)
        pairs.push_back(sample_pair(rng));
    QcReport rep;
    rep.alpha = alpha;
    rep.K = p.maximal_dilatation();
    rep.pairs = cfg.samples;
    rep.report = qc_mu_distortion(p, pairs);
    rep.pass = rep.report.pass;
    return rep;
}

std::string qc_json(const QcReport& report) {
    ordered_json doc;
    doc["alpha"] = report.alpha;
    doc["K"] = report.K;
    doc["ratio_bound_lower"] = 1.0 / report.K;
    doc["ratio_bound_upper"] = report.K;
    doc["pairs"] = report.pairs;
    doc["min_ratio"] = report.report.min_ratio;
    doc["max_ratio"] = report.report.max_ratio;
    doc["violations"] = report.report.violations;
    doc["pass"] = report.pass;
    return doc.dump(2) + "\n";
}

} // namespace cimet::harness
