#pragma once

// Everything behind the CLI: the bound-comparison table, the figure scan with
// its crossover detection, the Holder-divergence probe, the midpoint-rotation
// scan, the property-suite runner, and the quasiconformal distortion check.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <cimet/bounds.hpp>
#include <cimet/geom.hpp>
#include <cimet/metrics.hpp>
#include <cimet/rng.hpp>

namespace cimet::harness {

enum class OutputFormat { Csv, Json };

struct RunConfig {
    std::uint64_t seed = 42;
    int samples = 10000;
    int grid = 200;
    double tolerance = 1e-9;
    OutputFormat output_format = OutputFormat::Csv;
    // throws std::invalid_argument unless samples >= 1, grid >= 2, tolerance > 0
    void validate() const;
};

// One row of a scan: the abscissa, the exact value there, and any closed-form
// companions it is being compared against.
struct ProbeRecord {
    double abscissa;
    double exact;
    double bound_low;
    std::optional<double> bound_high;
    std::optional<double> quotient;
};

// ---- comparison table ------------------------------------------------------

struct TableRow {
    Point x, y;
    double exact_th;      // th(rho/2) for the pair
    double lower_rotation; // midpoint-rotation lower form
    double lower_classic;  // product-form lower
    double upper_rotation; // midpoint-rotation upper form
    double upper_classic;  // product-form upper
    std::string tighter_lower; // "rotation" or "classic"
    std::string tighter_upper;
};

std::array<TableRow, 2> comparison_table();
std::string table_csv();
std::string table_json();

// round half away from zero to 6 decimals (table reproduction convention)
double round_half_away_6(double v);
std::string format_fixed6(double v);
// 17 significant digits, enough to round-trip a double
std::string format_sig17(double v);

// ---- figure scan -----------------------------------------------------------

struct FigureRow {
    double x;
    double rho;
    double mu;
    double lower_quartic;
    double lower_linear;
};

struct FigureScan {
    std::vector<FigureRow> rows; // cfg.grid points, x in [0.01, 0.99]
    double switch_x;             // bisected abscissa where the two lower bounds cross
    double switch_rho;           // rho(switch_x, 0); analytically 2
    bool unique_switch;          // exactly one sign change across the grid
};

FigureScan figure_scan(const RunConfig& cfg);
std::string figure_csv(const FigureScan& scan);
std::string figure_json(const FigureScan& scan);

// ---- Holder-divergence probe -------------------------------------------------

enum class ProbeMetric { Euclidean, Hyperbolic };

// majorant U(r) = log(2 (1 + sqrt(1-r^2)) / r) of the Grotzsch mu function
double grotzsch_mu_log_upper(double r);

struct HolderRow {
    int k;              // abscissa is 10^{-k}
    ProbeRecord rec;    // abscissa = x, exact = mu(x,0), bound_low = 2 pi / U(x),
                        // quotient = exact / denominator
    double denominator; // |x|^w or rho(x,0)^w
    double minorant;    // bound_low / denominator, a lower bound on the quotient
};

struct HolderScan {
    double w;
    ProbeMetric metric;
    std::vector<HolderRow> rows; // k = 1..12
    bool quotient_monotone_from_k3;
    int first_violation_k; // smallest k >= 4 with Q(k) <= Q(k-1); 0 if none
};

HolderScan holder_probe(double w, ProbeMetric metric, const RunConfig& cfg);
std::string holder_csv(const HolderScan& scan);
std::string holder_json(const HolderScan& scan);

// ---- rotation scan -----------------------------------------------------------

struct RotationRow {
    double nu;
    double th; // th(rho/2)
    double rho;
    double mu;
};

struct RotationScan {
    double d;
    double k;
    double native_nu;
    std::vector<RotationRow> rows; // cfg.grid points, nu uniform on [0, pi/2]
    bool monotone;        // th, rho, mu all nonincreasing across the grid
    bool endpoints_match; // first/last row th equal the closed-form bracket
};

// throws std::invalid_argument for degenerate pairs or |x+y|+|x-y| >= 2 (the
// nu = 0 rotation would leave the disk)
RotationScan rotation_scan(const Point& x, const Point& y, const RunConfig& cfg);
std::string rotation_csv(const RotationScan& scan);
std::string rotation_json(const RotationScan& scan);

// ---- property-suite runner ---------------------------------------------------

struct SuiteResult {
    std::string name;
    int checks;
    int failures;
    double worst;           // extremal observed slack/error, see worst_kind
    std::string worst_kind; // what `worst` measures for this suite
    bool pass;
    std::string counterexample; // first failing sample, empty when pass
};

struct VerifyReport {
    std::uint64_t seed;
    int samples;
    std::vector<SuiteResult> suites;
    bool all_pass;
};

VerifyReport run_verify(const RunConfig& cfg);
std::string verify_json(const VerifyReport& report);

// ---- quasiconformal distortion check ----------------------------------------

struct QcReport {
    double alpha;
    double K;
    int pairs;
    DistortionReport report;
    bool pass;
};

QcReport qc_check(double alpha, const RunConfig& cfg);
std::string qc_json(const QcReport& report);

// ---- sampling ----------------------------------------------------------------

// uniform point of the open disk of the given radius, by rejection from the square
Point sample_disk(SplitMix64& rng, double radius = 0.999);
// pair of disk points with |x-y| >= 1e-6 and |x+y| >= 1e-6
std::pair<Point, Point> sample_pair(SplitMix64& rng);

} // namespace cimet::harness
