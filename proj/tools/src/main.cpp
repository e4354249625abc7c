#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cimet/harness.hpp>

using cimet::Point;
namespace harness = cimet::harness;

namespace {

// 0 on success, 1 on I/O failure
int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return std::cout.good() ? 0 : 1;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << out_path << '\n';
        return 1;
    }
    f << text;
    f.flush();
    return f.good() ? 0 : 1;
}

struct CommonOpts {
    harness::RunConfig cfg;
    std::string output = "csv";
    std::string out_path;

    bool json() const { return output == "json"; }
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--seed", opts.cfg.seed, "RNG seed")->capture_default_str();
    sub->add_option("--samples", opts.cfg.samples, "sample count for randomized sweeps")
        ->capture_default_str();
    sub->add_option("--grid", opts.cfg.grid, "grid resolution for scans")->capture_default_str();
    sub->add_option("--tolerance", opts.cfg.tolerance, "tolerance knob recorded in the run config")
        ->capture_default_str();
    sub->add_option("--output", opts.output, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", opts.out_path, "write to this file instead of standard output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for conformally invariant metrics on the unit disk"};
    app.require_subcommand(1);

    CommonOpts table_opts, figure_opts, holder_opts, rotation_opts, verify_opts, qc_opts;

    CLI::App* table = app.add_subcommand("table", "two-sided distance-bound comparison table");
    add_common(table, table_opts);

    CLI::App* figure = app.add_subcommand(
        "figure", "grid scan of the modulus metric against its two lower bounds");
    add_common(figure, figure_opts);

    CLI::App* holder = app.add_subcommand(
        "holder-probe", "growth of mu(x,0)/|x|^w (or the hyperbolic variant) toward the origin");
    add_common(holder, holder_opts);
    double w = 0.25;
    std::string metric_name = "euclidean";
    holder->add_option("--w", w, "Holder exponent of the denominator")->capture_default_str();
    holder->add_option("--metric", metric_name, "denominator distance")
        ->check(CLI::IsMember({"euclidean", "hyperbolic"}))
        ->capture_default_str();

    CLI::App* rotation = app.add_subcommand(
        "rotation-scan", "distance of a pair under midpoint rotation, nu in [0, pi/2]");
    add_common(rotation, rotation_opts);
    std::vector<double> xv, yv;
    rotation->add_option("--x", xv, "first point, re,im")
        ->delimiter(',')
        ->expected(2)
        ->required();
    rotation->add_option("--y", yv, "second point, re,im")
        ->delimiter(',')
        ->expected(2)
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "run every property suite; JSON report");
    add_common(verify, verify_opts);

    CLI::App* qc = app.add_subcommand(
        "qc-check", "modulus-metric distortion of the radial stretch x -> |x|^(a-1) x");
    add_common(qc, qc_opts);
    double alpha = 0.0;
    qc->add_option("--alpha", alpha, "stretch exponent in (0, 1]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (*table) {
            return emit(table_opts.json() ? harness::table_json() : harness::table_csv(),
                        table_opts.out_path);
        }
        if (*figure) {
            const harness::FigureScan scan = harness::figure_scan(figure_opts.cfg);
            if (!figure_opts.json()) {
                std::fprintf(stderr,
                             "note: lower-bound ordering switches at x* = %.17g (rho = %.17g); "
                             "x* = tanh(1), often rounded to 0.75\n",
                             scan.switch_x, scan.switch_rho);
            }
            const int rc = emit(figure_opts.json() ? harness::figure_json(scan)
                                                   : harness::figure_csv(scan),
                                figure_opts.out_path);
            if (rc != 0)
                return rc;
            return scan.unique_switch ? 0 : 1;
        }
        if (*holder) {
            const harness::ProbeMetric metric = metric_name == "hyperbolic"
                                                    ? harness::ProbeMetric::Hyperbolic
                                                    : harness::ProbeMetric::Euclidean;
            const harness::HolderScan scan = harness::holder_probe(w, metric, holder_opts.cfg);
            const int rc = emit(holder_opts.json() ? harness::holder_json(scan)
                                                   : harness::holder_csv(scan),
                                holder_opts.out_path);
            if (rc != 0)
                return rc;
            if (!scan.quotient_monotone_from_k3) {
                std::fprintf(stderr,
                             "assertion failed: quotient not strictly increasing from k = 3 "
                             "(first violation at k = %d)\n",
                             scan.first_violation_k);
                return 1;
            }
            return 0;
        }
        if (*rotation) {
            const harness::RotationScan scan = harness::rotation_scan(
                Point::xy(xv[0], xv[1]), Point::xy(yv[0], yv[1]), rotation_opts.cfg);
            const int rc = emit(rotation_opts.json() ? harness::rotation_json(scan)
                                                     : harness::rotation_csv(scan),
                                rotation_opts.out_path);
            if (rc != 0)
                return rc;
            if (!scan.monotone || !scan.endpoints_match) {
                std::fprintf(stderr, "assertion failed: monotone=%d endpoints_match=%d\n",
                             scan.monotone ? 1 : 0, scan.endpoints_match ? 1 : 0);
                return 1;
            }
            return 0;
        }
        if (*verify) {
            const harness::VerifyReport report = harness::run_verify(verify_opts.cfg);
            const int rc = emit(harness::verify_json(report), verify_opts.out_path);
            if (rc != 0)
                return rc;
            return report.all_pass ? 0 : 1;
        }
        if (*qc) {
            const harness::QcReport report = harness::qc_check(alpha, qc_opts.cfg);
            const int rc = emit(harness::qc_json(report), qc_opts.out_path);
            if (rc != 0)
                return rc;
            return report.pass ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2; // unreachable: a subcommand is required
}
