// horiesz: evaluation, kernels, verification suites and estimate scans.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "horiesz/ops.hpp"
#include "horiesz/polys.hpp"
#include "horiesz/report.hpp"
#include "horiesz/riesz.hpp"
#include "horiesz/verify.hpp"

namespace {

using namespace horiesz;

struct RunConfig {
    double k = 1.0;
    int nmax = 20;
    int window = 128;
    int grid_nodes = 8192;
    double t = 0.5;
    std::vector<double> p_list{1.25, 1.5, 2.0, 3.0, 4.0};
    int trials = 8;
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string out;
    std::string csv;
};

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--k", c.k, "coupling parameter k >= 0");
    sub->add_option("--nmax", c.nmax, "largest |n| in identity suites");
    sub->add_option("--window", c.window, "window radius");
    sub->add_option("--grid-nodes", c.grid_nodes, "starting trapezoid grid");
    sub->add_option("--t", c.t, "heat time");
    sub->add_option("--p", c.p_list, "exponents p > 1")->delimiter(',');
    sub->add_option("--trials", c.trials, "random trials per window");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out, "output file (default stdout)");
    sub->add_option("--csv", c.csv, "also write a CSV table here");
}

void validate(const RunConfig& c) {
    if (!(c.k >= 0.0) || !std::isfinite(c.k)) throw UsageError("--k must be a finite number >= 0");
    if (c.nmax < 1) throw UsageError("--nmax must be positive");
    if (c.window < 0) throw UsageError("--window must be >= 0");
    if (c.grid_nodes < 1) throw UsageError("--grid-nodes must be positive");
    if (!(c.t >= 0.0) || !std::isfinite(c.t)) throw UsageError("--t must be a finite number >= 0");
    if (c.trials < 1) throw UsageError("--trials must be positive");
    if (c.p_list.empty()) throw UsageError("--p needs at least one value");
    for (double p : c.p_list)
        if (!(p > 1.0) || !std::isfinite(p)) throw UsageError("--p entries must be > 1");
}

/// Single writer for all primary output.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open " + path);
    f << text;
    if (!f) throw std::ios_base::failure("cannot write " + path);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_eval(const RunConfig& c, int n, double x, bool coeffs) {
    const Basis b(c.k, std::abs(n));
    const TrigPoly monic = b.monic(n).cast<cplx>();
    const TrigPoly ortho = b.orthonormal(n).cast<cplx>();
    if (c.format == "csv") {
        std::string s = csv_row({"quantity", "value"});
        s += csv_row({"monic", format_complex(monic.eval(x))});
        s += csv_row({"orthonormal", format_complex(ortho.eval(x))});
        if (coeffs)
            for (int j = monic.lo(); j <= monic.hi(); ++j)
                if (monic[j] != 0.0) s += csv_row({"coeff[" + std::to_string(j) + "]", format_double(monic[j].real())});
        emit(c.out, s);
        return 0;
    }
    ordered_json j;
    j["n"] = n;
    j["k"] = c.k;
    j["x"] = x;
    j["monic"] = format_complex(monic.eval(x));
    j["orthonormal"] = format_complex(ortho.eval(x));
    j["norm_sq"] = norm_sq(n, c.k);
    if (coeffs) {
        ordered_json cj = ordered_json::object();
        for (int f = monic.lo(); f <= monic.hi(); ++f)
            if (monic[f] != 0.0) cj[std::to_string(f)] = monic[f].real();
        j["coefficients"] = std::move(cj);
    }
    emit(c.out, dump(j));
    return 0;
}

int cmd_verify(const RunConfig& c) {
    VerifyConfig v;
    v.k = c.k;
    v.nmax = c.nmax;
    v.window = c.window;
    v.grid_nodes = c.grid_nodes;
    v.t = c.t;
    v.seed = c.seed;
    const auto reports = run_verify(v);
    emit(c.out, c.format == "csv" ? reports_csv(reports) : dump(to_json_array(reports)));
    if (!c.csv.empty()) emit(c.csv, reports_csv(reports));
    return all_pass(reports) ? 0 : kExitFail;
}

int cmd_kernel(const RunConfig& c, const std::string& which) {
    KernelMatrix km;
    if (which == "heat") {
        km = heat_kernel_matrix(c.t, c.k, c.window);
    } else {
        km = riesz_kernel_matrix(c.k, c.window, which == "riesz-star");
    }
    emit(c.out, c.format == "csv" ? kernel_csv(km) : dump(to_json(km)));
    if (!c.csv.empty()) emit(c.csv, kernel_csv(km));
    return 0;
}

std::string summary_table(const std::vector<EstimateReport>& reports) {
    std::string s;
    char line[200];
    std::snprintf(line, sizeof line, "%-40s %8s %8s %14s  %s\n", "quantity", "k", "window", "value", "status");
    s += line;
    for (const auto& r : reports) {
        const char* st = r.inconclusive ? "inconclusive" : (r.pass ? "pass" : "FAIL");
        std::snprintf(line, sizeof line, "%-40s %8g %8d %14.6g  %s\n", r.quantity.c_str(), r.k, r.window, r.sup_value, st);
        s += line;
    }
    return s;
}

int cmd_estimates(const RunConfig& c) {
    const int w = c.window;
    std::vector<EstimateReport> reports;
    reports.push_back(size_bound_scan(c.k, w));
    reports.push_back(smoothness_bound_scan(c.k, w));
    reports.push_back(hormander_scan(c.k, w));
    for (auto& r : lp_growth_probe(c.k, c.p_list, probe_windows(std::max(w, 1)), c.trials, c.seed)) reports.push_back(std::move(r));
    for (auto& r : reports) r.window = w;

    const std::string body = c.format == "csv" ? trend_csv(reports) : dump(to_json_array(reports));
    emit(c.out, body);
    if (!c.csv.empty()) emit(c.csv, trend_csv(reports));
    (c.out.empty() ? std::cerr : std::cout) << summary_table(reports);
    for (const auto& r : reports)
        if (!r.pass) return kExitFail;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heckman-Opdam polynomials, transforms and discrete Riesz transforms (type A1)"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* eval = app.add_subcommand("eval", "evaluate E_n^k(ix) and its orthonormal version");
    add_common(eval, cfg);
    int n = 0;
    double x = 0.0;
    bool coeffs = false;
    eval->add_option("--n", n, "index n")->required();
    eval->add_option("--x", x, "point x (default 0)");
    eval->add_flag("--coeffs", coeffs, "list the monic coefficients");

    auto* verify = app.add_subcommand("verify", "run every invariant suite");
    add_common(verify, cfg);

    auto* kernel = app.add_subcommand("kernel", "write a kernel matrix");
    add_common(kernel, cfg);
    std::string which;
    kernel->add_option("which", which, "riesz, riesz-star or heat")
        ->required()
        ->check(CLI::IsMember({"riesz", "riesz-star", "heat"}));

    auto* estimates = app.add_subcommand("estimates", "kernel estimate scans and l^p probes");
    add_common(estimates, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        validate(cfg);
        if (eval->parsed()) return cmd_eval(cfg, n, x, coeffs);
        if (verify->parsed()) return cmd_verify(cfg);
        if (kernel->parsed()) return cmd_kernel(cfg, which);
        if (estimates->parsed()) return cmd_estimates(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
