// latticehull: Monte Carlo experiments on randomized integer convex hulls.
//
// Subcommands estimate mean-width and area differences between a convex
// body and the hull of its intersection with a random lattice, fit scaling
// exponents across lambda grids, and report flatness constants. Every run
// is reproducible from its seed; CSV output is byte-stable in serial mode.

#include <chrono>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latticehull/bodyspec.hpp"
#include "latticehull/csv.hpp"
#include "latticehull/estimators.hpp"
#include "latticehull/experiments.hpp"
#include "latticehull/geometry.hpp"
#include "latticehull/manifest.hpp"
#include "latticehull/parallel.hpp"
#include "latticehull/svg.hpp"

namespace {

using namespace lh;

struct CommonOptions {
    std::string body = "disk";
    std::uint64_t seed = 0;
    int threads = 0;  // 0: use available parallelism
    std::string out;

    int effective_threads() const { return threads > 0 ? threads : default_thread_count(); }
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--body", opt.body,
                    "body spec: disk, disk-r<R>, square, square-s<S>, ellipse, "
                    "ellipse-a<A>-b<B>, hexagon, or a polygon file");
    cmd->add_option("--seed", opt.seed, "base RNG seed")->envname("LATTICEHULL_SEED");
    cmd->add_option("--threads", opt.threads, "worker threads (default: available parallelism)");
    cmd->add_option("--out", opt.out, "CSV output path (appended; created with header)");
    cmd->set_config("--config", "", "flat key=value config file; flags override file values");
}

struct RowSink {
    std::string out_path;
    std::string canonical;
    std::uint64_t seed = 0;
    int threads = 1;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::map<std::string, std::int64_t> flags;
    bool header_printed = false;

    void emit(const CsvRow& row) {
        if (!header_printed) {
            std::cout << kCsvHeader << '\n';
            header_printed = true;
        }
        std::cout << format_csv_row(row) << '\n';
        if (!out_path.empty()) append_csv_row(out_path, row);
        for (const auto& [k, v] : parse_flags(row.flags)) flags[k] += v;
    }

    void comment(const std::string& text) {
        std::cout << "# " << text << '\n';
        if (!out_path.empty()) append_csv_comment(out_path, text);
    }

    static std::map<std::string, std::int64_t> parse_flags(const std::string& s) {
        std::map<std::string, std::int64_t> out;
        std::size_t pos = 0;
        while (pos < s.size()) {
            const std::size_t semi = s.find(';', pos);
            const std::string item =
                semi == std::string::npos ? s.substr(pos) : s.substr(pos, semi - pos);
            const std::size_t eq = item.find('=');
            if (eq != std::string::npos) out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        return out;
    }

    void finish() {
        if (out_path.empty()) return;
        RunManifest m;
        m.command = canonical;
        m.config_hash = fnv1a64(canonical);
        m.seed = seed;
        m.threads = threads;
        m.duration_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        m.flags = flags;
        write_manifest(out_path, m);
    }
};

CsvRow estimate_row(const std::string& body, const std::string& functional, double lambda,
                    const std::string& estimator, const Estimate& e, int n_dirs) {
    CsvRow row;
    row.body = body;
    row.functional = functional;
    row.lambda = lambda;
    row.estimator = estimator;
    row.value = e.value;
    row.std_error = e.std_error;
    row.n_samples = e.n_samples;
    row.n_dirs = n_dirs;
    row.seed = e.seed;
    row.flags = flags_to_string(e.flags);
    return row;
}

std::vector<double> parse_lambda_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        grid.push_back(std::stod(item));
    }
    return grid;
}

std::string canonical_config(std::initializer_list<std::pair<std::string, std::string>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ' ';
        out += k + "=" + v;
    }
    return out;
}

int run_width_diff(const CommonOptions& common, double lambda, int n_lattices, int n_dirs, int n_t,
                   const std::string& estimator) {
    const Body body = make_body(common.body);
    const EstimatorKind kind = estimator_kind_from_string(estimator);
    RowSink sink;
    sink.out_path = common.out;
    sink.seed = common.seed;
    sink.threads = common.effective_threads();
    sink.canonical = canonical_config({{"cmd", "width-diff"},
                                       {"body", common.body},
                                       {"lambda", format_double(lambda)},
                                       {"n-lattices", std::to_string(n_lattices)},
                                       {"n-dirs", std::to_string(n_dirs)},
                                       {"n-t", std::to_string(n_t)},
                                       {"estimator", estimator},
                                       {"seed", std::to_string(common.seed)}});
    const SeededStream s{common.seed, 0};
    const Estimate est =
        kind == EstimatorKind::direct
            ? width_difference_direct(body, lambda, n_lattices, n_dirs, s, sink.threads)
            : width_difference_cap_integral(body, lambda, n_lattices, n_dirs, n_t, s, sink.threads);
    sink.emit(estimate_row(common.body, "width-diff", lambda, estimator, est, n_dirs));
    sink.finish();
    return 0;
}

int run_scaling(const CommonOptions& common, const std::string& grid_text,
                const std::string& functional, const std::string& estimator, int n_lattices,
                int n_dirs, int n_t, const std::string& svg_path) {
    StudyConfig config;
    config.body_spec = common.body;
    config.lambdas = parse_lambda_grid(grid_text);
    config.n_lattices = n_lattices;
    config.n_dirs = n_dirs;
    config.n_t = n_t;
    config.seed = common.seed;
    config.estimator = estimator_kind_from_string(estimator);
    config.functional = functional_from_string(functional);
    config.threads = common.effective_threads();
    config.validate();

    RowSink sink;
    sink.out_path = common.out;
    sink.seed = common.seed;
    sink.threads = config.threads;
    sink.canonical = canonical_config({{"cmd", "scaling"},
                                       {"body", common.body},
                                       {"lambda-grid", grid_text},
                                       {"functional", functional},
                                       {"estimator", estimator},
                                       {"n-lattices", std::to_string(n_lattices)},
                                       {"n-dirs", std::to_string(n_dirs)},
                                       {"n-t", std::to_string(n_t)},
                                       {"seed", std::to_string(common.seed)}});

    const ScalingResult result = run_scaling_study(config);
    for (const ScalingRow& row : result.rows)
        sink.emit(estimate_row(common.body, functional + "-diff", row.lambda, estimator,
                               row.estimate, n_dirs));
    std::ostringstream summary;
    if (result.fit.valid) {
        summary << "fit exponent=" << format_double(result.fit.slope)
                << " ci_lo=" << format_double(result.fit.ci_lo)
                << " ci_hi=" << format_double(result.fit.ci_hi)
                << " r_squared=" << format_double(result.fit.r_squared)
                << " n_used=" << result.fit.n_used;
    } else {
        summary << "fit invalid (fewer than 3 signal-dominated rows)";
    }
    sink.comment(summary.str());

    if (!svg_path.empty()) {
        // reference slope: the regime the study targets
        const int d = make_body(common.body).dim();
        const double ref = config.functional == Functional::width
                               ? -static_cast<double>(d - 1) / static_cast<double>(d + 1)
                               : 2.0 / 3.0;
        write_loglog_svg(svg_path, result, ref);
    }
    sink.finish();
    return 0;
}

int run_cap_prob(const CommonOptions& common, double lambda, double t, double angle,
                 int n_lattices) {
    const Body body = make_body(common.body).scaled(lambda);
    if (body.dim() != 2)
        throw std::invalid_argument("cap-prob: --angle parameterizes 2D bodies only");
    RowSink sink;
    sink.out_path = common.out;
    sink.seed = common.seed;
    sink.threads = common.effective_threads();
    sink.canonical = canonical_config({{"cmd", "cap-prob"},
                                       {"body", common.body},
                                       {"lambda", format_double(lambda)},
                                       {"t", format_double(t)},
                                       {"angle", format_double(angle)},
                                       {"n-lattices", std::to_string(n_lattices)},
                                       {"seed", std::to_string(common.seed)}});
    const Estimate est =
        cap_avoidance_probability(body, t, UnitVector::from_angle(angle), n_lattices,
                                  SeededStream{common.seed, 0}, sink.threads);
    sink.emit(estimate_row(common.body, "cap-avoidance", lambda, "mc", est, 1));
    sink.finish();
    return 0;
}

int run_tau(const CommonOptions& common, int grid_size) {
    const Body body = make_body(common.body);
    const FlatnessConstants fc = flatness_constants(body, grid_size);
    RowSink sink;
    sink.out_path = common.out;
    sink.seed = common.seed;
    sink.threads = 1;
    sink.canonical = canonical_config(
        {{"cmd", "tau"}, {"body", common.body}, {"grid-size", std::to_string(grid_size)}});

    Estimate e;
    e.seed = common.seed;
    e.value = fc.tau_grid_max;
    sink.emit(estimate_row(common.body, "tau-raw", 1.0, "grid", e, grid_size));
    e.value = fc.tau;
    sink.emit(estimate_row(common.body, "tau-adjusted", 1.0, "grid", e, grid_size));
    e.value = fc.lambda_grid_max;
    sink.emit(estimate_row(common.body, "lambda-raw", 1.0, "grid", e, grid_size));
    e.value = fc.lambda_min;
    sink.emit(estimate_row(common.body, "lambda-adjusted", 1.0, "grid", e, grid_size));
    sink.finish();
    return 0;
}

int run_gamma(const CommonOptions& common, int n_lattices, int n_dirs_per_cone, int n_t) {
    const Body body = make_body(common.body);
    RowSink sink;
    sink.out_path = common.out;
    sink.seed = common.seed;
    sink.threads = common.effective_threads();
    sink.canonical = canonical_config({{"cmd", "gamma"},
                                       {"body", common.body},
                                       {"n-lattices", std::to_string(n_lattices)},
                                       {"n-dirs-per-cone", std::to_string(n_dirs_per_cone)},
                                       {"n-t", std::to_string(n_t)},
                                       {"seed", std::to_string(common.seed)}});
    const Estimate est = gamma_polytope(body, n_lattices, n_dirs_per_cone, n_t,
                                        SeededStream{common.seed, 0}, sink.threads);
    sink.emit(estimate_row(common.body, "gamma", 1.0, "cone-integral", est, n_dirs_per_cone));
    sink.finish();
    return 0;
}

int run_count_check(const CommonOptions& common, int n_lattices) {
    const Body body = make_body(common.body);
    RowSink sink;
    sink.out_path = common.out;
    sink.seed = common.seed;
    sink.threads = common.effective_threads();
    sink.canonical = canonical_config({{"cmd", "count-check"},
                                       {"body", common.body},
                                       {"n-lattices", std::to_string(n_lattices)},
                                       {"seed", std::to_string(common.seed)}});
    const Estimate est =
        expected_lattice_count(body, n_lattices, SeededStream{common.seed, 0}, sink.threads);
    sink.emit(estimate_row(common.body, "lattice-count", 1.0, "mc", est, 0));
    std::ostringstream target;
    target << "target volume=" << format_double(body.volume());
    sink.comment(target.str());
    sink.finish();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo experiments on randomized integer convex hulls"};
    app.set_version_flag("--version", std::string("latticehull ") + kToolVersion);
    app.require_subcommand(1);

    CommonOptions wd_common;
    double wd_lambda = 8.0;
    int wd_n = 1000, wd_dirs = 1024, wd_nt = 64;
    std::string wd_estimator = "direct";
    CLI::App* wd = app.add_subcommand("width-diff", "mean width difference at one lambda");
    add_common(wd, wd_common);
    wd->add_option("--lambda", wd_lambda, "scale factor")->check(CLI::PositiveNumber);
    wd->add_option("--n-lattices", wd_n, "lattice samples")->check(CLI::PositiveNumber);
    wd->add_option("--n-dirs", wd_dirs, "direction-grid size")->check(CLI::PositiveNumber);
    wd->add_option("--n-t", wd_nt, "depth nodes (cap-integral)")->check(CLI::PositiveNumber);
    wd->add_option("--estimator", wd_estimator, "direct | cap-integral")
        ->check(CLI::IsMember({"direct", "cap-integral"}));

    CommonOptions sc_common;
    std::string sc_grid = "8,16,32,64";
    std::string sc_functional = "width";
    std::string sc_estimator = "direct";
    std::string sc_svg;
    int sc_n = 1000, sc_dirs = 1024, sc_nt = 64;
    CLI::App* sc = app.add_subcommand("scaling", "lambda-grid study with log-log exponent fit");
    add_common(sc, sc_common);
    sc->add_option("--lambda-grid", sc_grid, "comma-separated, strictly increasing");
    sc->add_option("--functional", sc_functional, "width | area")
        ->check(CLI::IsMember({"width", "area"}));
    sc->add_option("--estimator", sc_estimator, "direct | cap-integral")
        ->check(CLI::IsMember({"direct", "cap-integral"}));
    sc->add_option("--n-lattices", sc_n, "lattice samples per lambda")->check(CLI::PositiveNumber);
    sc->add_option("--n-dirs", sc_dirs, "direction-grid size")->check(CLI::PositiveNumber);
    sc->add_option("--n-t", sc_nt, "depth nodes (cap-integral)")->check(CLI::PositiveNumber);
    sc->add_option("--svg", sc_svg, "write a log-log plot to this path");

    CommonOptions cp_common;
    double cp_lambda = 1.0, cp_t = 0.5, cp_angle = 0.0;
    int cp_n = 1000;
    CLI::App* cp = app.add_subcommand("cap-prob", "cap-avoidance probability");
    add_common(cp, cp_common);
    cp->add_option("--lambda", cp_lambda, "scale factor")->check(CLI::PositiveNumber);
    cp->add_option("--t", cp_t, "cap depth")->check(CLI::NonNegativeNumber);
    cp->add_option("--angle", cp_angle, "cap direction angle (radians)");
    cp->add_option("--n-lattices", cp_n, "lattice samples")->check(CLI::PositiveNumber);

    CommonOptions tau_common;
    int tau_grid = 2048;
    CLI::App* tau = app.add_subcommand("tau", "flatness constants tau(K) and lambda(K)");
    add_common(tau, tau_common);
    tau->add_option("--grid-size", tau_grid, "direction-grid size (>= 64)");

    CommonOptions gm_common;
    int gm_n = 1000, gm_dirs = 48, gm_nt = 64;
    CLI::App* gm = app.add_subcommand("gamma", "polytope limit constant via vertex cones");
    add_common(gm, gm_common);
    gm->add_option("--n-lattices", gm_n, "lattice samples")->check(CLI::PositiveNumber);
    gm->add_option("--n-dirs-per-cone", gm_dirs, "direction nodes per normal cone")
        ->check(CLI::PositiveNumber);
    gm->add_option("--n-t", gm_nt, "depth nodes")->check(CLI::PositiveNumber);

    CommonOptions cc_common;
    int cc_n = 20000;
    CLI::App* cc = app.add_subcommand("count-check", "expected lattice count vs volume");
    add_common(cc, cc_common);
    cc->add_option("--n-lattices", cc_n, "lattice samples")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (wd->parsed())
            return run_width_diff(wd_common, wd_lambda, wd_n, wd_dirs, wd_nt, wd_estimator);
        if (sc->parsed())
            return run_scaling(sc_common, sc_grid, sc_functional, sc_estimator, sc_n, sc_dirs,
                               sc_nt, sc_svg);
        if (cp->parsed()) return run_cap_prob(cp_common, cp_lambda, cp_t, cp_angle, cp_n);
        if (tau->parsed()) return run_tau(tau_common, tau_grid);
        if (gm->parsed()) return run_gamma(gm_common, gm_n, gm_dirs, gm_nt);
        if (cc->parsed()) return run_count_check(cc_common, cc_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
