#include "latticehull/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "latticehull/bodyspec.hpp"
#include "latticehull/estimators.hpp"

namespace lh {

namespace {

// two-sided 95% Student t quantiles by degrees of freedom (1-based)
constexpr double kT95[] = {0.0,   12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365,
                           2.306, 2.262,  2.228, 2.201, 2.179, 2.160, 2.145, 2.131,
                           2.120, 2.110,  2.101, 2.093, 2.086, 2.080, 2.074, 2.069,
                           2.064, 2.060,  2.056, 2.052, 2.048, 2.045, 2.042};

double t_quantile_95(int dof) {
    if (dof < 1) return 0.0;
    if (dof <= 30) return kT95[dof];
    return 1.96;
}

// Streams for different lambda rows are spaced far apart so each row's
// per-lattice streams never collide.
constexpr std::uint64_t kRowStreamStride = 1ULL << 32;

}  // namespace

std::string to_string(EstimatorKind k) {
    return k == EstimatorKind::direct ? "direct" : "cap-integral";
}

std::string to_string(Functional f) { return f == Functional::width ? "width" : "area"; }

EstimatorKind estimator_kind_from_string(const std::string& s) {
    if (s == "direct") return EstimatorKind::direct;
    if (s == "cap-integral") return EstimatorKind::cap_integral;
    throw std::invalid_argument("unknown estimator: " + s);
}

Functional functional_from_string(const std::string& s) {
    if (s == "width") return Functional::width;
    if (s == "area") return Functional::area;
    throw std::invalid_argument("unknown functional: " + s);
}

void StudyConfig::validate() const {
    if (lambdas.size() < 3) throw std::invalid_argument("study needs at least 3 lambda values");
    for (std::size_t i = 1; i < lambdas.size(); ++i)
        if (!(lambdas[i] > lambdas[i - 1]))
            throw std::invalid_argument("lambda grid must be strictly increasing");
    if (n_lattices < 200) throw std::invalid_argument("study needs n_lattices >= 200");
    if (n_dirs < 16) throw std::invalid_argument("study needs n_dirs >= 16");
    if (functional == Functional::area && estimator == EstimatorKind::cap_integral)
        throw std::invalid_argument("the cap-integral estimator measures width, not area");
}

FitResult fit_exponent(std::span<const ScalingRow> rows) {
    FitResult fit;
    std::vector<double> x, y, se_log;
    bool have_errors = true;
    for (const ScalingRow& row : rows) {
        const Estimate& e = row.estimate;
        if (!(e.value > 0.0)) continue;
        if (!(e.value > 4.0 * e.std_error)) continue;  // noise-dominated row
        x.push_back(std::log(row.lambda));
        y.push_back(std::log(e.value));
        if (e.std_error > 0.0)
            se_log.push_back(e.std_error / e.value);
        else
            have_errors = false;
    }
    const int n = static_cast<int>(x.size());
    fit.n_used = n;
    if (n < 3) return fit;  // invalid

    std::vector<double> w(static_cast<std::size_t>(n), 1.0);
    if (have_errors && se_log.size() == x.size())
        for (int i = 0; i < n; ++i) w[i] = 1.0 / (se_log[i] * se_log[i]);

    double sw = 0.0, swx = 0.0, swy = 0.0;
    for (int i = 0; i < n; ++i) {
        sw += w[i];
        swx += w[i] * x[i];
        swy += w[i] * y[i];
    }
    const double xbar = swx / sw;
    const double ybar = swy / sw;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dx = x[i] - xbar;
        const double dy = y[i] - ybar;
        sxx += w[i] * dx * dx;
        sxy += w[i] * dx * dy;
        syy += w[i] * dy * dy;
    }
    if (!(sxx > 0.0)) return fit;

    fit.slope = sxy / sxx;
    fit.intercept = ybar - fit.slope * xbar;

    double chi2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double resid = y[i] - (fit.intercept + fit.slope * x[i]);
        chi2 += w[i] * resid * resid;
    }

    double slope_var;
    if (have_errors) {
        // weights are inverse variances; inflate when the scatter exceeds them
        const double inflation = std::max(1.0, chi2 / static_cast<double>(n - 2));
        slope_var = inflation / sxx;
    } else {
        slope_var = (chi2 / static_cast<double>(n - 2)) / sxx;
    }
    const double half = t_quantile_95(n - 2) * std::sqrt(std::max(0.0, slope_var));
    fit.ci_lo = fit.slope - half;
    fit.ci_hi = fit.slope + half;
    fit.r_squared = syy > 0.0 ? 1.0 - chi2 / syy : 1.0;
    fit.valid = true;
    return fit;
}

namespace {

Estimate run_row(const Body& body, double lambda, const StudyConfig& c, std::uint64_t row_index) {
    const SeededStream s{c.seed, row_index * kRowStreamStride};
    if (c.functional == Functional::area)
        return area_difference(body, lambda, c.n_lattices, s, c.threads);
    if (c.estimator == EstimatorKind::cap_integral)
        return width_difference_cap_integral(body, lambda, c.n_lattices, c.n_dirs, c.n_t, s,
                                             c.threads);
    return width_difference_direct(body, lambda, c.n_lattices, c.n_dirs, s, c.threads);
}

}  // namespace

ScalingResult run_scaling_study(const StudyConfig& config) {
    config.validate();
    const Body body = make_body(config.body_spec);
    ScalingResult result;
    result.body_spec = config.body_spec;
    result.functional = config.functional;
    result.estimator = config.estimator;
    for (std::size_t i = 0; i < config.lambdas.size(); ++i) {
        ScalingRow row;
        row.lambda = config.lambdas[i];
        row.estimate = run_row(body, row.lambda, config, static_cast<std::uint64_t>(i));
        result.rows.push_back(std::move(row));
    }
    result.fit = fit_exponent(result.rows);
    return result;
}

ConvergenceReport run_polytope_convergence(const Body& polytope, const StudyConfig& config) {
    if (config.lambdas.size() < 4)
        throw std::invalid_argument("polytope convergence needs at least 4 lambda values");
    if (polytope.kind() != Body::Kind::polytope)
        throw std::invalid_argument("polytope convergence needs a polytope");

    ConvergenceReport report;
    report.body_spec = config.body_spec;
    const FlatnessConstants fc = flatness_constants(polytope);
    report.tau_adjusted = fc.tau;

    for (std::size_t i = 0; i < config.lambdas.size(); ++i) {
        ScalingRow row;
        row.lambda = config.lambdas[i];
        row.estimate = run_row(polytope, row.lambda, config, static_cast<std::uint64_t>(i));
        report.rows.push_back(std::move(row));
    }
    for (std::size_t i = 1; i < report.rows.size(); ++i)
        report.successive_diffs.push_back(report.rows[i].estimate.value -
                                          report.rows[i - 1].estimate.value);

    // the vertex-cone estimate reuses the budget on a far-away stream block
    report.gamma = gamma_polytope(polytope, config.n_lattices, 48, config.n_t,
                                  SeededStream{config.seed, 1000 * kRowStreamStride}, config.threads);

    const auto& rows = report.rows;
    const Estimate& last = rows[rows.size() - 1].estimate;
    const Estimate& prev = rows[rows.size() - 2].estimate;
    const double band = 4.0 * std::sqrt(last.variance() + prev.variance());
    report.last_two_agree = std::abs(last.value - prev.value) <= band;

    report.diffs_nonincreasing = true;
    for (std::size_t i = 1; i < report.successive_diffs.size(); ++i) {
        const double tol = 4.0 * std::sqrt(rows[i - 1].estimate.variance() +
                                           2.0 * rows[i].estimate.variance() +
                                           rows[i + 1].estimate.variance());
        if (std::abs(report.successive_diffs[i]) > std::abs(report.successive_diffs[i - 1]) + tol)
            report.diffs_nonincreasing = false;
    }

    report.all_positive = true;
    report.within_tau_bound = true;
    for (const ScalingRow& row : rows) {
        if (!(row.estimate.value > 0.0)) report.all_positive = false;
        if (row.estimate.value > 2.0 * fc.tau + 4.0 * row.estimate.std_error)
            report.within_tau_bound = false;
    }
    report.converged = report.last_two_agree && report.diffs_nonincreasing;
    return report;
}

LowerBoundReport run_general_lower_bound_check(const Body& body, const StudyConfig& config) {
    LowerBoundReport report;
    report.body_spec = config.body_spec;
    const int d = body.dim();
    report.exponent = static_cast<double>(d - 1) / static_cast<double>(d + 1);

    // normalize into the unit ball, centered at the inball center
    const Body centered = body.translated(-body.inball_center());
    report.normalization = 1.0 / centered.circumradius();
    const Body normalized = centered.scaled(report.normalization);

    for (std::size_t i = 0; i < config.lambdas.size(); ++i) {
        ScalingRow row;
        row.lambda = config.lambdas[i];
        row.estimate = run_row(normalized, row.lambda, config, static_cast<std::uint64_t>(i));
        const double factor = std::pow(row.lambda, report.exponent);
        report.rescaled.push_back(factor * row.estimate.value);
        report.rescaled_err.push_back(factor * row.estimate.std_error);
        report.rows.push_back(std::move(row));
    }

    double floor = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < report.rescaled.size(); ++i)
        floor = std::min(floor, report.rescaled[i] - 4.0 * report.rescaled_err[i]);
    report.floor = floor;
    report.positive = floor > 0.0;
    return report;
}

// ---------------------------------------------------------------------------
// JSON serialization

namespace {

using nlohmann::json;

json estimate_to_json(const Estimate& e) {
    json j;
    j["value"] = e.value;
    j["std_error"] = e.std_error;
    j["n_samples"] = e.n_samples;
    j["seed"] = e.seed;
    j["flags"] = e.flags;
    return j;
}

Estimate estimate_from_json(const json& j) {
    Estimate e;
    e.value = j.at("value").get<double>();
    e.std_error = j.at("std_error").get<double>();
    e.n_samples = j.at("n_samples").get<std::int64_t>();
    e.seed = j.at("seed").get<std::uint64_t>();
    e.flags = j.at("flags").get<std::map<std::string, std::int64_t>>();
    return e;
}

json rows_to_json(const std::vector<ScalingRow>& rows) {
    json arr = json::array();
    for (const ScalingRow& r : rows)
        arr.push_back(json{{"lambda", r.lambda}, {"estimate", estimate_to_json(r.estimate)}});
    return arr;
}

std::vector<ScalingRow> rows_from_json(const json& arr) {
    std::vector<ScalingRow> rows;
    for (const json& j : arr) {
        ScalingRow r;
        r.lambda = j.at("lambda").get<double>();
        r.estimate = estimate_from_json(j.at("estimate"));
        rows.push_back(std::move(r));
    }
    return rows;
}

json fit_to_json(const FitResult& f) {
    return json{{"slope", f.slope},   {"intercept", f.intercept}, {"ci_lo", f.ci_lo},
                {"ci_hi", f.ci_hi},   {"r_squared", f.r_squared}, {"n_used", f.n_used},
                {"valid", f.valid}};
}

FitResult fit_from_json(const json& j) {
    FitResult f;
    f.slope = j.at("slope").get<double>();
    f.intercept = j.at("intercept").get<double>();
    f.ci_lo = j.at("ci_lo").get<double>();
    f.ci_hi = j.at("ci_hi").get<double>();
    f.r_squared = j.at("r_squared").get<double>();
    f.n_used = j.at("n_used").get<int>();
    f.valid = j.at("valid").get<bool>();
    return f;
}

}  // namespace

std::string to_json(const ScalingResult& r) {
    json j;
    j["body"] = r.body_spec;
    j["functional"] = to_string(r.functional);
    j["estimator"] = to_string(r.estimator);
    j["rows"] = rows_to_json(r.rows);
    j["fit"] = fit_to_json(r.fit);
    return j.dump(2);
}

ScalingResult scaling_result_from_json(const std::string& text) {
    const json j = json::parse(text);
    ScalingResult r;
    r.body_spec = j.at("body").get<std::string>();
    r.functional = functional_from_string(j.at("functional").get<std::string>());
    r.estimator = estimator_kind_from_string(j.at("estimator").get<std::string>());
    r.rows = rows_from_json(j.at("rows"));
    r.fit = fit_from_json(j.at("fit"));
    return r;
}

std::string to_json(const ConvergenceReport& r) {
    json j;
    j["body"] = r.body_spec;
    j["rows"] = rows_to_json(r.rows);
    j["successive_diffs"] = r.successive_diffs;
    j["gamma"] = estimate_to_json(r.gamma);
    j["tau_adjusted"] = r.tau_adjusted;
    j["last_two_agree"] = r.last_two_agree;
    j["diffs_nonincreasing"] = r.diffs_nonincreasing;
    j["within_tau_bound"] = r.within_tau_bound;
    j["all_positive"] = r.all_positive;
    j["converged"] = r.converged;
    return j.dump(2);
}

ConvergenceReport convergence_report_from_json(const std::string& text) {
    const json j = json::parse(text);
    ConvergenceReport r;
    r.body_spec = j.at("body").get<std::string>();
    r.rows = rows_from_json(j.at("rows"));
    r.successive_diffs = j.at("successive_diffs").get<std::vector<double>>();
    r.gamma = estimate_from_json(j.at("gamma"));
    r.tau_adjusted = j.at("tau_adjusted").get<double>();
    r.last_two_agree = j.at("last_two_agree").get<bool>();
    r.diffs_nonincreasing = j.at("diffs_nonincreasing").get<bool>();
    r.within_tau_bound = j.at("within_tau_bound").get<bool>();
    r.all_positive = j.at("all_positive").get<bool>();
    r.converged = j.at("converged").get<bool>();
    return r;
}

std::string to_json(const LowerBoundReport& r) {
    json j;
    j["body"] = r.body_spec;
    j["normalization"] = r.normalization;
    j["exponent"] = r.exponent;
    j["rows"] = rows_to_json(r.rows);
    j["rescaled"] = r.rescaled;
    j["rescaled_err"] = r.rescaled_err;
    j["floor"] = r.floor;
    j["positive"] = r.positive;
    return j.dump(2);
}

LowerBoundReport lower_bound_report_from_json(const std::string& text) {
    const json j = json::parse(text);
    LowerBoundReport r;
    r.body_spec = j.at("body").get<std::string>();
    r.normalization = j.at("normalization").get<double>();
    r.exponent = j.at("exponent").get<double>();
    r.rows = rows_from_json(j.at("rows"));
    r.rescaled = j.at("rescaled").get<std::vector<double>>();
    r.rescaled_err = j.at("rescaled_err").get<std::vector<double>>();
    r.floor = j.at("floor").get<double>();
    r.positive = j.at("positive").get<bool>();
    return r;
}

}  // namespace lh
