#pragma once

#include <span>
#include <string>
#include <vector>

#include "latticehull/estimate.hpp"
#include "latticehull/geometry.hpp"
#include "latticehull/rng.hpp"

namespace lh {

enum class EstimatorKind { direct, cap_integral };
enum class Functional { width, area };

std::string to_string(EstimatorKind k);
std::string to_string(Functional f);
EstimatorKind estimator_kind_from_string(const std::string& s);
Functional functional_from_string(const std::string& s);

/// One lambda-grid study: which body, which functional, which estimator,
/// and the Monte Carlo budget.
struct StudyConfig {
    std::string body_spec = "disk";
    std::vector<double> lambdas;  // strictly increasing, >= 3 entries
    int n_lattices = 200;         // >= 200
    int n_dirs = 1024;
    int n_t = 64;                 // cap-integral depth nodes
    std::uint64_t seed = 0;
    EstimatorKind estimator = EstimatorKind::direct;
    Functional functional = Functional::width;
    int threads = 1;

    void validate() const;  // throws std::invalid_argument
};

/// Weighted least-squares fit of ln(value) against ln(lambda).
struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double ci_lo = 0.0;   // 95% interval for the slope
    double ci_hi = 0.0;
    double r_squared = 0.0;
    int n_used = 0;       // signal-dominated rows that entered the fit
    bool valid = false;
};

struct ScalingRow {
    double lambda = 0.0;
    Estimate estimate;
};

struct ScalingResult {
    std::string body_spec;
    Functional functional = Functional::width;
    EstimatorKind estimator = EstimatorKind::direct;
    std::vector<ScalingRow> rows;
    FitResult fit;
};

/// Log-log fit over the signal-dominated rows (value > 4 * std_error).
/// Weights are 1/se^2 on the log scale (delta method); the slope interval
/// uses the t quantile with n-2 degrees of freedom. Falls back to an
/// unweighted fit when rows carry no error estimate. Invalid with fewer
/// than 3 usable rows.
FitResult fit_exponent(std::span<const ScalingRow> rows);

/// One estimate per lambda plus the fitted exponent.
ScalingResult run_scaling_study(const StudyConfig& config);

/// Convergence diagnostic for the polytope limit: the width-difference
/// sequence, its successive differences, and the vertex-cone estimate of
/// the limit constant.
struct ConvergenceReport {
    std::string body_spec;
    std::vector<ScalingRow> rows;
    std::vector<double> successive_diffs;
    Estimate gamma;
    double tau_adjusted = 0.0;
    bool last_two_agree = false;
    bool diffs_nonincreasing = false;
    bool within_tau_bound = false;
    bool all_positive = false;
    bool converged = false;
};

ConvergenceReport run_polytope_convergence(const Body& polytope, const StudyConfig& config);

/// Rescaled lower-bound check: lambda^{(d-1)/(d+1)} * width difference must
/// stay above a positive floor. The body is normalized to sit inside the
/// unit ball first.
struct LowerBoundReport {
    std::string body_spec;
    double normalization = 1.0;  // scale factor applied to fit K into B^d
    double exponent = 0.0;       // (d-1)/(d+1)
    std::vector<ScalingRow> rows;        // raw width differences
    std::vector<double> rescaled;        // lambda^exp * value
    std::vector<double> rescaled_err;    // lambda^exp * std_error
    double floor = 0.0;                  // min over rows of rescaled - 4*err
    bool positive = false;
};

LowerBoundReport run_general_lower_bound_check(const Body& body, const StudyConfig& config);

// JSON round-trip for all reports (lossless: doubles survive exactly).
std::string to_json(const ScalingResult& r);
std::string to_json(const ConvergenceReport& r);
std::string to_json(const LowerBoundReport& r);
ScalingResult scaling_result_from_json(const std::string& text);
ConvergenceReport convergence_report_from_json(const std::string& text);
LowerBoundReport lower_bound_report_from_json(const std::string& text);

}  // namespace lh
