#pragma once

#include <cstdint>
#include <string>

#include "latticehull/estimate.hpp"

namespace lh {

/// One line of the stable CSV schema. Fields are never reordered within a
/// major version.
struct CsvRow {
    std::string body;
    std::string functional;
    double lambda = 1.0;
    std::string estimator;
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t n_samples = 0;
    std::int64_t n_dirs = 0;
    std::uint64_t seed = 0;
    std::string flags;
};

inline constexpr const char* kCsvHeader =
    "body,functional,lambda,estimator,value,std_error,n_samples,n_dirs,seed,flags";

/// Full-precision, locale-independent double rendering (%.17g), so a rerun
/// with the same seed reproduces the file byte for byte.
std::string format_double(double v);

std::string format_csv_row(const CsvRow& row);

/// Append a row, creating the file with the header when it does not exist.
void append_csv_row(const std::string& path, const CsvRow& row);

/// Append a comment line (prefixed with "# ").
void append_csv_comment(const std::string& path, const std::string& text);

}  // namespace lh
