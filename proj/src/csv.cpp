#include "latticehull/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace lh {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_csv_row(const CsvRow& row) {
    std::string out;
    out += row.body;
    out += ',';
    out += row.functional;
    out += ',';
    out += format_double(row.lambda);
    out += ',';
    out += row.estimator;
    out += ',';
    out += format_double(row.value);
    out += ',';
    out += format_double(row.std_error);
    out += ',';
    out += std::to_string(row.n_samples);
    out += ',';
    out += std::to_string(row.n_dirs);
    out += ',';
    out += std::to_string(row.seed);
    out += ',';
    out += row.flags;
    return out;
}

namespace {

std::ofstream open_append(const std::string& path, bool& fresh) {
    fresh = !std::filesystem::exists(path);
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

}  // namespace

void append_csv_row(const std::string& path, const CsvRow& row) {
    bool fresh = false;
    std::ofstream out = open_append(path, fresh);
    if (fresh) out << kCsvHeader << '\n';
    out << format_csv_row(row) << '\n';
}

void append_csv_comment(const std::string& path, const std::string& text) {
    bool fresh = false;
    std::ofstream out = open_append(path, fresh);
    if (fresh) out << kCsvHeader << '\n';
    out << "# " << text << '\n';
}

}  // namespace lh
