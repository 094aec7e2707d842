#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace lh {

/// A Monte Carlo estimate: value, standard error, sample count, the seed it
/// was produced from, and a counter map for notable events (empty
/// intersections, clamped caps, ...). Exact results carry std_error == 0 and
/// an "exact" flag.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
    std::map<std::string, std::int64_t> flags;

    double variance() const { return std_error * std_error; }
};

/// Mean and standard error (sample sd / sqrt(n)) of i.i.d. samples.
/// Samples are reduced in index order, so parallel runs that fill the buffer
/// by index reproduce the serial result bit for bit.
inline Estimate estimate_from_samples(std::span<const double> samples, std::uint64_t seed) {
    Estimate e;
    e.seed = seed;
    e.n_samples = static_cast<std::int64_t>(samples.size());
    if (samples.empty()) return e;
    double sum = 0.0;
    for (double s : samples) sum += s;
    const double mean = sum / static_cast<double>(samples.size());
    double ss = 0.0;
    for (double s : samples) {
        const double d = s - mean;
        ss += d * d;
    }
    e.value = mean;
    if (samples.size() >= 2) {
        const double var = ss / static_cast<double>(samples.size() - 1);
        e.std_error = std::sqrt(var / static_cast<double>(samples.size()));
    }
    return e;
}

/// Serialize the flag counters as "key=value;key=value" (keys sorted by the
/// map ordering, so the rendering is stable).
inline std::string flags_to_string(const std::map<std::string, std::int64_t>& flags) {
    std::string out;
    for (const auto& [k, v] : flags) {
        if (!out.empty()) out += ';';
        out += k;
        out += '=';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace lh
