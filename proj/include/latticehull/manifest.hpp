#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace lh {

inline constexpr const char* kToolVersion = "0.1.0";

/// Reproducibility sidecar written next to every CSV output: the canonical
/// config string and its hash, the seed, the runtime, and flag counters.
/// Re-running the command recorded here reproduces the CSV byte for byte in
/// serial mode.
struct RunManifest {
    std::string tool_version = kToolVersion;
    std::string command;       // canonical config string
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
    int threads = 1;
    double duration_seconds = 0.0;
    std::map<std::string, std::int64_t> flags;
};

std::uint64_t fnv1a64(std::string_view text);

std::string to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);

/// Writes <csv_path>.manifest.json.
void write_manifest(const std::string& csv_path, const RunManifest& m);

}  // namespace lh
