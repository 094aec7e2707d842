#include "latticehull/manifest.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace lh {

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

std::string to_json(const RunManifest& m) {
    nlohmann::json j;
    j["tool_version"] = m.tool_version;
    j["command"] = m.command;
    j["config_hash"] = m.config_hash;
    j["seed"] = m.seed;
    j["threads"] = m.threads;
    j["duration_seconds"] = m.duration_seconds;
    j["flags"] = m.flags;
    return j.dump(2);
}

RunManifest manifest_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    RunManifest m;
    m.tool_version = j.at("tool_version").get<std::string>();
    m.command = j.at("command").get<std::string>();
    m.config_hash = j.at("config_hash").get<std::uint64_t>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.threads = j.at("threads").get<int>();
    m.duration_seconds = j.at("duration_seconds").get<double>();
    m.flags = j.at("flags").get<std::map<std::string, std::int64_t>>();
    return m;
}

void write_manifest(const std::string& csv_path, const RunManifest& m) {
    const std::string path = csv_path + ".manifest.json";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open manifest file: " + path);
    out << to_json(m) << '\n';
}

}  // namespace lh
