#include "railyard/io.hpp"

#include <fstream>
#include <json.hpp>

namespace railyard {

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["spec_hash"] = spec_hash;
    j["seed"] = seed;
    j["tool_version"] = tool_version;
    j["rng_algorithm"] = rng_algorithm;
    j["timestamp"] = timestamp;
    return j.dump(2);
}

std::string content_hash(const std::string& canonical) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

void export_table(const std::string& text, const std::string& path,
                  const std::string& manifest_json) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("export_table: cannot open " + path);
    out << text;
    if (!out) throw std::runtime_error("export_table: write failed for " + path);
    if (!manifest_json.empty()) {
        std::ofstream m(path + ".manifest.json", std::ios::binary);
        if (!m) throw std::runtime_error("export_table: cannot open manifest for " + path);
        m << manifest_json;
    }
}

std::string tool_version() { return "railyard 0.1.0"; }

}  // namespace railyard
