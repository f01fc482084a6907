#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace railyard {

/// Reproducibility sidecar: identical manifests imply bit-identical outputs
/// (timestamps live only in the manifest itself).
struct RunManifest {
    std::string command;
    std::string spec_hash;
    uint64_t seed = 0;
    std::string tool_version;
    std::string rng_algorithm;
    std::string timestamp;
    std::string to_json() const;
};

/// FNV-1a over the canonical JSON of a spec.
std::string content_hash(const std::string& canonical);

/// Writes text to path; throws on failure. When manifest is nonempty, also
/// writes path + ".manifest.json".
void export_table(const std::string& text, const std::string& path,
                  const std::string& manifest_json = "");

std::string tool_version();

}  // namespace railyard
