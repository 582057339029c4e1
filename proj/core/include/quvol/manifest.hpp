#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quvol/config_file.hpp"

namespace quvol {

/// Digest record for one file a run wrote.
struct ManifestEntry {
    std::string file;
    std::uint64_t bytes = 0;
    std::string sha256;
};

/// Provenance record written alongside every run's outputs: which command
/// ran, with which settings, producing which files.  The digest list must
/// cover every file the run wrote (the manifest itself excepted).
struct RunManifest {
    std::string command;
    std::string tool_version;
    RunSpec spec;
    double wall_seconds = 0.0;
    std::vector<ManifestEntry> outputs;
};

/// Lowercase hex SHA-256 of a byte string / of a file's contents.
std::string sha256_hex(std::string_view bytes);
std::string sha256_hex_of_file(const std::string& path);

/// Entry for a file already on disk (size + digest computed here).
ManifestEntry make_manifest_entry(const std::string& name, const std::string& path);

/// Pretty-printed JSON form, config echoed under the same keys the config
/// file uses.
std::string manifest_json(const RunManifest& manifest);

} // namespace quvol
