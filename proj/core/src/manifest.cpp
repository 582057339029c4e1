#include "quvol/manifest.hpp"

#include <openssl/evp.h>

#include <json.hpp>

#include "quvol/csv.hpp"
#include "quvol/errors.hpp"

namespace quvol {

std::string sha256_hex(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("sha256: digest computation failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0x0F]);
    }
    return out;
}

std::string sha256_hex_of_file(const std::string& path) {
    return sha256_hex(read_text_file(path));
}

ManifestEntry make_manifest_entry(const std::string& name, const std::string& path) {
    ManifestEntry entry;
    entry.file = name;
    const std::string contents = read_text_file(path);
    entry.bytes = contents.size();
    entry.sha256 = sha256_hex(contents);
    return entry;
}

std::string manifest_json(const RunManifest& manifest) {
    nlohmann::json config;
    config["regime"] = std::string(to_string(manifest.spec.sim.regime));
    config["K"] = manifest.spec.sim.k;
    config["sigma_lo"] = manifest.spec.sim.sigma_lo;
    config["sigma_hi"] = manifest.spec.sim.sigma_hi;
    config["nu"] = manifest.spec.sim.nu;
    config["dt"] = manifest.spec.sim.dt;
    config["n_steps"] = manifest.spec.sim.n_steps;
    config["n_paths"] = manifest.spec.sim.n_paths;
    config["epsilon"] = manifest.spec.sim.epsilon;
    config["seed"] = manifest.spec.sim.seed;
    config["record_vol_paths"] = manifest.spec.sim.record_vol_paths;
    config["x_nodes"] = manifest.spec.x_nodes;
    config["domain_halfwidth"] = manifest.spec.domain_halfwidth;

    nlohmann::json outputs = nlohmann::json::array();
    for (const ManifestEntry& e : manifest.outputs) {
        outputs.push_back({{"file", e.file}, {"bytes", e.bytes}, {"sha256", e.sha256}});
    }

    nlohmann::json root;
    root["command"] = manifest.command;
    root["version"] = manifest.tool_version;
    root["seed"] = manifest.spec.sim.seed;
    root["wall_seconds"] = manifest.wall_seconds;
    root["config"] = config;
    root["outputs"] = outputs;
    return root.dump(2) + "\n";
}

} // namespace quvol
