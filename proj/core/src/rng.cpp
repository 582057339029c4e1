#include "quvol/rng.hpp"

#include "quvol/normal.hpp"

namespace quvol {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline std::uint32_t lo32(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
inline std::uint32_t hi32(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        const std::uint64_t p0 = std::uint64_t{kMul0} * counter[0];
        const std::uint64_t p1 = std::uint64_t{kMul1} * counter[2];
        counter = {hi32(p1) ^ counter[1] ^ key[0], lo32(p1),
                   hi32(p0) ^ counter[3] ^ key[1], lo32(p0)};
    }
    return counter;
}

PathRng::PathRng(std::uint64_t seed, std::uint64_t path_index)
    : key_{lo32(seed), hi32(seed)}, path_index_(path_index) {}

std::uint64_t PathRng::next_u64() {
    const std::array<std::uint32_t, 4> counter = {lo32(block_), hi32(block_),
                                                  lo32(path_index_), hi32(path_index_)};
    ++block_;
    const std::array<std::uint32_t, 4> out = philox4x32(counter, key_);
    return (std::uint64_t{out[0]} << 32) | out[1];
}

double PathRng::uniform01() {
    // Keep the top 53 bits and centre within the bin: the result lies in
    // (0,1) strictly, so it is always a valid quantile.
    const std::uint64_t bits = next_u64() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double PathRng::normal() {
    return inverse_norm_cdf(uniform01());
}

} // namespace quvol
