#pragma once

#include <array>
#include <cstdint>

namespace quvol {

/// One application of the Philox-4x32 block cipher (10 rounds) to a
/// 128-bit counter under a 64-bit key.  The output is a deterministic
/// pseudo-random permutation of the counter, which makes it possible to
/// generate the random stream for any (path, draw) pair directly,
/// without sequential state.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based generator for a single simulated path.
///
/// Each path owns an independent stream addressed by (seed, path index).
/// Draws are produced by encrypting an incrementing block counter, so two
/// PathRng instances with the same (seed, path) yield identical sequences
/// regardless of which thread runs them or in what order paths execute.
class PathRng {
public:
    PathRng(std::uint64_t seed, std::uint64_t path_index);

    /// Uniform draw in the open interval (0, 1).
    double uniform01();

    /// Standard normal draw; consumes exactly one uniform.
    double normal();

    /// Number of 64-bit words consumed so far.
    std::uint64_t draws_consumed() const { return block_; }

private:
    std::uint64_t next_u64();

    std::array<std::uint32_t, 2> key_;
    std::uint64_t path_index_;
    std::uint64_t block_ = 0;
};

} // namespace quvol
