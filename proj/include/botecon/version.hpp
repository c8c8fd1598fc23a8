#pragma once

#include <cstdint>

namespace botecon {

inline constexpr const char* kToolVersion = "0.1.0";

// Used whenever the caller supplies no seed, so repeated runs of the same
// command line stay reproducible.
inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace botecon
