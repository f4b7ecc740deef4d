#ifndef HOMKIT_VERIFY_HPP
#define HOMKIT_VERIFY_HPP

#include <cstdint>

#include "homkit/check.hpp"

namespace homkit {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Runs every randomized and exhaustive property family; one aggregated check per family.
Report verify_all(std::uint64_t seed = kDefaultSeed);

}  // namespace homkit

#endif  // HOMKIT_VERIFY_HPP
