#pragma once

#include <cstdint>
#include <optional>

#include "nsplit/multigraph.hpp"
#include "nsplit/necklace.hpp"

namespace nsplit {

/// SplitMix64. Fixed algorithm so fixtures reproduce bit-for-bit across
/// platforms and toolchains.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw from [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// `colors` colors with odd sizes up to `max_points` (odd, >= 1); the
/// coordinates 1..total are dealt to the colors by a seeded shuffle. Same
/// seed, same necklace.
Necklace random_necklace(int colors, int max_points, std::uint64_t seed);

/// Walks a Eulerian path through `g` (Hierholzer, seeded edge choice),
/// places one point per visited vertex at consecutive coordinates, then
/// pads any even-count color with one extra point adjacent to an existing
/// occurrence. The walk graph of the result equals `g`.
Necklace necklace_from_multigraph(const Multigraph& g, std::uint64_t seed);

/// Rejection-samples random necklaces until sep_by_definition fits below
/// colors - 1 + ell, or the attempt budget runs out.
std::optional<Necklace> random_separable_necklace(int colors, int ell, std::uint64_t seed,
                                                  int budget, int max_points = 5);

}  // namespace nsplit
