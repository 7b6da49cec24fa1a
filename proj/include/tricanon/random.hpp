#pragma once

// Random canonical decompositions and round-trip trials.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tricanon/canon.hpp"

namespace tricanon {

using Rng = std::mt19937_64;

/// Seeded from TRICANON_SEED when set, else from `fallback`.
Rng make_rng(std::uint64_t fallback);

/// A valid summand of the relation with size at most max_size.
SummandDescriptor random_summand(Relation relation, std::size_t max_size, Rng& rng);
/// 1..max_count summands of total size at most max_total, sorted.
std::vector<SummandDescriptor> random_decomposition(Relation relation, Rng& rng, std::size_t max_total = 12,
                                                    std::size_t max_count = 4);
/// Nonsingular matrix with entries in {-2..2} + {-2..2}i (real entries when `complex` is false).
GMatrix random_nonsingular(std::size_t n, Rng& rng, bool complex = true);

struct RoundTripResult {
  bool ok = false;
  std::vector<SummandDescriptor> expected;
  std::vector<SummandDescriptor> actual;
  std::string error;
};

/// Canonicalizes the transformed materialization of `summands` under S and
/// compares with `summands` (modulo undetermined signs).
RoundTripResult round_trip(Relation relation, const std::vector<SummandDescriptor>& summands, const GMatrix& s);

}  // namespace tricanon
