#pragma once

#include <cstdint>
#include <vector>

#include "mecenum/graph.hpp"

namespace mecenum {
namespace oracle {

/// Orientation-space guard: at most 2^25 candidate orientations.
inline constexpr int kMaxUndirectedEdges = 25;

struct ValidationReport {
  std::uint64_t expected_count = 0;
  std::uint64_t actual_count = 0;
  std::vector<Pdag> duplicates;
  std::vector<Pdag> missing;
  std::vector<Pdag> extra;
  bool ok = false;
};

/// Ground truth by exhaustion: every orientation of the undirected edges,
/// kept iff acyclic with unchanged v-structures. For PDAGs this is exactly
/// the consistent-extension set. Throws TooLargeError past the guard.
std::vector<Pdag> brute_force_extensions(const Pdag& g);

/// |MEC| of a DAG via its CPDAG and the brute-force oracle.
std::uint64_t mec_size(const Pdag& d);

/// Multiset comparison of an enumeration's outputs against the oracle.
ValidationReport validate_enumeration(const Pdag& g, const std::vector<Pdag>& outputs);

}  // namespace oracle
}  // namespace mecenum
