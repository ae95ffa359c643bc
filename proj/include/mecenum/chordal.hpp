#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mecenum/graph.hpp"

namespace mecenum {

enum class TieBreak { Deterministic, Seeded };

/// Maximum Cardinality Search over an undirected graph; restarts in each
/// connected component. Deterministic mode always takes the lowest id from
/// the highest-label set; seeded mode samples uniformly from it.
/// Throws std::invalid_argument if g has a directed edge.
std::vector<Vertex> mcs(const Pdag& g, TieBreak tie_break = TieBreak::Deterministic,
                        std::uint64_t seed = 0);

/// MCS chordality criterion: the orientation induced by an MCS order is an
/// AMO iff the graph is chordal.
bool is_chordal(const Pdag& g);

/// True iff d is an acyclic orientation of g without v-structures.
/// Throws std::invalid_argument when skeleton(d) != g.
bool is_amo(const Pdag& g, const Pdag& d);

/// One DAG of the MEC represented by CPDAG g: one MCS per undirected
/// component, orient by the visit order. Throws NotChordalError when an
/// undirected component is not chordal.
Pdag consistent_extension_cpdag(const Pdag& g);

}  // namespace mecenum
