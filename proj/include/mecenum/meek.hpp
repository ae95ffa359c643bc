#pragma once

#include <optional>
#include <vector>

#include "mecenum/graph.hpp"

namespace mecenum {

/// Induced subgraph over one undirected component of an MPDAG; may contain
/// directed edges between its vertices.
struct Bucket {
  std::vector<Vertex> vertices;    // new -> old, ascending
  Pdag graph;                      // induced subgraph in bucket-local ids
  std::vector<Vertex> old_to_new;  // -1 outside the bucket
};

/// Fixed point of Meek rules R1-R4, applied in a round-robin sweep that
/// restarts after every orientation. The skeleton is unchanged, directed
/// edges only grow. Throws std::invalid_argument on a directed cycle.
Pdag apply_meek_rules(const Pdag& g);

/// One Bucket per undirected component with at least one undirected edge;
/// singleton components are omitted.
std::vector<Bucket> buckets(const Pdag& g);

/// A Meek-closed graph is extendable iff the skeleton of every bucket is
/// chordal.
bool is_extendable(const Pdag& g);

/// Meek closure of a PDAG, or nullopt when the closure has no consistent
/// extension (non-chordal bucket, or the closure breaks the input's
/// v-structures/acyclicity).
std::optional<Pdag> maximal_orientation(const Pdag& g);

/// A consistent extension of an MPDAG: per-bucket modified MCS restricted
/// to highest-label vertices without unvisited parents. Throws
/// NotExtendableError when none exists.
Pdag consistent_extension_mpdag(const Pdag& g);

}  // namespace mecenum
