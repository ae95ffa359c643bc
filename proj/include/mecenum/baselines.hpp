#pragma once

#include <cstdint>
#include <vector>

#include "mecenum/enumerate.hpp"
#include "mecenum/graph.hpp"

namespace mecenum {

struct CoveredEdge {
  Vertex x, y;  // x -> y with Pa(x) + {x} = Pa(y)
  bool operator==(const CoveredEdge&) const = default;
};

/// Directed edges x -> y of a DAG with Pa(x) u {x} = Pa(y), ascending.
/// Throws std::invalid_argument if d is not a DAG.
std::vector<CoveredEdge> covered_edges(const Pdag& d);

/// Same skeleton and same v-structures. Throws on cyclic input.
bool markov_equivalent(const Pdag& d1, const Pdag& d2);

/// Recursive split on an undirected edge, Meek closure at every step.
/// Accepts CPDAGs, MPDAGs and PDAGs; returns 0 when not extendable.
std::uint64_t meek_enum(const Pdag& g, const EnumerationSink& sink);

/// DFS over the covered-edge reversal graph with a visited-set, starting
/// from one consistent extension. Edges directed in the Meek closure stay
/// fixed. Returns 0 when not extendable.
std::uint64_t chickering_enum(const Pdag& g, const EnumerationSink& sink);

/// Same traversal as chickering_enum, but even-depth nodes are output on
/// discovery and odd-depth nodes on completion, which bounds the SHD of
/// consecutive outputs by three.
std::uint64_t shd3_enum(const Pdag& g, const EnumerationSink& sink);

}  // namespace mecenum
