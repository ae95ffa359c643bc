#pragma once

#include <cstdint>
#include <utility>

#include "mecenum/graph.hpp"

namespace mecenum {

enum class GenModel { Chordal, DagUniform, DagBa };

/// Generator configuration. Instances are a pure function of (cfg, seed);
/// the RNG is std::mt19937_64, so files reproduce bit-exactly across
/// platforms.
struct GenConfig {
  int n = 16;
  int k = 3;  // edge target m = min(k*n, n*(n-1)/2)
  GenModel model = GenModel::Chordal;
  std::uint64_t seed = 0;
  std::pair<int, int> bg_edges = {3, 7};  // background orientations, inclusive
};

/// Chordal graph grown from a uniform random labeled tree (Pruefer) by
/// rejection-sampled chordality-preserving edge insertions.
Pdag random_chordal(const GenConfig& cfg);

/// Random DAG: uniform edge insertion under an acyclicity check, or a
/// Barabasi-Albert skeleton oriented by a random vertex ordering.
Pdag random_dag(const GenConfig& cfg);

/// Union graph of d's MEC: skeleton plus v-structure arcs, closed under the
/// Meek rules. Throws std::invalid_argument on cyclic input.
Pdag dag_to_cpdag(const Pdag& d);

/// Orients bg_edges-many undirected edges one at a time (random edge,
/// random valid direction), re-closing under the Meek rules after each;
/// stops early when no undirected edge remains.
Pdag cpdag_to_pdag(const Pdag& g, const GenConfig& cfg);

}  // namespace mecenum
