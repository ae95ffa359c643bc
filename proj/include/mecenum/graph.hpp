#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mecenum {

using Vertex = std::int32_t;

enum class EdgeKind { Directed, Undirected };

/// Edge relation between an ordered vertex pair (u, v).
enum class EdgeRelation { None, UV, VU, Undirected };

/// Partially directed graph over dense 0-based vertex ids.
///
/// One container serves DAGs, CPDAGs, MPDAGs and general PDAGs. Adjacency
/// lists are kept sorted by vertex id; pair adjacency is answered by a
/// per-graph bitset for n <= 64 and by binary search otherwise. Treat values
/// as immutable once built and shared; enumerators work on private copies.
class Pdag {
 public:
  Pdag() = default;
  explicit Pdag(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  void add_directed(Vertex u, Vertex v);
  void add_undirected(Vertex u, Vertex v);

  /// Turns the undirected edge u-v into u->v.
  void orient(Vertex u, Vertex v);
  /// Turns the directed edge u->v into v->u.
  void reverse(Vertex u, Vertex v);
  /// Turns the directed edge u->v back into u-v.
  void undirect(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const;
  bool has_directed(Vertex u, Vertex v) const;
  bool has_undirected(Vertex u, Vertex v) const;
  EdgeRelation relation(Vertex u, Vertex v) const;

  const std::vector<Vertex>& parents(Vertex v) const { return directed_in_[v]; }
  const std::vector<Vertex>& children(Vertex v) const { return directed_out_[v]; }
  const std::vector<Vertex>& undirected_neighbors(Vertex v) const { return undirected_[v]; }

  int directed_edge_count() const;
  int undirected_edge_count() const;
  bool fully_directed() const { return undirected_edge_count() == 0; }
  bool fully_undirected() const { return directed_edge_count() == 0; }

  /// Directed edges as (u, v) pairs, ascending.
  std::vector<std::pair<Vertex, Vertex>> directed_edges() const;
  /// Undirected edges as (u, v) pairs with u < v, ascending.
  std::vector<std::pair<Vertex, Vertex>> undirected_edges() const;

  /// Canonical byte-comparable form: all edges encoded as sorted u32 keys,
  /// directed (u, v) and undirected (min, max) with a kind bit.
  std::vector<std::uint32_t> canonical_edges() const;

  bool operator==(const Pdag& other) const;

  void check_vertex(Vertex v) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> directed_out_;
  std::vector<std::vector<Vertex>> directed_in_;
  std::vector<std::vector<Vertex>> undirected_;
  std::vector<std::uint64_t> adj_mask_;  // only when n_ <= 64

  void insert_sorted(std::vector<Vertex>& list, Vertex v);
  void erase_sorted(std::vector<Vertex>& list, Vertex v);
};

struct VStructure {
  Vertex u, c, v;  // u -> c <- v with u < v
  bool operator==(const VStructure&) const = default;
  auto operator<=>(const VStructure&) const = default;
};

struct InducedSubgraph {
  Pdag graph;
  std::vector<Vertex> old_to_new;  // -1 for vertices outside s
  std::vector<Vertex> vertices;    // new -> old
};

Pdag skeleton(const Pdag& g);

/// All v-structures u -> c <- v with u, v non-adjacent, u < v, sorted.
std::vector<VStructure> v_structures(const Pdag& g);

/// Structural Hamming distance: unordered vertex pairs with differing
/// edge relation. Throws std::invalid_argument on vertex-count mismatch.
int shd(const Pdag& g1, const Pdag& g2);

/// Connected components of the undirected part, singletons included.
/// Components ordered by smallest member, members ascending.
std::vector<std::vector<Vertex>> undirected_components(const Pdag& g);

InducedSubgraph induced_subgraph(const Pdag& g, const std::vector<Vertex>& s);

/// True iff the directed part has no cycle (undirected edges ignored).
bool is_acyclic(const Pdag& g);

/// Orients every undirected u-v as u->v iff u precedes v in tau; directed
/// edges are preserved. tau must cover all endpoints of undirected edges.
Pdag orient_by_ordering(const Pdag& g, const std::vector<Vertex>& tau);

}  // namespace mecenum
