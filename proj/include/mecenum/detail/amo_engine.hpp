#pragma once

#include <functional>
#include <random>
#include <vector>

#include "mecenum/graph.hpp"

namespace mecenum::detail {

/// Recursive MCS with pivot rotation over the reachable part of the
/// highest-label set. Drives the AMO enumerator, the bucket enumerator and
/// the single-extension routines (a run stopped after the first output is a
/// plain MCS).
///
/// The recursion is implemented with an explicit stack so depth n inputs
/// cannot overflow the call stack, and the undo discipline stays auditable.
/// Label sets are intrusive doubly linked lists with per-vertex handles,
/// giving O(1) moves between labels.
class AmoEngine {
 public:
  /// All edges of g form the traversal skeleton. With respect_directed,
  /// directed edges of g additionally constrain the visit order: only
  /// highest-label vertices with no unvisited parent are admissible.
  /// Without it, g must be fully undirected.
  AmoEngine(const Pdag& g, bool respect_directed, std::mt19937_64* rng = nullptr);

  /// Calls fn once per complete ordering; fn returns false to stop early.
  /// Returns false iff stopped. Internal state is restored either way.
  bool run(const std::function<bool()>& fn);

  /// Visit position per vertex; valid while fn runs with a full ordering.
  const std::vector<int>& positions() const { return pos_; }
  /// The visit sequence tau; valid under the same condition.
  const std::vector<Vertex>& order() const { return tau_; }

 private:
  struct Frame {
    int label;
    Vertex pivot;
    Vertex current;
    std::vector<Vertex> reach;
    bool have_reach = false;
  };

  int n_;
  bool bucket_mode_;
  std::mt19937_64* rng_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> head_, next_, prev_;
  std::vector<int> label_;
  std::vector<char> visited_;
  std::vector<int> unvisited_parents_;
  std::vector<Vertex> tau_;
  std::vector<int> pos_;
  int max_label_ = 0;
  mutable std::vector<int> seen_stamp_;
  mutable int stamp_ = 0;

  void list_remove(Vertex v);
  void list_push(Vertex v, int label);
  int highest_label();
  bool admissible(Vertex v) const;
  Vertex choose_pivot(int label);
  void visit(Vertex x);
  void unvisit(Vertex x, int label);
  std::vector<Vertex> reachable_from(Vertex v, int label) const;
  void check_restored() const;
};

}  // namespace mecenum::detail
