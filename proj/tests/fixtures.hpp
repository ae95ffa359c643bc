// Shared graph fixtures and helpers for the test suites.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "mecenum/baselines.hpp"
#include "mecenum/enumerate.hpp"
#include "mecenum/graph.hpp"

namespace fixtures {

using mecenum::Pdag;
using mecenum::Vertex;

// Seven-vertex CPDAG whose MEC has exactly six members.
// Vertices: a=0 b=1 c=2 d=3 e=4 f=5 g=6.
inline Pdag six_dag_cpdag() {
  Pdag g(7);
  g.add_directed(1, 3);  // b -> d
  g.add_directed(3, 0);  // d -> a
  g.add_directed(6, 3);  // g -> d
  g.add_directed(3, 2);  // d -> c
  g.add_directed(3, 5);  // d -> f
  g.add_undirected(0, 2);  // a - c
  g.add_undirected(2, 5);  // c - f
  g.add_undirected(1, 4);  // b - e
  return g;
}

// The six members: the directed core plus an AMO of the path a-c-f
// (three roots) crossed with an orientation of b-e (two).
inline std::vector<Pdag> six_dag_members() {
  std::vector<Pdag> out;
  const std::vector<std::vector<std::pair<Vertex, Vertex>>> path_amos = {
      {{0, 2}, {2, 5}},  // rooted at a
      {{2, 0}, {2, 5}},  // rooted at c
      {{5, 2}, {2, 0}},  // rooted at f
  };
  for (const auto& amo : path_amos)
    for (bool be : {true, false}) {
      Pdag d(7);
      d.add_directed(1, 3);
      d.add_directed(3, 0);
      d.add_directed(6, 3);
      d.add_directed(3, 2);
      d.add_directed(3, 5);
      for (auto [u, v] : amo) d.add_directed(u, v);
      if (be)
        d.add_directed(1, 4);
      else
        d.add_directed(4, 1);
      out.push_back(std::move(d));
    }
  return out;
}

// Seven-vertex, ten-edge chordal graph: a hub a over b-c-d and the
// triangle e-f-g. Vertices: a=0 b=1 c=2 d=3 e=4 f=5 g=6.
inline Pdag hub_chordal() {
  Pdag g(7);
  g.add_undirected(0, 1);
  g.add_undirected(0, 2);
  g.add_undirected(0, 3);
  g.add_undirected(0, 4);
  g.add_undirected(0, 5);
  g.add_undirected(1, 2);
  g.add_undirected(2, 3);
  g.add_undirected(4, 5);
  g.add_undirected(4, 6);
  g.add_undirected(5, 6);
  return g;
}

// Six-vertex MPDAG with two buckets: the square a-b-e-d-a carrying the
// directed a->e, and the single edge c-f. Vertices: a=0 b=1 c=2 d=3 e=4 f=5.
inline Pdag two_bucket_mpdag() {
  Pdag g(6);
  g.add_undirected(0, 1);  // a - b
  g.add_undirected(1, 4);  // b - e
  g.add_undirected(3, 4);  // d - e
  g.add_undirected(0, 3);  // a - d
  g.add_undirected(2, 5);  // c - f
  g.add_directed(0, 4);    // a -> e
  g.add_directed(4, 2);    // e -> c
  g.add_directed(4, 5);    // e -> f
  return g;
}

// A consistent extension of two_bucket_mpdag (one of several).
inline Pdag two_bucket_extension() {
  Pdag d(6);
  d.add_directed(0, 4);  // a -> e
  d.add_directed(4, 1);  // e -> b
  d.add_directed(0, 1);  // a -> b
  d.add_directed(0, 3);  // a -> d
  d.add_directed(4, 3);  // e -> d
  d.add_directed(4, 2);  // e -> c
  d.add_directed(4, 5);  // e -> f
  d.add_directed(2, 5);  // c -> f
  return d;
}

// Spider tree on 11 vertices, all edges undirected: center 0 with five
// legs of length two (mids 1..5, leaf 5+i hanging off mid i). Its MEC has
// 11 members, one per choice of source vertex, and no ordering of them
// keeps consecutive SHD below three: each leaf-rooted member is within
// SHD two only of its own mid and of the center, and the center can be
// visited once.
inline Pdag spider11() {
  Pdag g(11);
  for (Vertex mid = 1; mid <= 5; ++mid) {
    g.add_undirected(0, mid);
    g.add_undirected(mid, mid + 5);
  }
  return g;
}

inline std::vector<Pdag> collect(const Pdag& g, const std::string& algo,
                                 std::uint64_t limit = 0) {
  std::vector<Pdag> out;
  auto sink = [&](const mecenum::DagView& view) {
    out.push_back(view.materialize());
    return limit == 0 || out.size() < limit;
  };
  if (algo == "mcs")
    mecenum::enumerate_pdag(g, sink);
  else if (algo == "meek")
    mecenum::meek_enum(g, sink);
  else if (algo == "chickering")
    mecenum::chickering_enum(g, sink);
  else if (algo == "shd3")
    mecenum::shd3_enum(g, sink);
  else
    throw std::invalid_argument("unknown algo: " + algo);
  return out;
}

inline std::set<std::vector<std::uint32_t>> canonical_set(const std::vector<Pdag>& graphs) {
  std::set<std::vector<std::uint32_t>> keys;
  for (const Pdag& g : graphs) keys.insert(g.canonical_edges());
  return keys;
}

inline bool no_duplicates(const std::vector<Pdag>& graphs) {
  return canonical_set(graphs).size() == graphs.size();
}

inline int max_consecutive_shd(const std::vector<Pdag>& graphs) {
  int worst = 0;
  for (std::size_t i = 1; i < graphs.size(); ++i)
    worst = std::max(worst, mecenum::shd(graphs[i - 1], graphs[i]));
  return worst;
}

}  // namespace fixtures
