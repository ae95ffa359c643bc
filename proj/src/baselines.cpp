#include "mecenum/baselines.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "mecenum/chordal.hpp"
#include "mecenum/meek.hpp"

namespace mecenum {

namespace {

bool is_covered(const Pdag& d, Vertex x, Vertex y) {
  const auto& px = d.parents(x);
  const auto& py = d.parents(y);
  if (py.size() != px.size() + 1) return false;
  // py must be px with x merged in; both are sorted.
  std::size_t i = 0;
  bool seen_x = false;
  for (Vertex p : py) {
    if (p == x) {
      seen_x = true;
      continue;
    }
    if (i >= px.size() || px[i] != p) return false;
    ++i;
  }
  return seen_x && i == px.size();
}

/// Store of already-visited DAGs, keyed by a 128-bit fingerprint of the
/// canonical edge list instead of the list itself: the DFS holds a set
/// entry per *visited* state (more than it outputs when stopped early),
/// and fixed-size keys keep insert cost independent of graph size and set
/// growth. Two independently mixed 64-bit halves make a collision across
/// any realistic enumeration (< 2^40 states) vanishingly unlikely.
struct Fingerprint {
  std::uint64_t a = 0, b = 0;
  bool operator==(const Fingerprint&) const = default;
};

std::uint64_t mix64(std::uint64_t x) {  // splitmix64 finalizer
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

Fingerprint fingerprint(const std::vector<std::uint32_t>& edges) {
  Fingerprint fp{0x243f6a8885a308d3ull, 0x13198a2e03707344ull};
  for (std::uint32_t e : edges) {
    fp.a = mix64(fp.a ^ e);
    fp.b = mix64(fp.b ^ (e * 0x9e3779b97f4a7c15ull));
  }
  return fp;
}

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& fp) const {
    return static_cast<std::size_t>(fp.a ^ fp.b);
  }
};
using VisitedSet = std::unordered_set<Fingerprint, FingerprintHash>;

std::pair<Vertex, Vertex> lowest_undirected_edge(const Pdag& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex w : g.undirected_neighbors(u))
      if (w > u) return {u, w};
  return {-1, -1};
}

struct MeekRec {
  const EnumerationSink& sink;
  std::uint64_t count = 0;
  bool stopped = false;

  void rec(const Pdag& h) {
    if (stopped) return;
    auto [u, v] = lowest_undirected_edge(h);
    if (u < 0) {
      ++count;
      if (!sink(DagView(&h, nullptr, nullptr))) stopped = true;
      return;
    }
    Pdag left = h;
    left.orient(v, u);
    rec(apply_meek_rules(left));
    if (stopped) return;
    Pdag right = h;
    right.orient(u, v);
    rec(apply_meek_rules(right));
  }
};

// Shared DFS over the covered-edge reversal graph. parity_output selects
// the shd3 output timing; otherwise every node is output on discovery.
std::uint64_t reversal_dfs(const Pdag& g, const EnumerationSink& sink, bool parity_output) {
  std::optional<Pdag> closure = maximal_orientation(g);
  if (!closure) return 0;
  Pdag d = consistent_extension_mpdag(*closure);

  std::unordered_set<std::uint64_t> fixed;
  for (auto [u, v] : closure->directed_edges())
    fixed.insert(static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v));
  auto is_fixed = [&](Vertex x, Vertex y) {
    return fixed.count(static_cast<std::uint64_t>(x) << 32 | static_cast<std::uint32_t>(y)) > 0;
  };

  // Next reversible covered edge of d strictly after cursor in (x, y) order.
  auto next_candidate = [&](Vertex cx, Vertex cy) -> std::pair<Vertex, Vertex> {
    for (Vertex x = std::max<Vertex>(cx, 0); x < d.vertex_count(); ++x)
      for (Vertex y : d.children(x)) {
        if (x == cx && y <= cy) continue;
        if (!is_fixed(x, y) && is_covered(d, x, y)) return {x, y};
      }
    return {-1, -1};
  };

  struct Frame {
    Vertex entry_x, entry_y;  // edge reversed on entry (was entry_x -> entry_y)
    Vertex cx, cy;            // candidate cursor
    int depth;
  };

  VisitedSet vis;
  vis.insert(fingerprint(d.canonical_edges()));
  std::uint64_t count = 0;
  bool stopped = false;
  auto emit = [&] {
    ++count;
    if (!sink(DagView(&d, nullptr, nullptr))) stopped = true;
  };

  std::vector<Frame> stack;
  stack.push_back({-1, -1, -1, -1, 0});
  emit();  // root, depth 0
  while (!stack.empty()) {
    Frame& f = stack.back();
    std::pair<Vertex, Vertex> cand{-1, -1};
    if (!stopped) cand = next_candidate(f.cx, f.cy);
    if (cand.first >= 0) {
      f.cx = cand.first;
      f.cy = cand.second;
      d.reverse(cand.first, cand.second);
      if (!vis.insert(fingerprint(d.canonical_edges())).second) {
        d.reverse(cand.second, cand.first);
        continue;
      }
      int depth = f.depth + 1;
      stack.push_back({cand.first, cand.second, -1, -1, depth});
      if (!parity_output || depth % 2 == 0) emit();
    } else {
      if (!stopped && parity_output && f.depth % 2 == 1) emit();
      if (f.entry_x >= 0) d.reverse(f.entry_y, f.entry_x);
      stack.pop_back();
    }
  }
  return count;
}

}  // namespace

std::vector<CoveredEdge> covered_edges(const Pdag& d) {
  if (!d.fully_directed() || !is_acyclic(d))
    throw std::invalid_argument("covered_edges: input is not a DAG");
  std::vector<CoveredEdge> out;
  for (Vertex x = 0; x < d.vertex_count(); ++x)
    for (Vertex y : d.children(x))
      if (is_covered(d, x, y)) out.push_back({x, y});
  return out;
}

bool markov_equivalent(const Pdag& d1, const Pdag& d2) {
  if (!d1.fully_directed() || !is_acyclic(d1) || !d2.fully_directed() || !is_acyclic(d2))
    throw std::invalid_argument("markov_equivalent: inputs must be DAGs");
  if (d1.vertex_count() != d2.vertex_count())
    throw std::invalid_argument("markov_equivalent: vertex-count mismatch");
  return skeleton(d1) == skeleton(d2) && v_structures(d1) == v_structures(d2);
}

std::uint64_t meek_enum(const Pdag& g, const EnumerationSink& sink) {
  std::optional<Pdag> closure = maximal_orientation(g);
  if (!closure) return 0;
  MeekRec rec{sink};
  rec.rec(*closure);
  return rec.count;
}

std::uint64_t chickering_enum(const Pdag& g, const EnumerationSink& sink) {
  return reversal_dfs(g, sink, false);
}

std::uint64_t shd3_enum(const Pdag& g, const EnumerationSink& sink) {
  return reversal_dfs(g, sink, true);
}

}  // namespace mecenum
