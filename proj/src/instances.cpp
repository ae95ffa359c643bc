#include "mecenum/instances.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "mecenum/chordal.hpp"
#include "mecenum/meek.hpp"

namespace mecenum {

namespace {

std::int64_t edge_target(const GenConfig& cfg) {
  std::int64_t complete = static_cast<std::int64_t>(cfg.n) * (cfg.n - 1) / 2;
  return std::min<std::int64_t>(static_cast<std::int64_t>(cfg.k) * cfg.n, complete);
}

void check_config(const GenConfig& cfg) {
  if (cfg.n < 1 || cfg.k < 1) throw std::invalid_argument("GenConfig: need n >= 1 and k >= 1");
  if (cfg.bg_edges.first > cfg.bg_edges.second || cfg.bg_edges.first < 0)
    throw std::invalid_argument("GenConfig: empty background-edge range");
}

/// Uniform labeled tree from a random Pruefer sequence.
Pdag random_tree(int n, std::mt19937_64& rng) {
  Pdag t(n);
  if (n <= 1) return t;
  if (n == 2) {
    t.add_undirected(0, 1);
    return t;
  }
  std::vector<int> seq(n - 2);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int& s : seq) s = pick(rng);
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    t.add_undirected(leaf, s);
    if (--degree[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  t.add_undirected(a, b);
  return t;
}

bool reaches(const Pdag& g, Vertex from, Vertex to) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    if (u == to) return true;
    for (Vertex w : g.children(u))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

}  // namespace

Pdag random_chordal(const GenConfig& cfg) {
  check_config(cfg);
  std::mt19937_64 rng(cfg.seed);
  Pdag g = random_tree(cfg.n, rng);
  const std::int64_t target = edge_target(cfg);
  std::uniform_int_distribution<int> pick(0, cfg.n - 1);
  while (g.edge_count() < target) {
    int u = pick(rng), v = pick(rng);
    if (u == v || g.adjacent(u, v)) continue;
    Pdag candidate = g;
    candidate.add_undirected(u, v);
    if (is_chordal(candidate)) g = std::move(candidate);
  }
  return g;
}

Pdag random_dag(const GenConfig& cfg) {
  check_config(cfg);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> pick(0, cfg.n - 1);
  if (cfg.model == GenModel::DagBa) {
    // Scale-free skeleton: each new vertex attaches to k distinct existing
    // vertices drawn proportionally to degree, then the skeleton is
    // oriented by a random vertex ordering.
    const int core = std::min(cfg.n, cfg.k);
    Pdag skel(cfg.n);
    std::vector<Vertex> endpoints;  // one entry per edge endpoint
    for (int u = 0; u < core; ++u)
      for (int v = u + 1; v < core; ++v) {
        skel.add_undirected(u, v);
        endpoints.push_back(u);
        endpoints.push_back(v);
      }
    for (int v = core; v < cfg.n; ++v) {
      int wanted = std::min(cfg.k, v);
      int attached = 0;
      while (attached < wanted) {
        Vertex u;
        if (endpoints.empty()) {
          u = static_cast<Vertex>(pick(rng) % v);
        } else {
          std::uniform_int_distribution<std::size_t> slot(0, endpoints.size() - 1);
          u = endpoints[slot(rng)];
        }
        if (u == v || skel.adjacent(u, v)) continue;
        skel.add_undirected(u, v);
        endpoints.push_back(u);
        endpoints.push_back(v);
        ++attached;
      }
    }
    std::vector<Vertex> order(cfg.n);
    for (int v = 0; v < cfg.n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    return orient_by_ordering(skel, order);
  }
  if (cfg.model != GenModel::DagUniform)
    throw std::invalid_argument("random_dag: model must be dag_uniform or dag_ba");
  Pdag g(cfg.n);
  const std::int64_t target = edge_target(cfg);
  while (g.directed_edge_count() < target) {
    int u = pick(rng), v = pick(rng);
    if (u == v || g.adjacent(u, v)) continue;
    if (reaches(g, v, u)) continue;  // would close a directed cycle
    g.add_directed(u, v);
  }
  return g;
}

Pdag dag_to_cpdag(const Pdag& d) {
  if (!d.fully_directed() || !is_acyclic(d))
    throw std::invalid_argument("dag_to_cpdag: input is not a DAG");
  Pdag pattern = skeleton(d);
  for (const VStructure& vs : v_structures(d)) {
    if (pattern.has_undirected(vs.u, vs.c)) pattern.orient(vs.u, vs.c);
    if (pattern.has_undirected(vs.v, vs.c)) pattern.orient(vs.v, vs.c);
  }
  return apply_meek_rules(pattern);
}

Pdag cpdag_to_pdag(const Pdag& g, const GenConfig& cfg) {
  check_config(cfg);
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<int> count_dist(cfg.bg_edges.first, cfg.bg_edges.second);
  const int r = count_dist(rng);
  Pdag current = g;
  for (int step = 0; step < r; ++step) {
    auto undirected = current.undirected_edges();
    if (undirected.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, undirected.size() - 1);
    auto [u, v] = undirected[pick(rng)];
    bool forward_first = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
    for (int attempt = 0; attempt < 2; ++attempt) {
      Pdag candidate = current;
      bool forward = (attempt == 0) == forward_first;
      candidate.orient(forward ? u : v, forward ? v : u);
      if (auto closed = maximal_orientation(candidate)) {
        current = std::move(*closed);
        break;
      }
    }
  }
  return current;
}

}  // namespace mecenum
