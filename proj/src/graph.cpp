#include "mecenum/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace mecenum {

Pdag::Pdag(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  directed_out_.resize(n);
  directed_in_.resize(n);
  undirected_.resize(n);
  if (n <= 64) adj_mask_.assign(n, 0);
}

void Pdag::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
}

void Pdag::insert_sorted(std::vector<Vertex>& list, Vertex v) {
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

void Pdag::erase_sorted(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  list.erase(it);
}

void Pdag::add_directed(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop");
  if (adjacent(u, v)) throw std::invalid_argument("parallel edge");
  insert_sorted(directed_out_[u], v);
  insert_sorted(directed_in_[v], u);
  if (!adj_mask_.empty()) {
    adj_mask_[u] |= std::uint64_t{1} << v;
    adj_mask_[v] |= std::uint64_t{1} << u;
  }
  ++m_;
}

void Pdag::add_undirected(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop");
  if (adjacent(u, v)) throw std::invalid_argument("parallel edge");
  insert_sorted(undirected_[u], v);
  insert_sorted(undirected_[v], u);
  if (!adj_mask_.empty()) {
    adj_mask_[u] |= std::uint64_t{1} << v;
    adj_mask_[v] |= std::uint64_t{1} << u;
  }
  ++m_;
}

void Pdag::orient(Vertex u, Vertex v) {
  if (!has_undirected(u, v)) throw std::invalid_argument("no undirected edge to orient");
  erase_sorted(undirected_[u], v);
  erase_sorted(undirected_[v], u);
  insert_sorted(directed_out_[u], v);
  insert_sorted(directed_in_[v], u);
}

void Pdag::reverse(Vertex u, Vertex v) {
  if (!has_directed(u, v)) throw std::invalid_argument("no directed edge to reverse");
  erase_sorted(directed_out_[u], v);
  erase_sorted(directed_in_[v], u);
  insert_sorted(directed_out_[v], u);
  insert_sorted(directed_in_[u], v);
}

void Pdag::undirect(Vertex u, Vertex v) {
  if (!has_directed(u, v)) throw std::invalid_argument("no directed edge to undirect");
  erase_sorted(directed_out_[u], v);
  erase_sorted(directed_in_[v], u);
  insert_sorted(undirected_[u], v);
  insert_sorted(undirected_[v], u);
}

bool Pdag::adjacent(Vertex u, Vertex v) const {
  if (!adj_mask_.empty()) return (adj_mask_[u] >> v) & 1;
  return has_undirected(u, v) || has_directed(u, v) || has_directed(v, u);
}

bool Pdag::has_directed(Vertex u, Vertex v) const {
  const auto& out = directed_out_[u];
  return std::binary_search(out.begin(), out.end(), v);
}

bool Pdag::has_undirected(Vertex u, Vertex v) const {
  const auto& und = undirected_[u];
  return std::binary_search(und.begin(), und.end(), v);
}

EdgeRelation Pdag::relation(Vertex u, Vertex v) const {
  if (!adjacent(u, v)) return EdgeRelation::None;
  if (has_undirected(u, v)) return EdgeRelation::Undirected;
  return has_directed(u, v) ? EdgeRelation::UV : EdgeRelation::VU;
}

int Pdag::directed_edge_count() const {
  int c = 0;
  for (const auto& out : directed_out_) c += static_cast<int>(out.size());
  return c;
}

int Pdag::undirected_edge_count() const {
  int c = 0;
  for (const auto& und : undirected_) c += static_cast<int>(und.size());
  return c / 2;
}

std::vector<std::pair<Vertex, Vertex>> Pdag::directed_edges() const {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : directed_out_[u]) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::pair<Vertex, Vertex>> Pdag::undirected_edges() const {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : undirected_[u])
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::uint32_t> Pdag::canonical_edges() const {
  std::vector<std::uint32_t> keys;
  keys.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : directed_out_[u])
      keys.push_back(static_cast<std::uint32_t>(u) << 16 | static_cast<std::uint32_t>(v));
    for (Vertex v : undirected_[u])
      if (u < v)
        keys.push_back(std::uint32_t{1} << 31 | static_cast<std::uint32_t>(u) << 16 |
                       static_cast<std::uint32_t>(v));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool Pdag::operator==(const Pdag& other) const {
  return n_ == other.n_ && directed_out_ == other.directed_out_ &&
         undirected_ == other.undirected_;
}

Pdag skeleton(const Pdag& g) {
  Pdag s(g.vertex_count());
  for (auto [u, v] : g.directed_edges()) s.add_undirected(u, v);
  for (auto [u, v] : g.undirected_edges()) s.add_undirected(u, v);
  return s;
}

std::vector<VStructure> v_structures(const Pdag& g) {
  std::vector<VStructure> out;
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    const auto& pa = g.parents(c);
    for (std::size_t i = 0; i < pa.size(); ++i)
      for (std::size_t j = i + 1; j < pa.size(); ++j)
        if (!g.adjacent(pa[i], pa[j])) out.push_back({pa[i], c, pa[j]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int shd(const Pdag& g1, const Pdag& g2) {
  if (g1.vertex_count() != g2.vertex_count())
    throw std::invalid_argument("shd: vertex-count mismatch");
  int d = 0;
  auto count_side = [&](const Pdag& a, const Pdag& b) {
    // pairs adjacent in a whose relation differs in b
    for (auto [u, v] : a.directed_edges())
      if (b.relation(u, v) != EdgeRelation::UV) ++d;
    for (auto [u, v] : a.undirected_edges())
      if (b.relation(u, v) != EdgeRelation::Undirected) ++d;
  };
  count_side(g1, g2);
  // pairs present in g2 but absent in g1 (differing pairs not yet counted)
  for (auto [u, v] : g2.directed_edges())
    if (g1.relation(u, v) == EdgeRelation::None) ++d;
  for (auto [u, v] : g2.undirected_edges())
    if (g1.relation(u, v) == EdgeRelation::None) ++d;
  return d;
}

std::vector<std::vector<Vertex>> undirected_components(const Pdag& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      comp.push_back(u);
      for (Vertex w : g.undirected_neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

InducedSubgraph induced_subgraph(const Pdag& g, const std::vector<Vertex>& s) {
  InducedSubgraph result;
  result.old_to_new.assign(g.vertex_count(), -1);
  result.vertices = s;
  std::sort(result.vertices.begin(), result.vertices.end());
  for (std::size_t i = 0; i < result.vertices.size(); ++i) {
    g.check_vertex(result.vertices[i]);
    result.old_to_new[result.vertices[i]] = static_cast<Vertex>(i);
  }
  Pdag sub(static_cast<int>(result.vertices.size()));
  for (Vertex old_u : result.vertices) {
    Vertex u = result.old_to_new[old_u];
    for (Vertex old_v : g.children(old_u))
      if (result.old_to_new[old_v] >= 0) sub.add_directed(u, result.old_to_new[old_v]);
    for (Vertex old_v : g.undirected_neighbors(old_u))
      if (old_u < old_v && result.old_to_new[old_v] >= 0)
        sub.add_undirected(u, result.old_to_new[old_v]);
  }
  result.graph = std::move(sub);
  return result;
}

bool is_acyclic(const Pdag& g) {
  const int n = g.vertex_count();
  std::vector<int> indeg(n, 0);
  for (Vertex v = 0; v < n; ++v) indeg[v] = static_cast<int>(g.parents(v).size());
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++removed;
    for (Vertex w : g.children(u))
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return removed == n;
}

Pdag orient_by_ordering(const Pdag& g, const std::vector<Vertex>& tau) {
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < tau.size(); ++i) {
    g.check_vertex(tau[i]);
    if (pos[tau[i]] >= 0) throw std::invalid_argument("ordering repeats a vertex");
    pos[tau[i]] = static_cast<int>(i);
  }
  Pdag out(g.vertex_count());
  for (auto [u, v] : g.directed_edges()) out.add_directed(u, v);
  for (auto [u, v] : g.undirected_edges()) {
    if (pos[u] < 0 || pos[v] < 0)
      throw std::invalid_argument("ordering does not cover an undirected edge");
    if (pos[u] < pos[v])
      out.add_directed(u, v);
    else
      out.add_directed(v, u);
  }
  return out;
}

}  // namespace mecenum
