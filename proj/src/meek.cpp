#include "mecenum/meek.hpp"

#include <stdexcept>

#include "mecenum/chordal.hpp"
#include "mecenum/detail/amo_engine.hpp"
#include "mecenum/errors.hpp"

namespace mecenum {

namespace {

// Each rule applies its first match (scanning in ascending vertex order)
// and reports whether it oriented an edge.

// R1: a -> b, b - c, a and c non-adjacent  =>  b -> c.
bool apply_r1(Pdag& g) {
  for (Vertex b = 0; b < g.vertex_count(); ++b)
    for (Vertex a : g.parents(b))
      for (Vertex c : g.undirected_neighbors(b))
        if (c != a && !g.adjacent(a, c)) {
          g.orient(b, c);
          return true;
        }
  return false;
}

// R2: a -> b -> c, a - c  =>  a -> c.
bool apply_r2(Pdag& g) {
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex c : g.undirected_neighbors(a))
      for (Vertex b : g.children(a))
        if (g.has_directed(b, c)) {
          g.orient(a, c);
          return true;
        }
  return false;
}

// R3: a - b, a - c, a - d, b -> c, d -> c, b and d non-adjacent  =>  a -> c.
bool apply_r3(Pdag& g) {
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex c : g.undirected_neighbors(a)) {
      const auto& pa = g.parents(c);
      for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = i + 1; j < pa.size(); ++j) {
          Vertex b = pa[i], d = pa[j];
          if (g.has_undirected(a, b) && g.has_undirected(a, d) && !g.adjacent(b, d)) {
            g.orient(a, c);
            return true;
          }
        }
    }
  return false;
}

// R4: a - b, a - c, a - d, d -> c, c -> b, b and d non-adjacent  =>  a -> b.
bool apply_r4(Pdag& g) {
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex b : g.undirected_neighbors(a))
      for (Vertex c : g.parents(b)) {
        if (!g.has_undirected(a, c)) continue;
        for (Vertex d : g.parents(c))
          if (g.has_undirected(a, d) && !g.adjacent(b, d)) {
            g.orient(a, b);
            return true;
          }
      }
  return false;
}

}  // namespace

Pdag apply_meek_rules(const Pdag& g) {
  if (!is_acyclic(g)) throw std::invalid_argument("apply_meek_rules: directed cycle in input");
  Pdag h = g;
  while (apply_r1(h) || apply_r2(h) || apply_r3(h) || apply_r4(h)) {
  }
  return h;
}

std::vector<Bucket> buckets(const Pdag& g) {
  std::vector<Bucket> result;
  for (auto& comp : undirected_components(g)) {
    if (comp.size() < 2) continue;
    InducedSubgraph sub = induced_subgraph(g, comp);
    result.push_back(Bucket{std::move(sub.vertices), std::move(sub.graph),
                            std::move(sub.old_to_new)});
  }
  return result;
}

bool is_extendable(const Pdag& g) {
  for (const Bucket& b : buckets(g))
    if (!is_chordal(skeleton(b.graph))) return false;
  return true;
}

Pdag consistent_extension_mpdag(const Pdag& g) {
  Pdag ext = g;
  for (const Bucket& b : buckets(g)) {
    detail::AmoEngine engine(b.graph, true);
    std::vector<Vertex> local_tau;
    try {
      engine.run([&] {
        local_tau = engine.order();
        return false;
      });
    } catch (const NoAdmissibleVertexError&) {
      throw NotExtendableError("no admissible vertex in bucket; input is not Meek-closed");
    }
    std::vector<int> pos(b.graph.vertex_count());
    for (std::size_t i = 0; i < local_tau.size(); ++i) pos[local_tau[i]] = static_cast<int>(i);
    for (auto [u, v] : b.graph.undirected_edges()) {
      Vertex gu = b.vertices[u], gv = b.vertices[v];
      if (pos[u] < pos[v])
        ext.orient(gu, gv);
      else
        ext.orient(gv, gu);
    }
  }
  if (!is_acyclic(ext) || !(v_structures(ext) == v_structures(g)))
    throw NotExtendableError("graph has no consistent extension");
  return ext;
}

std::optional<Pdag> maximal_orientation(const Pdag& g) {
  Pdag closure = apply_meek_rules(g);
  if (!is_extendable(closure)) return std::nullopt;
  try {
    Pdag ext = consistent_extension_mpdag(closure);
    // The extension must realize the *input's* v-structures, otherwise the
    // closure manufactured a conflict and g has no consistent extension.
    if (!(v_structures(ext) == v_structures(g))) return std::nullopt;
  } catch (const NotExtendableError&) {
    return std::nullopt;
  }
  return closure;
}

}  // namespace mecenum
