#include "mecenum/chordal.hpp"

#include <stdexcept>

#include "mecenum/detail/amo_engine.hpp"
#include "mecenum/errors.hpp"

namespace mecenum {

std::vector<Vertex> mcs(const Pdag& g, TieBreak tie_break, std::uint64_t seed) {
  if (g.directed_edge_count() > 0)
    throw std::invalid_argument("mcs: input has a directed edge");
  std::mt19937_64 rng(seed);
  detail::AmoEngine engine(g, false, tie_break == TieBreak::Seeded ? &rng : nullptr);
  std::vector<Vertex> tau;
  engine.run([&] {
    tau = engine.order();
    return false;  // first ordering only
  });
  return tau;
}

bool is_chordal(const Pdag& g) {
  if (g.directed_edge_count() > 0)
    throw std::invalid_argument("is_chordal: input has a directed edge");
  Pdag d = orient_by_ordering(g, mcs(g));
  return v_structures(d).empty();
}

bool is_amo(const Pdag& g, const Pdag& d) {
  if (!d.fully_directed()) throw std::invalid_argument("is_amo: d is not fully directed");
  if (!(skeleton(d) == skeleton(g)))
    throw std::invalid_argument("is_amo: skeleton mismatch");
  return is_acyclic(d) && v_structures(d).empty();
}

Pdag consistent_extension_cpdag(const Pdag& g) {
  Pdag undirected_part(g.vertex_count());
  for (auto [u, v] : g.undirected_edges()) undirected_part.add_undirected(u, v);
  Pdag ext = orient_by_ordering(g, mcs(undirected_part));
  // One check covers chordality of every component: a non-chordal component
  // makes the MCS orientation produce a v-structure.
  if (!(v_structures(ext) == v_structures(g)))
    throw NotChordalError("input is not a valid CPDAG: non-chordal undirected component");
  return ext;
}

}  // namespace mecenum
