#include "mecenum/enumerate.hpp"

#include <stdexcept>

#include "mecenum/chordal.hpp"
#include "mecenum/detail/amo_engine.hpp"
#include "mecenum/errors.hpp"

namespace mecenum {

Pdag DagView::materialize() const {
  if (pos_ == nullptr) return *base_;
  Pdag out(base_->vertex_count());
  for (auto [u, v] : base_->directed_edges()) out.add_directed(u, v);
  for (auto [u, v] : base_->undirected_edges()) {
    if ((*pos_)[u] < (*pos_)[v])
      out.add_directed(u, v);
    else
      out.add_directed(v, u);
  }
  return out;
}

std::uint64_t enumerate_amos(const Pdag& g, const EnumerationSink& sink,
                             std::optional<std::uint64_t> seed) {
  if (!is_chordal(g)) throw NotChordalError("enumerate_amos: input is not chordal");
  std::mt19937_64 rng(seed.value_or(0));
  detail::AmoEngine engine(g, false, seed ? &rng : nullptr);
  std::uint64_t count = 0;
  DagView view(&g, &engine.positions(), &engine.order());
  engine.run([&] {
    ++count;
    return sink(view);
  });
  return count;
}

std::uint64_t enumerate_cpdag(const Pdag& g, const EnumerationSink& sink,
                              std::optional<std::uint64_t> seed) {
  Pdag undirected_part(g.vertex_count());
  for (auto [u, v] : g.undirected_edges()) undirected_part.add_undirected(u, v);
  if (!is_chordal(undirected_part))
    throw NotChordalError("enumerate_cpdag: undirected component is not chordal");
  std::mt19937_64 rng(seed.value_or(0));
  detail::AmoEngine engine(undirected_part, false, seed ? &rng : nullptr);
  std::uint64_t count = 0;
  DagView view(&g, &engine.positions(), &engine.order());
  engine.run([&] {
    ++count;
    return sink(view);
  });
  return count;
}

std::uint64_t enumerate_bucket(const Bucket& b, const EnumerationSink& sink,
                               std::optional<std::uint64_t> seed) {
  if (!is_chordal(skeleton(b.graph)))
    throw NotChordalError("enumerate_bucket: bucket skeleton is not chordal");
  std::mt19937_64 rng(seed.value_or(0));
  detail::AmoEngine engine(b.graph, true, seed ? &rng : nullptr);
  std::uint64_t count = 0;
  DagView view(&b.graph, &engine.positions(), &engine.order());
  engine.run([&] {
    ++count;
    return sink(view);
  });
  return count;
}

std::uint64_t enumerate_pdag(const Pdag& g, const EnumerationSink& sink,
                             std::optional<std::uint64_t> seed) {
  std::optional<Pdag> closure = maximal_orientation(g);
  if (!closure) return 0;
  std::vector<Bucket> bs = buckets(*closure);
  std::uint64_t count = 0;
  if (bs.empty()) {
    ++count;
    sink(DagView(&*closure, nullptr, nullptr));
    return count;
  }
  std::mt19937_64 rng(seed.value_or(0));
  std::vector<detail::AmoEngine> engines;
  engines.reserve(bs.size());
  for (const Bucket& b : bs) engines.emplace_back(b.graph, true, seed ? &rng : nullptr);

  // Global visit positions, assembled per output from the bucket-local
  // ones. Only intra-bucket comparisons matter, so no offsets are needed.
  std::vector<int> pos(closure->vertex_count(), 0);
  DagView view(&*closure, &pos, nullptr);

  std::function<bool(std::size_t)> level = [&](std::size_t d) -> bool {
    if (d == engines.size()) {
      for (std::size_t i = 0; i < bs.size(); ++i) {
        const auto& local_pos = engines[i].positions();
        for (std::size_t v = 0; v < bs[i].vertices.size(); ++v)
          pos[bs[i].vertices[v]] = local_pos[v];
      }
      ++count;
      return sink(view);
    }
    return engines[d].run([&] { return level(d + 1); });
  };
  level(0);
  return count;
}

}  // namespace mecenum
