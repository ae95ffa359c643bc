#include "mecenum/detail/amo_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "mecenum/errors.hpp"

namespace mecenum::detail {

AmoEngine::AmoEngine(const Pdag& g, bool respect_directed, std::mt19937_64* rng)
    : n_(g.vertex_count()), bucket_mode_(respect_directed), rng_(rng) {
  if (!respect_directed && g.directed_edge_count() > 0)
    throw std::invalid_argument("AmoEngine: directed edge in undirected-only mode");
  nbrs_.resize(n_);
  for (Vertex v = 0; v < n_; ++v) {
    nbrs_[v] = g.undirected_neighbors(v);
    for (Vertex w : g.parents(v)) nbrs_[v].push_back(w);
    for (Vertex w : g.children(v)) nbrs_[v].push_back(w);
    std::sort(nbrs_[v].begin(), nbrs_[v].end());
  }
  if (bucket_mode_) {
    children_.resize(n_);
    unvisited_parents_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      children_[v] = g.children(v);
      unvisited_parents_[v] = static_cast<int>(g.parents(v).size());
    }
  }
  head_.assign(n_ == 0 ? 1 : n_, -1);
  next_.assign(n_, -1);
  prev_.assign(n_, -1);
  label_.assign(n_, 0);
  visited_.assign(n_, 0);
  seen_stamp_.assign(n_, 0);
  pos_.assign(n_, -1);
  tau_.reserve(n_);
  for (Vertex v = n_ - 1; v >= 0; --v) list_push(v, 0);
}

void AmoEngine::list_remove(Vertex v) {
  if (prev_[v] >= 0)
    next_[prev_[v]] = next_[v];
  else
    head_[label_[v]] = next_[v];
  if (next_[v] >= 0) prev_[next_[v]] = prev_[v];
  next_[v] = prev_[v] = -1;
}

void AmoEngine::list_push(Vertex v, int label) {
  label_[v] = label;
  next_[v] = head_[label];
  prev_[v] = -1;
  if (head_[label] >= 0) prev_[head_[label]] = v;
  head_[label] = v;
  if (label > max_label_) max_label_ = label;
}

int AmoEngine::highest_label() {
  while (max_label_ > 0 && head_[max_label_] < 0) --max_label_;
  return max_label_;
}

bool AmoEngine::admissible(Vertex v) const {
  return !bucket_mode_ || unvisited_parents_[v] == 0;
}

Vertex AmoEngine::choose_pivot(int label) {
  Vertex best = -1;
  if (rng_ == nullptr) {
    for (Vertex v = head_[label]; v >= 0; v = next_[v])
      if (admissible(v) && (best < 0 || v < best)) best = v;
  } else {
    std::uint64_t seen = 0;
    for (Vertex v = head_[label]; v >= 0; v = next_[v]) {
      if (!admissible(v)) continue;
      ++seen;
      if (std::uniform_int_distribution<std::uint64_t>(0, seen - 1)(*rng_) == 0) best = v;
    }
  }
  if (best < 0)
    throw NoAdmissibleVertexError(
        "every highest-label vertex has an unvisited parent; input is not Meek-closed");
  return best;
}

void AmoEngine::visit(Vertex x) {
  list_remove(x);
  visited_[x] = 1;
  pos_[x] = static_cast<int>(tau_.size());
  tau_.push_back(x);
  for (Vertex w : nbrs_[x]) {
    if (visited_[w]) continue;
    list_remove(w);
    list_push(w, label_[w] + 1);
  }
  if (bucket_mode_)
    for (Vertex w : children_[x])
      if (!visited_[w]) --unvisited_parents_[w];
}

void AmoEngine::unvisit(Vertex x, int label) {
  for (Vertex w : nbrs_[x]) {
    if (visited_[w]) continue;
    list_remove(w);
    list_push(w, label_[w] - 1);
  }
  if (bucket_mode_)
    for (Vertex w : children_[x])
      if (!visited_[w]) ++unvisited_parents_[w];
  visited_[x] = 0;
  pos_[x] = -1;
  tau_.pop_back();
  list_push(x, label);
}

std::vector<Vertex> AmoEngine::reachable_from(Vertex v, int label) const {
  std::vector<Vertex> result;
  std::vector<Vertex> queue{v};
  ++stamp_;
  seen_stamp_[v] = stamp_;
  std::size_t qi = 0;
  while (qi < queue.size()) {
    Vertex u = queue[qi++];
    for (Vertex w : nbrs_[u]) {
      if (seen_stamp_[w] == stamp_ || visited_[w] || label_[w] != label || !admissible(w))
        continue;
      seen_stamp_[w] = stamp_;
      queue.push_back(w);
      result.push_back(w);
    }
  }
  return result;
}

bool AmoEngine::run(const std::function<bool()>& fn) {
  if (n_ == 0) return fn();
  std::vector<Frame> stack;
  bool stopped = false;
  bool descend = true;
  while (true) {
    if (descend) {
      if (static_cast<int>(tau_.size()) == n_) {
        if (!fn()) stopped = true;
        descend = false;
        continue;
      }
      int i = highest_label();
      Vertex v = choose_pivot(i);
      stack.push_back(Frame{i, v, v, {}, false});
      visit(v);
      continue;
    }
    Frame& f = stack.back();
    unvisit(f.current, f.label);
    if (!stopped) {
      if (!f.have_reach) {
        f.reach = reachable_from(f.pivot, f.label);
        f.have_reach = true;
      }
      if (!f.reach.empty()) {
        f.current = f.reach.back();
        f.reach.pop_back();
        visit(f.current);
        descend = true;
        continue;
      }
    }
    stack.pop_back();
    if (stack.empty()) break;
  }
  check_restored();
  return !stopped;
}

void AmoEngine::check_restored() const {
  if (!tau_.empty()) throw std::logic_error("AmoEngine: tau not restored");
  for (Vertex v = 0; v < n_; ++v)
    if (visited_[v] || label_[v] != 0)
      throw std::logic_error("AmoEngine: label state not restored");
}

}  // namespace mecenum::detail
