#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "mecenum/graph.hpp"
#include "mecenum/meek.hpp"

namespace mecenum {

/// One enumerated member, streamed without materializing. Orientation-based
/// outputs carry the base graph plus visit positions; materialize() builds
/// the full DAG on demand so sink cost stays out of the delay path.
/// Views are only valid inside the sink invocation.
class DagView {
 public:
  /// Base graph for orientation-overlay outputs; the output itself for
  /// concrete outputs.
  const Pdag& base() const { return *base_; }

  /// The full DAG: directed edges of the base plus undirected edges
  /// oriented by visit position.
  Pdag materialize() const;

  /// Visit sequence when the output came from a single MCS run, else null.
  const std::vector<Vertex>* ordering() const { return tau_; }

  DagView(const Pdag* base, const std::vector<int>* pos, const std::vector<Vertex>* tau)
      : base_(base), pos_(pos), tau_(tau) {}

 private:
  const Pdag* base_;
  const std::vector<int>* pos_;  // null => base_ is already the output DAG
  const std::vector<Vertex>* tau_;
};

/// Streaming consumer: invoked once per member; return false to stop.
using EnumerationSink = std::function<bool(const DagView&)>;

/// Lists every AMO of a chordal graph exactly once with O(n+m) delay.
/// Throws NotChordalError. Disconnected inputs are fine.
std::uint64_t enumerate_amos(const Pdag& g, const EnumerationSink& sink,
                             std::optional<std::uint64_t> seed = {});

/// Lists every DAG of the MEC represented by CPDAG g: AMO enumeration of
/// the undirected part with the directed edges re-added per output.
std::uint64_t enumerate_cpdag(const Pdag& g, const EnumerationSink& sink,
                              std::optional<std::uint64_t> seed = {});

/// Lists every AMO of a bucket consistent with its directed edges.
/// Outputs are in bucket-local ids. Throws NotChordalError or
/// NoAdmissibleVertexError.
std::uint64_t enumerate_bucket(const Bucket& b, const EnumerationSink& sink,
                               std::optional<std::uint64_t> seed = {});

/// Lists every consistent extension of a PDAG: Meek closure first, then a
/// bucket product with the last bucket varying fastest. Returns 0 when the
/// input is not extendable.
std::uint64_t enumerate_pdag(const Pdag& g, const EnumerationSink& sink,
                             std::optional<std::uint64_t> seed = {});

}  // namespace mecenum
