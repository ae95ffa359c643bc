#include "mecenum/oracle.hpp"

#include <algorithm>
#include <map>

#include "mecenum/errors.hpp"
#include "mecenum/instances.hpp"

namespace mecenum {
namespace oracle {

std::vector<Pdag> brute_force_extensions(const Pdag& g) {
  auto undirected = g.undirected_edges();
  const int k = static_cast<int>(undirected.size());
  if (k > kMaxUndirectedEdges)
    throw TooLargeError("brute_force_extensions: more than 25 undirected edges");
  const auto want = v_structures(g);
  std::vector<Pdag> result;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Pdag d(g.vertex_count());
    for (auto [u, v] : g.directed_edges()) d.add_directed(u, v);
    for (int i = 0; i < k; ++i) {
      auto [u, v] = undirected[i];
      if ((mask >> i) & 1)
        d.add_directed(u, v);
      else
        d.add_directed(v, u);
    }
    if (is_acyclic(d) && v_structures(d) == want) result.push_back(std::move(d));
  }
  return result;
}

std::uint64_t mec_size(const Pdag& d) {
  return brute_force_extensions(dag_to_cpdag(d)).size();
}

ValidationReport validate_enumeration(const Pdag& g, const std::vector<Pdag>& outputs) {
  ValidationReport report;
  std::vector<Pdag> expected = brute_force_extensions(g);
  report.expected_count = expected.size();
  report.actual_count = outputs.size();

  std::map<std::vector<std::uint32_t>, int> expected_keys;
  for (const Pdag& d : expected) expected_keys[d.canonical_edges()] = 0;
  std::map<std::vector<std::uint32_t>, int> seen;
  for (const Pdag& d : outputs) {
    auto key = d.canonical_edges();
    if (++seen[key] == 2) report.duplicates.push_back(d);
    auto it = expected_keys.find(key);
    if (it == expected_keys.end()) {
      report.extra.push_back(d);
    } else {
      it->second = 1;
    }
  }
  for (const Pdag& d : expected)
    if (expected_keys[d.canonical_edges()] == 0) report.missing.push_back(d);
  report.ok = report.duplicates.empty() && report.missing.empty() && report.extra.empty() &&
              report.expected_count == report.actual_count;
  return report;
}

}  // namespace oracle
}  // namespace mecenum
