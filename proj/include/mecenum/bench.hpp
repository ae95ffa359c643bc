#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mecenum/enumerate.hpp"
#include "mecenum/graph.hpp"

namespace mecenum {
namespace bench {

enum class Algorithm { Mcs, Meek, Chickering, Shd3 };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& name);  // throws invalid_argument

/// One enumeration output: wall time elapsed since the previous output (or
/// since the start of the run, for the first).
struct DelayRecord {
  std::string instance_id;
  std::string algorithm;
  std::uint64_t output_index = 0;
  std::int64_t delay_ns = 0;
};

/// Multipliers k for the "fraction of delays <= k * mean" columns.
inline constexpr std::array<int, 6> kProportionMultipliers{1, 2, 3, 5, 7, 10};

struct DelayStats {
  std::uint64_t count = 0;
  double mean_ns = 0.0;
  std::int64_t max_ns = 0;
  std::array<double, 6> proportions{};  // aligned with kProportionMultipliers
};

struct Budget {
  std::uint64_t max_outputs = 100000;
  std::chrono::nanoseconds max_time = std::chrono::seconds(10);
};

/// Enumeration sink that records a DelayRecord per call and answers false
/// once the budget is spent. The clock is read before any bookkeeping and
/// re-read after it, so record-keeping cost stays out of the timed region;
/// callers that materialize graphs in a wrapping sink inherit the same
/// exclusion by calling this first.
class TimingSink {
 public:
  TimingSink(std::string instance_id, std::string algorithm, Budget budget);

  bool operator()(const DagView&) { return tick(); }
  bool tick();

  const std::vector<DelayRecord>& records() const { return records_; }
  std::vector<DelayRecord> take_records() { return std::move(records_); }

 private:
  using Clock = std::chrono::steady_clock;
  std::string instance_id_;
  std::string algorithm_;
  Budget budget_;
  Clock::time_point start_;
  Clock::time_point prev_;
  std::vector<DelayRecord> records_;
};

/// Runs the chosen enumeration algorithm on g with a timing sink and returns
/// one record per output, stopping at the budget. With warm_up, a first
/// untimed enumeration under the same budget is run and discarded so that
/// the measured run sees warm caches.
std::vector<DelayRecord> measure_delays(const Pdag& g, Algorithm algorithm, Budget budget,
                                        const std::string& instance_id = "g",
                                        bool warm_up = false);

/// Mean, max, and the proportion columns. include_first controls whether
/// the initialization-heavy first-output delay enters the statistics.
DelayStats delay_stats(const std::vector<DelayRecord>& records, bool include_first = true);

/// Labeled stats row for the stats CSV.
struct StatsRow {
  std::string algorithm;
  std::string scenario;
  DelayStats stats;
};

/// (n, mean delay in ms) series point for external plotting.
struct PlotPoint {
  std::string algorithm;
  int n = 0;
  double mean_delay_ms = 0.0;
};

void emit_csv(const std::vector<DelayRecord>& records, std::ostream& out);
void emit_csv(const std::vector<DelayRecord>& records, const std::string& path);
void emit_csv(const std::vector<StatsRow>& rows, std::ostream& out);
void emit_csv(const std::vector<StatsRow>& rows, const std::string& path);
void emit_plot_csv(const std::vector<PlotPoint>& points, std::ostream& out);

/// Inverse of the records emit_csv, for round-trip checks and tooling.
std::vector<DelayRecord> parse_records_csv(std::istream& in);

}  // namespace bench
}  // namespace mecenum
