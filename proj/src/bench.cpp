#include "mecenum/bench.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mecenum/baselines.hpp"

namespace mecenum {
namespace bench {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Mcs: return "mcs";
    case Algorithm::Meek: return "meek";
    case Algorithm::Chickering: return "chickering";
    case Algorithm::Shd3: return "shd3";
  }
  throw std::invalid_argument("to_string: unknown algorithm");
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "mcs") return Algorithm::Mcs;
  if (name == "meek") return Algorithm::Meek;
  if (name == "chickering") return Algorithm::Chickering;
  if (name == "shd3") return Algorithm::Shd3;
  throw std::invalid_argument("unknown algorithm: " + name);
}

TimingSink::TimingSink(std::string instance_id, std::string algorithm, Budget budget)
    : instance_id_(std::move(instance_id)),
      algorithm_(std::move(algorithm)),
      budget_(budget),
      start_(Clock::now()),
      prev_(start_) {}

bool TimingSink::tick() {
  const Clock::time_point now = Clock::now();
  records_.push_back({instance_id_, algorithm_, records_.size(),
                      std::chrono::duration_cast<std::chrono::nanoseconds>(now - prev_).count()});
  const bool keep_going =
      records_.size() < budget_.max_outputs && now - start_ < budget_.max_time;
  prev_ = Clock::now();  // exclude our own bookkeeping from the next delay
  return keep_going;
}

namespace {

std::uint64_t run_algorithm(const Pdag& g, Algorithm algorithm, const EnumerationSink& sink) {
  switch (algorithm) {
    case Algorithm::Mcs: return enumerate_pdag(g, sink);
    case Algorithm::Meek: return meek_enum(g, sink);
    case Algorithm::Chickering: return chickering_enum(g, sink);
    case Algorithm::Shd3: return shd3_enum(g, sink);
  }
  throw std::invalid_argument("run_algorithm: unknown algorithm");
}

}  // namespace

std::vector<DelayRecord> measure_delays(const Pdag& g, Algorithm algorithm, Budget budget,
                                        const std::string& instance_id, bool warm_up) {
  if (warm_up) {
    TimingSink throwaway(instance_id, to_string(algorithm), budget);
    run_algorithm(g, algorithm, [&](const DagView& v) { return throwaway(v); });
  }
  TimingSink sink(instance_id, to_string(algorithm), budget);
  run_algorithm(g, algorithm, [&](const DagView& v) { return sink(v); });
  return sink.take_records();
}

DelayStats delay_stats(const std::vector<DelayRecord>& records, bool include_first) {
  std::vector<std::int64_t> delays;
  delays.reserve(records.size());
  for (std::size_t i = include_first ? 0 : 1; i < records.size(); ++i)
    delays.push_back(records[i].delay_ns);
  if (delays.empty()) throw std::invalid_argument("delay_stats: no records");

  DelayStats stats;
  stats.count = delays.size();
  double sum = 0.0;
  for (std::int64_t d : delays) {
    sum += static_cast<double>(d);
    stats.max_ns = std::max(stats.max_ns, d);
  }
  stats.mean_ns = sum / static_cast<double>(delays.size());
  for (std::size_t i = 0; i < kProportionMultipliers.size(); ++i) {
    const double bound = kProportionMultipliers[i] * stats.mean_ns;
    std::uint64_t within = 0;
    for (std::int64_t d : delays)
      if (static_cast<double>(d) <= bound) ++within;
    stats.proportions[i] = static_cast<double>(within) / static_cast<double>(delays.size());
  }
  return stats;
}

void emit_csv(const std::vector<DelayRecord>& records, std::ostream& out) {
  out << "instance_id,algorithm,output_index,delay_ns\n";
  for (const DelayRecord& r : records)
    out << r.instance_id << ',' << r.algorithm << ',' << r.output_index << ',' << r.delay_ns
        << '\n';
}

void emit_csv(const std::vector<StatsRow>& rows, std::ostream& out) {
  out << "algorithm,scenario,count,mean_ns,max_ns,p1,p2,p3,p5,p7,p10\n";
  for (const StatsRow& r : rows) {
    out << r.algorithm << ',' << r.scenario << ',' << r.stats.count << ',' << r.stats.mean_ns
        << ',' << r.stats.max_ns;
    for (double p : r.stats.proportions) out << ',' << p;
    out << '\n';
  }
}

namespace {

template <typename Rows>
void emit_csv_file(const Rows& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  emit_csv(rows, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void emit_csv(const std::vector<DelayRecord>& records, const std::string& path) {
  emit_csv_file(records, path);
}

void emit_csv(const std::vector<StatsRow>& rows, const std::string& path) {
  emit_csv_file(rows, path);
}

void emit_plot_csv(const std::vector<PlotPoint>& points, std::ostream& out) {
  out << "algorithm,n,mean_delay_ms\n";
  for (const PlotPoint& p : points) out << p.algorithm << ',' << p.n << ',' << p.mean_delay_ms << '\n';
}

std::vector<DelayRecord> parse_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "instance_id,algorithm,output_index,delay_ns")
    throw std::runtime_error("records CSV: bad or missing header");
  std::vector<DelayRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    DelayRecord r;
    std::string field;
    if (!std::getline(row, r.instance_id, ',') || !std::getline(row, r.algorithm, ',') ||
        !std::getline(row, field, ','))
      throw std::runtime_error("records CSV: malformed row: " + line);
    r.output_index = std::stoull(field);
    if (!std::getline(row, field)) throw std::runtime_error("records CSV: malformed row: " + line);
    r.delay_ns = std::stoll(field);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace bench
}  // namespace mecenum
