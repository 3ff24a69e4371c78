/* io.hpp -- deterministic result-file emission: CSV tables, newline-delimited
 * JSON reports, measure serialization, and the run record (the only place
 * timestamps appear). */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapshift/census.hpp"
#include "gapshift/counting.hpp"
#include "gapshift/glue.hpp"
#include "gapshift/measures.hpp"
#include "gapshift/optimize.hpp"
#include "gapshift/transport.hpp"

namespace gapshift {

// Fixed-format double for CSV cells (deterministic for a given build).
std::string format_double(double v);

// CSV: n,count,h_n,ref_logA,ref_thmB5
std::string entropy_csv(const EntropyProfile& profile);
// CSV: n,count,growth,ref_growth_bound
std::string census_csv(const GrowthProfile& profile);
// CSV: period,best_num,best_den,orbit  (periods with at least one orbit)
std::string optimize_csv(const OptimizationResult& result);
// CSV: checkpoint,avg_num,avg_den
std::string checkpoint_csv(const std::vector<std::pair<long long, Rational>>& rows);
// CSV: gap,found,witness
std::string sweep_csv(const std::vector<std::pair<long long, std::optional<Word>>>& rows);

// NDJSON: one shadow-check record per line, then one summary record.
std::string glue_report_ndjson(const GlueResult& result);
// NDJSON: single summary record with dichotomy and argmax set.
std::string optimize_summary_ndjson(const OptimizationResult& result);

// {depth, atoms:[{word, num, den}]}
std::string measure_json(const EmpiricalMeasure& mu);
std::string measure_json(const FiniteMeasure& mu);

struct RunRecord {
  std::string command;
  std::string config_path;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string started_at, finished_at;  // ISO-8601 UTC
  std::vector<std::string> result_files;
  std::string status;  // "ok" | "failed"
};

std::string run_record_json(const RunRecord& record);

std::uint64_t fnv1a64(const std::string& bytes);
std::string iso8601_utc_now();

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace gapshift
