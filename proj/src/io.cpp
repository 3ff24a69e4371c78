#include "gapshift/io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gapshift {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string entropy_csv(const EntropyProfile& profile) {
  std::ostringstream out;
  out << "n,count,h_n,ref_logA,ref_thmB5\n";
  for (const auto& r : profile.rows)
    out << r.n << "," << r.count.str() << "," << format_double(r.h) << ","
        << format_double(profile.ref_log_alpha) << ","
        << format_double(profile.ref_level) << "\n";
  return out.str();
}

std::string census_csv(const GrowthProfile& profile) {
  std::ostringstream out;
  out << "n,count,growth,ref_growth_bound\n";
  for (const auto& r : profile.rows)
    out << r.n << "," << r.count.str() << "," << format_double(r.growth) << ","
        << format_double(profile.ref_level) << "\n";
  return out.str();
}

std::string optimize_csv(const OptimizationResult& result) {
  std::ostringstream out;
  out << "period,best_num,best_den,orbit\n";
  for (const auto& row : result.table) {
    if (!row.best) continue;
    out << row.period << "," << rat_num(*row.best).str() << ","
        << rat_den(*row.best).str() << ","
        << (row.argmax ? format_word(*row.argmax) : "") << "\n";
  }
  return out.str();
}

std::string checkpoint_csv(const std::vector<std::pair<long long, Rational>>& rows) {
  std::ostringstream out;
  out << "checkpoint,avg_num,avg_den\n";
  for (const auto& [n, avg] : rows)
    out << n << "," << rat_num(avg).str() << "," << rat_den(avg).str() << "\n";
  return out.str();
}

std::string sweep_csv(const std::vector<std::pair<long long, std::optional<Word>>>& rows) {
  std::ostringstream out;
  out << "gap,found,witness\n";
  for (const auto& [gap, witness] : rows)
    out << gap << "," << (witness ? 1 : 0) << ","
        << (witness ? format_word(*witness) : "") << "\n";
  return out.str();
}

std::string glue_report_ndjson(const GlueResult& result) {
  std::ostringstream out;
  for (const auto& c : result.report.checks) {
    json rec{{"type", "shadow"},
             {"segment", c.segment},
             {"position", c.position},
             {"lo", rat_str(c.lo)},
             {"hi", rat_str(c.hi)},
             {"bound", rat_str(c.bound)},
             {"pass", c.pass}};
    out << rec.dump() << "\n";
  }
  json summary{{"type", "summary"},
               {"word", format_word(result.prefix)},
               {"periodic", result.cycle.has_value()},
               {"admissible", result.report.admissible},
               {"all_pass", result.report.all_pass}};
  out << summary.dump() << "\n";
  return out.str();
}

std::string optimize_summary_ndjson(const OptimizationResult& result) {
  json rec{{"type", "optimum"},
           {"best_num", rat_num(result.best).str()},
           {"best_den", rat_den(result.best).str()},
           {"argmax", format_word(result.argmax)}};
  json set = json::array();
  for (const auto& w : result.argmax_set) set.push_back(format_word(w));
  rec["argmax_set"] = set;
  if (result.zero_free_best) rec["zero_free_best"] = rat_str(*result.zero_free_best);
  if (result.zero_containing_best)
    rec["zero_containing_best"] = rat_str(*result.zero_containing_best);
  return rec.dump() + "\n";
}

namespace {

template <typename Atoms>
std::string atoms_json(int depth, const Atoms& atoms) {
  json rec;
  rec["depth"] = depth;
  json arr = json::array();
  for (const auto& [w, p] : atoms)
    arr.push_back(json{{"word", format_word(w)},
                       {"num", rat_num(p).str()},
                       {"den", rat_den(p).str()}});
  rec["atoms"] = arr;
  return rec.dump();
}

}  // namespace

std::string measure_json(const EmpiricalMeasure& mu) {
  return atoms_json(mu.depth, mu.weights);
}

std::string measure_json(const FiniteMeasure& mu) {
  return atoms_json(static_cast<int>(mu.prefix_length), mu.atoms);
}

std::string run_record_json(const RunRecord& record) {
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(record.config_hash));
  json rec{{"command", record.command},
           {"config_path", record.config_path},
           {"config_hash", hash},
           {"seed", record.seed},
           {"threads", record.threads},
           {"started_at", record.started_at},
           {"finished_at", record.finished_at},
           {"result_files", record.result_files},
           {"status", record.status}};
  return rec.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string iso8601_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gapshift
