/* gapshift -- CLI over the tau-gapped subshift laboratory.
 *
 * Commands: entropy, periodic, glue, optimize, irregular, verify.
 * Exit codes: 0 success, 1 property failure / infeasible request,
 * 2 configuration error, 3 resource cap exceeded. Result files are
 * deterministic for a fixed config; timestamps live only in run_record.json. */

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gapshift/census.hpp"
#include "gapshift/config.hpp"
#include "gapshift/counting.hpp"
#include "gapshift/errors.hpp"
#include "gapshift/glue.hpp"
#include "gapshift/io.hpp"
#include "gapshift/measures.hpp"
#include "gapshift/optimize.hpp"
#include "gapshift/schedule.hpp"
#include "gapshift/verify.hpp"

namespace fs = std::filesystem;
using namespace gapshift;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t seed = 1729;
  int threads = 4;
};

void print_error(const char* kind, const std::string& message) {
  nlohmann::json rec{{"error", kind}, {"message", message}};
  std::fprintf(stderr, "%s\n", rec.dump().c_str());
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    print_error("config", e.what());
    return 2;
  } catch (const ResourceCapError& e) {
    print_error("resource-cap", e.what());
    return 3;
  } catch (const InfeasibleError& e) {
    print_error("infeasible", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("runtime", e.what());
    return 1;
  }
}

struct LoadedRun {
  ExperimentConfig cfg;
  RunRecord record;
};

LoadedRun begin_run(const CommonOpts& o, const std::string& command) {
  std::string text;
  if (o.config_path.empty()) {
    text = default_config_text();
  } else {
    try {
      text = read_file(o.config_path);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  LoadedRun run;
  run.cfg = parse_config_text(text);
  run.record.command = command;
  run.record.config_path = o.config_path.empty() ? "(default)" : o.config_path;
  run.record.config_hash = fnv1a64(text);
  run.record.seed = o.seed;
  run.record.threads = o.threads;
  run.record.started_at = iso8601_utc_now();
  fs::create_directories(o.out_dir);
  return run;
}

void finish_run(const CommonOpts& o, LoadedRun& run,
                std::vector<std::string> files, const std::string& status) {
  run.record.result_files = std::move(files);
  run.record.status = status;
  run.record.finished_at = iso8601_utc_now();
  write_file(o.out_dir + "/run_record.json", run_record_json(run.record));
}

int cmd_entropy(const CommonOpts& o) {
  LoadedRun run = begin_run(o, "entropy");
  EntropyProfile prof = entropy_profile(run.cfg.spec, run.cfg.n_max, run.cfg.caps);
  std::string path = o.out_dir + "/entropy.csv";
  write_file(path, entropy_csv(prof));
  finish_run(o, run, {path}, "ok");
  const auto& last = prof.rows.back();
  std::printf("entropy profile -> %s\n", path.c_str());
  std::printf("h_%lld = %s  (ln|A| = %s, ln2 + ln|A|/(1+tau) = %s)\n",
              last.n, format_double(last.h).c_str(),
              format_double(prof.ref_log_alpha).c_str(),
              format_double(prof.ref_level).c_str());
  return 0;
}

int cmd_periodic(const CommonOpts& o) {
  LoadedRun run = begin_run(o, "periodic");
  GrowthProfile prof =
      growth_profile(run.cfg.spec, run.cfg.period_max, run.cfg.caps, o.threads);
  std::string path = o.out_dir + "/periodic.csv";
  write_file(path, census_csv(prof));
  finish_run(o, run, {path}, "ok");
  const auto& last = prof.rows.back();
  std::printf("periodic census -> %s\n", path.c_str());
  std::printf("|Per_%lld| = %s, growth %s vs reference bound %s\n", last.n,
              last.count.str().c_str(), format_double(last.growth).c_str(),
              format_double(prof.ref_level).c_str());
  return 0;
}

int cmd_glue(const CommonOpts& o) {
  LoadedRun run = begin_run(o, "glue");
  const auto& g = run.cfg.glue;
  if (g.mode == ExperimentConfig::GlueCfg::Mode::Sweep) {
    std::vector<std::pair<long long, std::optional<Word>>> rows;
    for (long long gap = g.gap_min; gap <= g.gap_max; ++gap)
      rows.emplace_back(gap,
                        min_gap_witness_search(run.cfg.spec, g.u, g.v, g.m, gap, run.cfg.caps));
    std::string path = o.out_dir + "/gap_sweep.csv";
    write_file(path, sweep_csv(rows));
    finish_run(o, run, {path}, "ok");
    long long first_found = -1;
    for (const auto& [gap, w] : rows)
      if (w && first_found < 0) first_found = gap;
    std::printf("gap sweep -> %s\n", path.c_str());
    if (first_found >= 0)
      std::printf("first witness at gap %lld (gap function M = %lld)\n", first_found,
                  gap_function(run.cfg.spec, static_cast<long long>(g.u.size()), g.m));
    else
      std::printf("no witness in [%lld, %lld]\n", g.gap_min, g.gap_max);
    return 0;
  }

  GlueRequest req;
  if (g.starts.empty()) {
    req = default_layout(run.cfg.spec, g.words, g.m, g.closure);
  } else {
    if (g.starts.size() != g.words.size())
      throw ConfigError("glue starts and words disagree in count");
    for (std::size_t i = 0; i < g.words.size(); ++i)
      req.segments.push_back({g.words[i], g.starts[i]});
    req.m = g.m;
    req.closure = g.closure;
    if (g.closure == Closure::Periodic)
      req.period = g.period > 0
                       ? g.period
                       : req.segments.back().end() - req.segments.front().start +
                             gap_function(run.cfg.spec,
                                          static_cast<long long>(req.segments.back().u.size()),
                                          g.m);
  }
  GlueResult res = glue(run.cfg.spec, req, run.cfg.caps);
  std::string path = o.out_dir + "/glue_report.ndjson";
  write_file(path, glue_report_ndjson(res));
  bool ok = res.report.all_pass && res.report.admissible;
  finish_run(o, run, {path}, ok ? "ok" : "failed");
  std::printf("glue report -> %s\n", path.c_str());
  std::printf("witness: %s\n", format_word(res.prefix).c_str());
  if (res.cycle)
    std::printf("periodic closure with period %zu\n", res.cycle->length());
  std::printf("admissible: %s, all %zu bounds pass: %s\n",
              res.report.admissible ? "yes" : "no", res.report.checks.size(),
              res.report.all_pass ? "yes" : "no");
  if (!ok) {
    print_error("property", "glue verification failed");
    return 1;
  }
  return 0;
}

int cmd_optimize(const CommonOpts& o) {
  LoadedRun run = begin_run(o, "optimize");
  OptimizationResult opt = ergodic_optimum(run.cfg.spec, run.cfg.observable(),
                                           run.cfg.period_max, run.cfg.caps, o.threads);
  std::string csv_path = o.out_dir + "/optimize.csv";
  std::string sum_path = o.out_dir + "/optimize_summary.ndjson";
  write_file(csv_path, optimize_csv(opt));
  write_file(sum_path, optimize_summary_ndjson(opt));
  finish_run(o, run, {csv_path, sum_path}, "ok");
  std::printf("optimization table -> %s\n", csv_path.c_str());
  std::printf("periodic lower bound for beta(phi): %s at %s\n",
              rat_str(opt.best).c_str(), format_word(opt.argmax).c_str());
  if (opt.zero_free_best)
    std::printf("zero-free best: %s\n", rat_str(*opt.zero_free_best).c_str());
  if (opt.zero_containing_best)
    std::printf("zero-containing best: %s\n", rat_str(*opt.zero_containing_best).c_str());
  return 0;
}

int cmd_irregular(const CommonOpts& o) {
  LoadedRun run = begin_run(o, "irregular");
  const auto& s = run.cfg.schedule;
  OscillationSchedule sched = make_geometric_schedule(s.word, s.factor, s.phases);
  long long N = s.length > 0 ? s.length : sched.total_length();
  Word x = build_oscillating_point(run.cfg.spec, sched, N, run.cfg.caps);
  Observable phi = run.cfg.observable();
  std::vector<long long> cps;
  for (long long cp : sched.checkpoints())
    if (cp + phi.depth - 1 <= N) cps.push_back(cp);
  if (cps.empty()) throw InfeasibleError("infeasible request: no checkpoint fits the length");
  std::vector<std::pair<long long, Rational>> rows;
  for (long long cp : cps) rows.emplace_back(cp, birkhoff_average(x, phi, cp));
  OscillationResult osc = oscillation(x, phi, cps);
  std::string path = o.out_dir + "/checkpoints.csv";
  write_file(path, checkpoint_csv(rows));
  finish_run(o, run, {path}, "ok");
  std::printf("checkpoint averages -> %s\n", path.c_str());
  std::printf("oscillation over %zu checkpoints: min %s, max %s, gap %s\n", cps.size(),
              rat_str(osc.min_avg).c_str(), rat_str(osc.max_avg).c_str(),
              rat_str(osc.gap).c_str());
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  LoadedRun run = begin_run(o, "verify");
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.threads = o.threads;
  vo.caps = run.cfg.caps;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CriterionResult> rows = run_all_criteria(vo);
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool all = true;
  const CriterionResult* first_fail = nullptr;
  std::string ndjson;
  for (const auto& r : rows) {
    std::printf("[%s] %2d %-30s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    if (!r.pass && !first_fail) first_fail = &r;
    all = all && r.pass;
    nlohmann::json rec{
        {"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
    ndjson += rec.dump() + "\n";
  }
  std::string path = o.out_dir + "/verify_results.ndjson";
  write_file(path, ndjson);
  finish_run(o, run, {path}, all ? "ok" : "failed");
  std::printf("%zu/%zu criteria pass in %.2fs -> %s\n",
              static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(),
                                                     [](const auto& r) { return r.pass; })),
              rows.size(), total, path.c_str());
  if (total > run.cfg.wall_clock_seconds) {
    print_error("resource-cap", "wall-clock budget exceeded");
    return 3;
  }
  if (!all) {
    print_error("property", "criterion " + std::to_string(first_fail->id) + " (" +
                                first_fail->name + "): " + first_fail->detail);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tau-gapped subshifts: language counts, periodic censuses, orbit gluing,\n"
               "ergodic optimization and the acceptance verification suite"};
  app.require_subcommand(1);

  CommonOpts common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--config", common.config_path,
                    "experiment config file (omit for the built-in default)");
    sub->add_option("--out", common.out_dir, "output directory");
    sub->add_option("--seed", common.seed, "seed for the randomized property suites");
    sub->add_option("--threads", common.threads, "worker threads")
        ->check(CLI::PositiveNumber);
  };

  add_common(app.add_subcommand("entropy", "word counts and entropy profile"));
  add_common(app.add_subcommand("periodic", "periodic-point census and growth"));
  add_common(app.add_subcommand("glue", "shadowing witness construction or gap sweep"));
  add_common(app.add_subcommand("optimize", "ergodic optimization over periodic orbits"));
  add_common(app.add_subcommand("irregular", "oscillating-point schedule and checkpoints"));
  add_common(app.add_subcommand("verify", "run the full acceptance suite"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand("entropy")) return run_guarded([&] { return cmd_entropy(common); });
  if (app.got_subcommand("periodic")) return run_guarded([&] { return cmd_periodic(common); });
  if (app.got_subcommand("glue")) return run_guarded([&] { return cmd_glue(common); });
  if (app.got_subcommand("optimize")) return run_guarded([&] { return cmd_optimize(common); });
  if (app.got_subcommand("irregular")) return run_guarded([&] { return cmd_irregular(common); });
  return run_guarded([&] { return cmd_verify(common); });
}
