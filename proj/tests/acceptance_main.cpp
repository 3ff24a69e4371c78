// Acceptance gate: runs every verification criterion at its stated tolerance
// and prints one pass/fail line each. Criterion 14 exercises the installed
// CLI end to end (`verify` must exit 0 inside its wall-clock budget).
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "gapshift/verify.hpp"

namespace {

int run_cli_verify(double* seconds) {
  namespace fs = std::filesystem;
  fs::path out = fs::temp_directory_path() / "gapshift_acceptance_verify";
  std::error_code ec;
  fs::remove_all(out, ec);
  std::string cmd = std::string(GAPSHIFT_CLI_PATH) + " verify --threads 4 --out " +
                    out.string() + " > " + (out.string() + ".log") + " 2>&1";
  fs::create_directories(out);
  auto t0 = std::chrono::steady_clock::now();
  int rc = std::system(cmd.c_str());
  *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

int main() {
  gapshift::VerifyOptions opts;
  opts.threads = 4;
  auto rows = gapshift::run_all_criteria(opts);

  bool all = true;
  for (const auto& r : rows) {
    std::printf("[%s] criterion %2d  %-38s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.seconds, r.detail.c_str());
    all = all && r.pass;
  }

  double cli_seconds = 0.0;
  int cli_rc = run_cli_verify(&cli_seconds);
  bool cli_ok = cli_rc == 0 && cli_seconds < 900.0;
  std::printf("[%s] criterion 14  %-38s %7.2fs  exit=%d\n", cli_ok ? "PASS" : "FAIL",
              "cli verify exits clean in budget", cli_seconds, cli_rc);
  all = all && cli_ok;

  std::printf("%s\n", all ? "acceptance: all criteria passed"
                          : "acceptance: FAILURES above");
  return all ? 0 : 1;
}
