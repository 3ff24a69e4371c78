#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "gapshift/config.hpp"
#include "gapshift/counting.hpp"
#include "gapshift/errors.hpp"
#include "gapshift/io.hpp"

using namespace gapshift;

TEST_CASE("default config text parses to the default experiment") {
  auto cfg = parse_config_text(default_config_text());
  CHECK(cfg.spec.tau == Rational(1));
  CHECK(cfg.spec.ambient_alphabet_size() == 2);
  CHECK(cfg.n_max == 12);
  CHECK(cfg.period_max == 12);
  CHECK(cfg.precision == 1);
  CHECK(cfg.glue.words == std::vector<Word>{{1, 1}, {1}});
  CHECK(cfg.schedule.factor == 4);
  auto phi = cfg.observable();
  CHECK(phi.depth == 1);
  CHECK(phi.value(Word{0}) == Rational(1));
  CHECK(phi.value(Word{1}) == Rational(0));
}

TEST_CASE("malformed configs raise ConfigError") {
  CHECK_THROWS_AS(parse_config_text("[spec]\ntau = 2/0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[spec]\ntau = 0.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[spec]\nbase = full\n"), ConfigError);  // tau missing
  CHECK_THROWS_AS(parse_config_text("[spec]\ntau = 1\nbogus = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[spec]\ntau = 1\ntau = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[mystery]\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("tau = 1\n"), ConfigError);  // key before section
  CHECK_THROWS_AS(
      parse_config_text("[spec]\ntau = 1\nbase = substitution\nalphabet = 2\nrule.0 = 0 1\n"),
      ConfigError);  // rule.1 missing
}

TEST_CASE("spec section builds every base kind") {
  auto sft = parse_config_text(
      "[spec]\ntau = 1/2\nbase = sft\nalphabet = 2\nforbidden = 1 1\n");
  CHECK(sft.spec.tau == Rational(1, 2));
  CHECK(base_language_count(sft.spec.base, 3) == 5);

  auto sub = parse_config_text(
      "[spec]\ntau = 1\nbase = substitution\nalphabet = 2\n"
      "rule.0 = 0 1\nrule.1 = 1 0\nseed = 0\n");
  CHECK(base_language_count(sub.spec.base, 3) == 6);

  auto uni = parse_config_text("[spec]\ntau = 1\nbase = full\nalphabet = 2\ncopies = 3\n");
  CHECK(uni.spec.base.alphabet_size() == 6);
  CHECK(uni.spec.ambient_alphabet_size() == 7);
}

TEST_CASE("observable section is an affine cylinder indicator") {
  auto cfg = parse_config_text(
      "[spec]\ntau = 1\n[observable]\nword = 0 1\nscale = -2/3\noffset = 5\n");
  auto phi = cfg.observable();
  CHECK(phi.depth == 2);
  CHECK(phi.value(Word{0, 1}) == Rational(-2, 3) + Rational(5));
  CHECK(phi.value(Word{1, 1}) == Rational(5));
}

TEST_CASE("format_double is stable and compact") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("entropy csv golden") {
  auto prof = entropy_profile(make_gapped(make_full_shift(1), Rational(1)), 2);
  std::string csv = entropy_csv(prof);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,count,h_n,ref_logA,ref_thmB5");
  std::getline(in, line);
  CHECK(line == "1,2," + format_double(std::log(2.0)) + ",0," +
                    format_double(std::log(2.0)));
  std::getline(in, line);
  CHECK(line == "2,4," + format_double(std::log(4.0) / 2) + ",0," +
                    format_double(std::log(2.0)));
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("csv emitters quote nothing and stay line-oriented") {
  std::string sweep = sweep_csv({{2, std::nullopt}, {5, Word{1, 1, 0, 0, 0, 1}}});
  CHECK(sweep ==
        "gap,found,witness\n"
        "2,0,\n"
        "5,1,1 1 0 0 0 1\n");

  std::string cps = checkpoint_csv({{4, Rational(1, 2)}, {20, Rational(9, 10)}});
  CHECK(cps ==
        "checkpoint,avg_num,avg_den\n"
        "4,1,2\n"
        "20,9,10\n");
}

TEST_CASE("ndjson reports parse back and carry the right fields") {
  auto x1 = make_gapped(make_full_shift(1), Rational(1));
  auto res = glue(x1, default_layout(x1, {Word{1, 1}, Word{1}}, 1));
  std::string nd = glue_report_ndjson(res);
  std::istringstream in(nd);
  std::string line;
  int shadows = 0;
  bool saw_summary = false;
  while (std::getline(in, line)) {
    auto rec = nlohmann::json::parse(line);
    if (rec["type"] == "shadow") {
      ++shadows;
      CHECK(rec["bound"] == "1/2");
      CHECK(rec["pass"] == true);
    } else {
      CHECK(rec["type"] == "summary");
      CHECK(rec["word"] == "1 1 0 0 0 0 1 0");
      CHECK(rec["periodic"] == false);
      CHECK(rec["admissible"] == true);
      CHECK(rec["all_pass"] == true);
      saw_summary = true;
    }
  }
  CHECK(shadows == static_cast<int>(res.report.checks.size()));
  CHECK(saw_summary);
}

TEST_CASE("measure serialization") {
  EmpiricalMeasure mu = empirical_measure(parse_word("1010101010", true), 2, 1);
  auto rec = nlohmann::json::parse(measure_json(mu));
  CHECK(rec["depth"] == 1);
  REQUIRE(rec["atoms"].size() == 2);
  CHECK(rec["atoms"][0]["word"] == "0");
  CHECK(rec["atoms"][0]["num"] == "1");
  CHECK(rec["atoms"][0]["den"] == "2");
}

TEST_CASE("run record and content hash") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);

  RunRecord rec;
  rec.command = "entropy";
  rec.config_path = "(default)";
  rec.config_hash = fnv1a64(default_config_text());
  rec.seed = 1729;
  rec.threads = 4;
  rec.started_at = "2024-01-01T00:00:00Z";
  rec.finished_at = "2024-01-01T00:00:01Z";
  rec.result_files = {"entropy.csv"};
  rec.status = "ok";
  auto parsed = nlohmann::json::parse(run_record_json(rec));
  CHECK(parsed["command"] == "entropy");
  CHECK(parsed["seed"] == 1729);
  CHECK(parsed["threads"] == 4);
  CHECK(parsed["status"] == "ok");
  CHECK(parsed["result_files"][0] == "entropy.csv");
}

TEST_CASE("file round trip") {
  std::string path = "roundtrip_test.tmp";
  write_file(path, "alpha\nbeta\n");
  CHECK(read_file(path) == "alpha\nbeta\n");
  std::remove(path.c_str());
  CHECK_THROWS(read_file("definitely/not/here.txt"));
}
