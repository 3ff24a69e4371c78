#include <doctest.h>

#include <random>

#include "gapshift/errors.hpp"
#include "gapshift/glue.hpp"

using namespace gapshift;

namespace {
GappedSubshiftSpec binary_tau(long long p, long long q = 1) {
  return make_gapped(make_full_shift(1), Rational(p, q));
}
}  // namespace

TEST_CASE("two segments glue into the documented shadowing word") {
  auto x1 = binary_tau(1);
  GlueRequest req;
  req.segments = {{Word{1, 1}, 0}, {Word{1}, 6}};
  req.m = 1;
  auto res = glue(x1, req);
  CHECK(res.prefix == Word{1, 1, 0, 0, 0, 0, 1, 0});
  CHECK_FALSE(res.cycle.has_value());
  CHECK(res.report.admissible);
  CHECK(res.report.all_pass);
  CHECK_FALSE(res.report.checks.empty());
  for (const auto& c : res.report.checks) {
    CHECK(c.bound == Rational(1, 2));
    CHECK(c.hi <= c.bound);
    CHECK(c.lo <= c.hi);
    CHECK(c.pass);
  }
}

TEST_CASE("default layout reproduces the canonical spacing") {
  auto x1 = binary_tau(1);
  auto req = default_layout(x1, {Word{1, 1}, Word{1}}, 1);
  REQUIRE(req.segments.size() == 2);
  CHECK(req.segments[0].start == 0);
  CHECK(req.segments[1].start == 1 + gap_function(x1, 2, 1));  // b_1 + M(2, 1/2)
  CHECK(req.segments[1].start == 6);
  auto res = glue(x1, req);
  CHECK(res.prefix == Word{1, 1, 0, 0, 0, 0, 1, 0});
}

TEST_CASE("single segment glues trivially") {
  auto x2 = binary_tau(2);
  GlueRequest req;
  req.segments = {{Word{1, 1}, 0}};
  req.m = 2;
  auto res = glue(x2, req);
  CHECK(res.prefix == Word{1, 1, 0, 0});  // u . 0^m
  CHECK(res.report.admissible);
  CHECK(res.report.all_pass);
}

TEST_CASE("periodic closure yields an admissible cycle") {
  auto x1 = binary_tau(1);
  GlueRequest req;
  req.segments = {{Word{1}, 0}, {Word{1}, 4}};
  req.m = 1;
  req.closure = Closure::Periodic;
  req.period = 8;
  auto res = glue(x1, req);
  CHECK(res.prefix == Word{1, 0, 0, 0, 1, 0, 0, 0});
  REQUIRE(res.cycle.has_value());
  CHECK(res.cycle->period == res.prefix);
  CHECK(cyclic_admissible(x1, res.cycle->period));
  CHECK(res.report.all_pass);

  auto canon = default_layout(x1, {Word{1}, Word{1}}, 1, Closure::Periodic);
  CHECK(canon.period == 4 + gap_function(x1, 1, 1));  // b_2 - a_1 + M(1, 1/2)
  CHECK(glue(x1, canon).report.all_pass);
}

TEST_CASE("infeasible requests are rejected with the typed error") {
  auto x1 = binary_tau(1);

  GlueRequest tight;  // gap 3 < M(2, 1/2) = 5
  tight.segments = {{Word{1, 1}, 0}, {Word{1}, 4}};
  tight.m = 1;
  CHECK_THROWS_AS(glue(x1, tight), InfeasibleError);

  GlueRequest bad_seg;  // 1101 not in the language
  bad_seg.segments = {{parse_word("1101", true), 0}};
  bad_seg.m = 0;
  CHECK_THROWS_AS(glue(x1, bad_seg), InfeasibleError);

  GlueRequest short_cycle;  // closing gap 2 < M(1, 1/2) = 3
  short_cycle.segments = {{Word{1}, 0}};
  short_cycle.m = 1;
  short_cycle.closure = Closure::Periodic;
  short_cycle.period = 3;
  CHECK_THROWS_AS(glue(x1, short_cycle), InfeasibleError);

  GlueRequest empty;
  empty.m = 0;
  CHECK_THROWS_AS(glue(x1, empty), InfeasibleError);

  GlueRequest unordered;  // a_2 <= b_1
  unordered.segments = {{Word{1, 1}, 0}, {Word{1}, 1}};
  unordered.m = 0;
  CHECK_THROWS_AS(glue(x1, unordered), InfeasibleError);
}

TEST_CASE("witness search brackets the gap function") {
  auto x1 = binary_tau(1);
  Word u{1, 1}, v{0, 1};
  CHECK_FALSE(min_gap_witness_search(x1, u, v, 1, 2).has_value());
  auto w = min_gap_witness_search(x1, u, v, 1, 5);
  REQUIRE(w.has_value());
  CHECK(contains_word(x1, *w));

  // epsilon >= 2 collapses the requirement to bare admissibility
  auto w2 = min_gap_witness_search(x1, Word{1}, Word{1}, -1, 1);
  REQUIRE(w2.has_value());
  CHECK(contains_word(x1, *w2));
}

TEST_CASE("no witness below the separation the gap function certifies") {
  for (long long tau : {1, 2}) {
    auto spec = binary_tau(tau);
    for (std::size_t len = 1; len <= 2; ++len) {
      Word u(len, 1);
      Word v{0, 1};
      for (int m = 0; m <= 1; ++m) {
        long long M = gap_function(spec, static_cast<long long>(len), m);
        for (long long g = 1; g + 2 <= M; ++g)
          CHECK_FALSE(min_gap_witness_search(spec, u, v, m, g).has_value());
        CHECK(min_gap_witness_search(spec, u, v, m, M).has_value());
      }
    }
  }
}

TEST_CASE("randomized canonical layouts always verify") {
  std::mt19937_64 rng(11);
  std::vector<GappedSubshiftSpec> specs = {
      binary_tau(1), binary_tau(1, 2),
      make_gapped(make_sft(2, {Word{1, 1}}), Rational(1)),
  };
  for (int t = 0; t < 40; ++t) {
    const auto& spec = specs[t % specs.size()];
    int amb = spec.ambient_alphabet_size();
    std::vector<Word> words(1 + rng() % 3);
    for (auto& w : words) {
      do {
        w.assign(1 + rng() % 4, 0);
        for (auto& s : w) s = static_cast<Symbol>(rng() % amb);
      } while (!contains_word(spec, w));
    }
    int m = static_cast<int>(rng() % 3);
    bool periodic = rng() % 2 == 0;
    auto req = default_layout(spec, words, m,
                              periodic ? Closure::Periodic : Closure::OpenEnd);
    auto res = glue(spec, req);
    CHECK(res.report.admissible);
    CHECK(res.report.all_pass);
    if (periodic) {
      REQUIRE(res.cycle.has_value());
      CHECK(cyclic_admissible(spec, res.cycle->period));
    }
  }
}
