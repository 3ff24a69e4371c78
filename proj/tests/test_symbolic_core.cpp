#include <doctest.h>

#include <algorithm>
#include <random>

#include "gapshift/base_subshift.hpp"
#include "gapshift/metric.hpp"
#include "gapshift/rational.hpp"
#include "gapshift/word.hpp"

using namespace gapshift;

TEST_CASE("word text formats round-trip") {
  Word w{1, 1, 0, 1};
  CHECK(format_word(w) == "1 1 0 1");
  CHECK(parse_word("1 1 0 1") == w);
  CHECK(format_word(w, true) == "1101");
  CHECK(parse_word("1101", true) == w);
  CHECK(format_word(Word{10, 35}, true) == "az");
  CHECK(parse_word("az", true) == Word{10, 35});
  CHECK_THROWS(parse_word("1 x 0"));
}

TEST_CASE("canonical rotation and minimal period") {
  CHECK(canonical_rotation(Word{1, 0}) == Word{0, 1});
  CHECK(canonical_rotation(Word{2, 0, 1}) == Word{0, 1, 2});
  CHECK(minimal_period(Word{1, 0, 1, 0}) == 2);
  CHECK(minimal_period(Word{1, 0, 0, 1}) == 4);
  CHECK(minimal_period(Word{1, 1, 1}) == 1);
}

TEST_CASE("full shift language") {
  auto z = make_full_shift(3);
  CHECK(base_contains(z, Word{0, 1, 2}));
  CHECK_THROWS_AS(base_contains(z, Word{0, 3}), std::invalid_argument);
  CHECK(base_language_count(z, 0) == 1);
  CHECK(base_language_count(z, 4) == 81);
}

TEST_CASE("golden-mean SFT counts are Fibonacci") {
  auto z = make_sft(2, {Word{1, 1}});
  long long fib[] = {1, 2, 3, 5, 8, 13, 21, 34};  // |L_n|, n = 0..7
  for (int n = 0; n <= 7; ++n)
    CHECK(base_language_count(z, static_cast<std::size_t>(n)) == fib[n]);
  CHECK(base_contains(z, Word{0, 1, 0, 1}));
  CHECK_FALSE(base_contains(z, Word{1, 1}));
}

TEST_CASE("SFT membership requires an infinite continuation") {
  // after a 1 nothing can follow, so 1 is not a factor of any point
  auto z = make_sft(2, {Word{1, 0}, Word{1, 1}});
  CHECK(base_contains(z, Word{0}));
  CHECK_FALSE(base_contains(z, Word{1}));
  CHECK(base_language_count(z, 1) == 1);
  CHECK(base_language_count(z, 3) == 1);  // only 000
}

TEST_CASE("factor closure and enumeration agreement on an SFT") {
  auto z = make_sft(2, {Word{1, 1}});
  for (std::size_t n = 1; n <= 10; ++n) {
    auto words = base_enumerate_language(z, n);
    CHECK(BigInt(words.size()) == base_language_count(z, n));
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (const auto& w : words)
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i; j < w.size(); ++j)
          CHECK(base_contains(z, Word(w.begin() + static_cast<long>(i),
                                      w.begin() + static_cast<long>(j) + 1)));
  }
}

TEST_CASE("union of copies relabels disjointly") {
  auto z = make_union_of_copies(make_full_shift(2), 3);
  CHECK(z.alphabet_size() == 6);
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(base_language_count(z, n) == 3 * base_language_count(make_full_shift(2), n));
  CHECK(base_contains(z, Word{0, 1}));
  CHECK(base_contains(z, Word{4, 5}));
  CHECK_FALSE(base_contains(z, Word{1, 2}));  // crosses copies
}

TEST_CASE("thue-morse substitution factors") {
  auto z = make_substitution(2, {Word{0, 1}, Word{1, 0}}, 0);
  CHECK(base_language_count(z, 1) == 2);
  CHECK(base_language_count(z, 2) == 4);
  CHECK(base_language_count(z, 3) == 6);
  CHECK(base_language_count(z, 4) == 10);
  CHECK(base_language_count(z, 5) == 12);
  CHECK_FALSE(base_contains(z, Word{0, 0, 0}));
  CHECK_FALSE(base_contains(z, Word{1, 1, 1}));
  CHECK(base_contains(z, Word{0, 1, 1, 0, 1, 0, 0, 1}));
}

TEST_CASE("word distance interval brackets the metric") {
  auto d = word_distance_interval(Word{0, 0, 0}, Word{1, 1, 1});
  CHECK(d.lo == Rational(7, 4));
  CHECK(d.hi == Rational(2));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 8;
    Word u(n), v(n);
    for (auto& s : u) s = static_cast<Symbol>(rng() % 2);
    for (auto& s : v) s = static_cast<Symbol>(rng() % 2);
    Word x = u, y = v;
    for (int k = 0; k < 20; ++k) {
      x.push_back(static_cast<Symbol>(rng() % 2));
      y.push_back(static_cast<Symbol>(rng() % 2));
    }
    auto iv = word_distance_interval(u, v);
    Rational t20 = truncated_distance(x, y, x.size());
    CHECK(iv.lo <= t20);
    CHECK(t20 <= iv.hi);
  }
}

TEST_CASE("big integer helpers") {
  CHECK(ceil_div(BigInt(7), BigInt(2)) == 4);
  CHECK(ceil_div(BigInt(8), BigInt(2)) == 4);
  CHECK(integer_kth_root(BigInt(63), 3) == 3);
  CHECK(integer_kth_root_ceil(BigInt(63), 3) == 4);
  CHECK(integer_kth_root_ceil(BigInt(64), 3) == 4);
  BigInt big = bigint_pow(BigInt(10), 120);
  CHECK(log_of(big) == doctest::Approx(120.0 * std::log(10.0)).epsilon(1e-12));
  CHECK(to_double(Rational(1, 3)) == doctest::Approx(1.0 / 3.0));
}
