#include <doctest.h>

#include <random>

#include "gapshift/measures.hpp"

using namespace gapshift;

TEST_CASE("empirical measure examples") {
  Word alt = parse_word("1010101010", true);
  auto mu = empirical_measure(alt, 2, 1);
  CHECK(mu.depth == 1);
  REQUIRE(mu.weights.size() == 2);
  CHECK(mu.weights.at(Word{0}) == Rational(1, 2));
  CHECK(mu.weights.at(Word{1}) == Rational(1, 2));

  Word zeros(12, 0);
  auto nu = empirical_measure(zeros, 8, 3);
  REQUIRE(nu.weights.size() == 1);
  CHECK(nu.weights.at(Word{0, 0, 0}) == Rational(1));

  auto rho = empirical_measure(parse_word("10001000", true), 4, 2);
  CHECK(rho.weights.at(Word{1, 0}) == Rational(1, 4));
  CHECK(rho.weights.at(Word{0, 0}) == Rational(1, 2));
  CHECK(rho.weights.at(Word{0, 1}) == Rational(1, 4));
  CHECK(rho.weights.size() == 3);
}

TEST_CASE("empirical weights always sum to one") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    long long n = 1 + static_cast<long long>(rng() % 10);
    int k = 1 + static_cast<int>(rng() % 4);
    Word x(static_cast<std::size_t>(n + k - 1));
    for (auto& s : x) s = static_cast<Symbol>(rng() % 3);
    auto mu = empirical_measure(x, n, k);
    Rational total = 0;
    for (const auto& [w, wt] : mu.weights) {
      CHECK(w.size() == static_cast<std::size_t>(k));
      CHECK(wt > 0);
      total += wt;
    }
    CHECK(total == Rational(1));
  }
}

TEST_CASE("window arguments are validated") {
  CHECK_THROWS_AS(empirical_measure(Word{1, 0}, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(empirical_measure(Word{1, 0, 1}, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(birkhoff_average(Word{1}, indicator(Word{0, 0}), 1),
                  std::invalid_argument);
}

TEST_CASE("birkhoff average examples") {
  auto chi0 = indicator(Word{0});
  CHECK(birkhoff_average(parse_word("1010", true), chi0, 4) == Rational(1, 2));
  CHECK(birkhoff_average(parse_word("1000", true), chi0, 4) == Rational(3, 4));
  CHECK(birkhoff_average(parse_word("11000010", true), chi0, 8) == Rational(5, 8));
  CHECK(birkhoff_average(parse_word("1010", true), constant_observable(Rational(7, 3)), 3) ==
        Rational(7, 3));
}

TEST_CASE("birkhoff average is the empirical integral") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    long long n = 2 + static_cast<long long>(rng() % 9);
    int k = 1 + static_cast<int>(rng() % 3);
    Word x(static_cast<std::size_t>(n + k - 1));
    for (auto& s : x) s = static_cast<Symbol>(rng() % 2);
    Observable phi;
    phi.depth = k;
    Word w(static_cast<std::size_t>(k));
    for (auto& s : w) s = static_cast<Symbol>(rng() % 2);
    phi.table[w] = Rational(static_cast<long long>(rng() % 7) - 3,
                            1 + static_cast<long long>(rng() % 4));
    auto mu = empirical_measure(x, n, k);
    Rational integral = 0;
    for (const auto& [word, wt] : mu.weights) integral += wt * phi.value(word);
    CHECK(birkhoff_average(x, phi, n) == integral);
  }
}

TEST_CASE("cyclic averages wrap the window") {
  auto chi0 = indicator(Word{0});
  CyclicWord ten(Word{1, 0});
  CHECK(birkhoff_average_cyclic(ten, chi0, 2) == Rational(1, 2));
  CHECK(birkhoff_average_cyclic(ten, chi0, 7) == Rational(3, 7));
  auto chi00 = indicator(Word{0, 0});
  CyclicWord hundred(Word{1, 0, 0});
  CHECK(birkhoff_average_cyclic(hundred, chi00, 3) == Rational(1, 3));  // 00 at offset 1 only

  // over a full period the cyclic and linear routes agree
  Word x{1, 0, 0, 1, 0, 0};
  CHECK(birkhoff_average_cyclic(hundred, chi0, 6) == birkhoff_average(x, chi0, 6));
}

TEST_CASE("oscillation over checkpoints") {
  auto chi0 = indicator(Word{0});
  Word flat(20, 0);
  auto r0 = oscillation(flat, constant_observable(Rational(2)), {1, 5, 10});
  CHECK(r0.gap == Rational(0));
  CHECK(r0.min_avg == Rational(2));
  CHECK(r0.max_avg == Rational(2));

  Word alt = parse_word("1010101010", true);
  auto r1 = oscillation(alt, chi0, {2, 4, 8});
  CHECK(r1.gap == Rational(0));
  CHECK(r1.min_avg == Rational(1, 2));

  Word mix = parse_word("110000101010", true);
  auto r2 = oscillation(mix, chi0, {2, 6, 12});
  CHECK(r2.min_avg == Rational(0));      // n = 2 sees "11"
  CHECK(r2.max_avg == Rational(2, 3));   // n = 6 sees "110000"
  CHECK(r2.gap == Rational(2, 3));
}
