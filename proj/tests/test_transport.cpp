#include <doctest.h>

#include <random>

#include "gapshift/errors.hpp"
#include "gapshift/metric.hpp"
#include "gapshift/transport.hpp"

using namespace gapshift;

namespace {
FiniteMeasure random_measure(std::mt19937_64& rng, std::size_t L) {
  std::vector<Word> pts(1 + rng() % 4);
  for (auto& w : pts) {
    w.assign(L, 0);
    for (auto& s : w) s = static_cast<Symbol>(rng() % 2);
  }
  return uniform_measure(pts);
}
}  // namespace

TEST_CASE("transport between equal diracs is the pure tail") {
  for (std::size_t L : {1u, 3u, 8u}) {
    Word x(L, 1);
    auto w = wasserstein(uniform_measure({x}), uniform_measure({x}));
    CHECK(w.lo == Rational(0));
    CHECK(w.hi == pow2_neg(static_cast<long>(L) - 1));
  }
}

TEST_CASE("transport between maximally separated diracs") {
  for (std::size_t L : {1u, 2u, 5u}) {
    Word x(L, 0), y(L, 1);
    auto w = wasserstein(uniform_measure({x}), uniform_measure({y}));
    CHECK(w.lo == Rational(2) - pow2_neg(static_cast<long>(L) - 1));
    CHECK(w.hi == Rational(2));
  }
}

TEST_CASE("half-and-half mixture against one of its atoms") {
  const long L = 4;
  Word x(L, 0), y(L, 1);
  auto mix = make_finite_measure({{x, Rational(1, 2)}, {y, Rational(1, 2)}});
  auto w = wasserstein(mix, uniform_measure({x}));
  CHECK(w.lo == Rational(1) - pow2_neg(L));
  CHECK(w.hi == Rational(1) + pow2_neg(L));
}

TEST_CASE("interval endpoints are ordered, symmetric and within diameter") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    std::size_t L = 1 + rng() % 6;
    auto mu = random_measure(rng, L);
    auto nu = random_measure(rng, L);
    auto ab = wasserstein(mu, nu);
    auto ba = wasserstein(nu, mu);
    CHECK(ab.lo == ba.lo);
    CHECK(ab.hi == ba.hi);
    CHECK(ab.lo <= ab.hi);
    CHECK(ab.lo >= 0);
    CHECK(ab.hi <= space_diameter() + pow2_neg(static_cast<long>(L) - 1));
  }
}

TEST_CASE("upper endpoints satisfy the triangle inequality") {
  // hi is the exact transport cost for the ground cost lo + 2^-(L-1), which
  // is itself a pseudometric on length-L words.
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    std::size_t L = 1 + rng() % 5;
    auto mu = random_measure(rng, L);
    auto nu = random_measure(rng, L);
    auto rho = random_measure(rng, L);
    auto ab = wasserstein(mu, nu);
    auto bc = wasserstein(nu, rho);
    auto ac = wasserstein(mu, rho);
    CHECK(ac.hi <= ab.hi + bc.hi);
  }
}

TEST_CASE("measure construction validates its input") {
  Word a{0, 1}, b{1, 1}, c{1};
  CHECK_THROWS_WITH_AS(make_finite_measure({{a, Rational(1, 2)}, {c, Rational(1, 2)}}),
                       "L mismatch", std::invalid_argument);
  CHECK_THROWS_AS(make_finite_measure({{a, Rational(1, 2)}, {b, Rational(1, 3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_finite_measure({{a, Rational(1, 2)}, {a, Rational(1, 2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_finite_measure({{a, Rational(-1, 2)}, {b, Rational(3, 2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(wasserstein(uniform_measure({a}), uniform_measure({c})),
                  std::invalid_argument);

  auto m = make_finite_measure({{a, Rational(1)}, {b, Rational(0)}});
  CHECK(m.atoms.size() == 1);  // zero-weight atom dropped
  CHECK(m.atoms[0].first == a);

  auto u = uniform_measure({a, b, a});  // duplicates merge
  REQUIRE(u.atoms.size() == 2);
  Rational wa = u.atoms[0].first == a ? u.atoms[0].second : u.atoms[1].second;
  CHECK(wa == Rational(2, 3));
}

TEST_CASE("perturbation bound on matched empirical samples") {
  std::vector<Word> xs = {Word{0, 0, 0, 0}, Word{1, 0, 1, 0}, Word{1, 1, 1, 1}};
  CHECK(perturbation_bound_check(xs, xs, 3, Rational(0)));

  // three pairs matched within 2^-3 (first 3+1 symbols equal), one arbitrary
  std::vector<Word> ys = {Word{0, 0, 0, 0, 1}, Word{1, 0, 1, 0, 0},
                          Word{1, 1, 1, 1, 1}, Word{0, 1, 0, 1, 1}};
  std::vector<Word> xs4 = {Word{0, 0, 0, 0, 0}, Word{1, 0, 1, 0, 1},
                           Word{1, 1, 1, 1, 0}, Word{1, 0, 0, 0, 0}};
  CHECK(perturbation_bound_check(xs4, ys, 3, Rational(1, 4)));

  // delta = 0 with a genuinely distant pair violates the precondition
  std::vector<Word> far = {Word{0, 0, 0, 0}, Word{1, 0, 1, 0}, Word{0, 1, 1, 1}};
  CHECK_THROWS_AS(perturbation_bound_check(xs, far, 3, Rational(0)), InfeasibleError);

  std::vector<Word> ragged = {Word{0, 0}, Word{1}};
  CHECK_THROWS_WITH_AS(perturbation_bound_check(ragged, ragged, 1, Rational(0)),
                       "length mismatch", std::invalid_argument);
  CHECK_THROWS_WITH_AS(perturbation_bound_check(xs, ys, 2, Rational(0)),
                       "length mismatch", std::invalid_argument);
}

TEST_CASE("perturbation bound holds on randomized certified pairs") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 25; ++t) {
    long long n = 2 + static_cast<long long>(rng() % 6);
    int m = static_cast<int>(rng() % 4);
    std::size_t L = static_cast<std::size_t>(m) + 2 + rng() % 6;
    long long d = static_cast<long long>(rng() % (static_cast<unsigned long long>(n) / 2 + 1));
    std::vector<Word> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
      Word x(L);
      for (auto& s : x) s = static_cast<Symbol>(rng() % 2);
      Word y = x;
      if (i < d) {
        for (auto& s : y) s = static_cast<Symbol>(rng() % 2);  // unconstrained pair
      } else {
        for (std::size_t k = static_cast<std::size_t>(m) + 1; k < L; ++k)
          y[k] = static_cast<Symbol>(rng() % 2);  // agree on the first m+1 symbols
      }
      xs[static_cast<std::size_t>(i)] = x;
      ys[static_cast<std::size_t>(i)] = y;
    }
    CHECK(perturbation_bound_check(xs, ys, m, Rational(d, n)));
  }
}
