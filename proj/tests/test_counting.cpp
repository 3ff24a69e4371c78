#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gapshift/counting.hpp"

using namespace gapshift;

namespace {
GappedSubshiftSpec binary_tau(long long p, long long q = 1) {
  return make_gapped(make_full_shift(1), Rational(p, q));
}

BigInt brute_count(const GappedSubshiftSpec& spec, long long n) {
  int amb = spec.ambient_alphabet_size();
  Word w(static_cast<std::size_t>(n), 0);
  BigInt total = 0;
  while (true) {
    if (contains_word_naive(spec, w)) ++total;
    std::size_t i = 0;
    while (i < w.size() && w[i] == amb - 1) w[i++] = 0;
    if (i == w.size()) break;
    ++w[i];
  }
  return n == 0 ? BigInt(1) : total;
}
}  // namespace

TEST_CASE("language count anchors at tau = 1, binary ambient") {
  auto x1 = binary_tau(1);
  CHECK(language_count(x1, 0) == 1);
  CHECK(language_count(x1, 1) == 2);
  CHECK(language_count(x1, 4) == 15);
  CHECK(language_count(x1, 5) == 28);
}

TEST_CASE("DP count equals the naive census") {
  std::vector<GappedSubshiftSpec> specs = {
      binary_tau(1), binary_tau(1, 2), binary_tau(2),
      make_gapped(make_full_shift(2), Rational(1)),
      make_gapped(make_sft(2, {Word{1, 1}}), Rational(3, 2)),
  };
  for (const auto& spec : specs)
    for (long long n = 0; n <= 9; ++n)
      CHECK(language_count(spec, n) == brute_count(spec, n));
}

TEST_CASE("entropy profile rows and reference levels") {
  auto prof = entropy_profile(binary_tau(1), 4);
  REQUIRE(prof.rows.size() == 4);
  CHECK(prof.rows[0].n == 1);
  CHECK(prof.rows[0].h == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(prof.rows[3].count == 15);
  CHECK(prof.rows[3].h == doctest::Approx(std::log(15.0) / 4).epsilon(1e-12));
  CHECK(prof.ref_log_alpha == doctest::Approx(0.0));
  CHECK(prof.ref_level == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  auto prof5 = entropy_profile(make_gapped(make_full_shift(5), Rational(1)), 3);
  CHECK(prof5.ref_log_alpha == doctest::Approx(std::log(5.0)).epsilon(1e-12));
  CHECK(prof5.ref_level ==
        doctest::Approx(std::log(2.0) + std::log(5.0) / 2).epsilon(1e-12));
}

TEST_CASE("counts are submultiplicative") {
  for (const auto& spec : {binary_tau(1), binary_tau(1, 2), binary_tau(2)}) {
    std::vector<BigInt> c(17);
    for (long long n = 0; n <= 16; ++n) c[static_cast<std::size_t>(n)] = language_count(spec, n);
    for (std::size_t m = 1; m <= 15; ++m)
      for (std::size_t n = 1; m + n <= 16; ++n)
        CHECK(c[m + n] <= c[m] * c[n]);
  }
}

TEST_CASE("word-class counts against direct enumeration") {
  auto x1 = binary_tau(1);
  CHECK(count_word_class(x1, 3, Word{0}, 0, 1) == 4);
  CHECK(count_word_class(x1, 4, Word{0}, 4, 4) == 1);  // only 0000
  for (long long n = 1; n <= 8; ++n)                   // [0, n] covers everything
    CHECK(count_word_class(x1, n, Word{0}, 0, n) == language_count(x1, n));

  for (const Word& pat : {Word{0}, Word{1}, Word{1, 1}, Word{1, 0}}) {
    for (long long n = static_cast<long long>(pat.size()); n <= 9; ++n) {
      for (long long lo = 0; lo < n; ++lo) {
        long long hi = std::min(lo + 1, n);
        BigInt expect = 0;
        for (const auto& u : enumerate_language(x1, static_cast<std::size_t>(n))) {
          long long occ = 0;
          for (std::size_t i = 0; i + pat.size() <= u.size(); ++i)
            if (std::equal(pat.begin(), pat.end(), u.begin() + static_cast<long>(i))) ++occ;
          if (occ >= lo && occ <= hi) ++expect;
        }
        CHECK(count_word_class(x1, n, pat, lo, hi) == expect);
      }
    }
  }
}

TEST_CASE("binomial bound examples") {
  auto b = binomial_bound(4, 2, Rational(1, 2), Rational(0));
  CHECK(b.sum == 33);  // 1 + 4*2 + 6*4
  CHECK(b.sum <= b.closed);
  CHECK(b.closed == 64);  // (2 * 2^(1/2))^4 exactly

  for (long long n = 1; n <= 10; ++n)
    for (long long A : {1, 2, 3}) {
      auto z = binomial_bound(n, A, Rational(0), Rational(1, 2));
      CHECK(z.sum == bigint_pow(BigInt(1 + A), static_cast<unsigned long>(n)));
      CHECK(z.closed == bigint_pow(BigInt(2 * A), static_cast<unsigned long>(n)));
      auto full = binomial_bound(n, A, Rational(1), Rational(1));
      CHECK(full.sum == z.sum);  // kappa = 1 removes the cutoff as well
    }
}

TEST_CASE("separated-set sandwich bounds") {
  auto x1 = binary_tau(1);
  auto [lo0, hi0] = separated_count_bounds(x1, 5, 0);
  CHECK(lo0 == language_count(x1, 5));
  CHECK(hi0 == language_count(x1, 6));
  auto [lo1, hi1] = separated_count_bounds(x1, 4, 1);
  CHECK(lo1 == 15);
  CHECK(hi1 == language_count(x1, 6));
  for (long long m = 0; m <= 3; ++m) {
    auto [a, b] = separated_count_bounds(x1, 6, m);
    auto [a2, b2] = separated_count_bounds(x1, 6, m + 1);
    CHECK(a <= b);
    CHECK(a == a2);   // lower route ignores the resolution
    CHECK(b <= b2);   // finer resolution can only widen the upper route
  }
}

TEST_CASE("smaller tau admits more words") {
  for (long long n = 1; n <= 10; ++n) {
    CHECK(language_count(binary_tau(1, 2), n) >= language_count(binary_tau(1), n));
    CHECK(language_count(binary_tau(1), n) >= language_count(binary_tau(2), n));
    CHECK(language_count(binary_tau(2), n) >= language_count(binary_tau(3), n));
  }
}
