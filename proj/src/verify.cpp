#include "gapshift/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <optional>
#include <random>
#include <sstream>

#include "gapshift/census.hpp"
#include "gapshift/counting.hpp"
#include "gapshift/errors.hpp"
#include "gapshift/gapped.hpp"
#include "gapshift/glue.hpp"
#include "gapshift/measures.hpp"
#include "gapshift/metric.hpp"
#include "gapshift/observable.hpp"
#include "gapshift/optimize.hpp"
#include "gapshift/schedule.hpp"
#include "gapshift/transport.hpp"

namespace gapshift {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// The oracle spec grid: tau in {1/2, 1, 2} over full-shift bases with one and
// two base symbols (ambient alphabets of size 2 and 3).
std::vector<GappedSubshiftSpec> oracle_specs() {
  std::vector<GappedSubshiftSpec> out;
  for (const Rational& tau : {Rational(1, 2), Rational(1), Rational(2)})
    for (int a : {1, 2}) out.push_back(make_gapped(make_full_shift(a), tau));
  return out;
}

std::string spec_label(const GappedSubshiftSpec& spec) {
  return "tau=" + rat_str(spec.tau) +
         ",A=" + std::to_string(spec.base.alphabet_size());
}

Word random_admissible(const GappedSubshiftSpec& spec, std::size_t len,
                       std::mt19937_64& rng, const ResourceCaps& caps) {
  const int B = spec.ambient_alphabet_size();
  std::uniform_int_distribution<int> pick(0, B - 1);
  for (int tries = 0; tries < 20000; ++tries) {
    Word w(len);
    for (auto& s : w) s = pick(rng);
    if (contains_word(spec, w, caps)) return w;
  }
  return Word(len, 0);  // the all-gap word is always admissible
}

// ---- 1: membership-oracle-equivalence --------------------------------------

// Words of length n over the ambient alphabet, indexed [lo, hi) in lex order.
std::optional<Word> membership_scan(const GappedSubshiftSpec& spec, int n,
                                    std::uint64_t lo, std::uint64_t hi,
                                    const ResourceCaps& caps) {
  const int B = spec.ambient_alphabet_size();
  Word w(static_cast<std::size_t>(n), 0);
  std::uint64_t x = lo;
  for (int i = n - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<Symbol>(x % B);
    x /= B;
  }
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (contains_word(spec, w, caps) != contains_word_naive(spec, w, caps))
      return w;
    int i = n - 1;
    while (i >= 0 && ++w[static_cast<std::size_t>(i)] == B)
      w[static_cast<std::size_t>(i--)] = 0;
  }
  return std::nullopt;
}

CriterionResult criterion_membership(const VerifyOptions& opts) {
  CriterionResult r{1, "membership-oracle-equivalence", false, "", 0.0};
  const int shards = std::max(1, opts.threads);
  std::uint64_t words = 0;
  for (const auto& spec : oracle_specs()) {
    if (contains_word(spec, {}, opts.caps) != contains_word_naive(spec, {}, opts.caps)) {
      r.detail = spec_label(spec) + ": empty word mismatch";
      return r;
    }
    const int B = spec.ambient_alphabet_size();
    for (int n = 1; n <= 14; ++n) {
      std::uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(B);
      std::vector<std::future<std::optional<Word>>> futs;
      for (int s = 0; s < shards; ++s) {
        std::uint64_t lo = total * static_cast<std::uint64_t>(s) / static_cast<std::uint64_t>(shards);
        std::uint64_t hi = total * static_cast<std::uint64_t>(s + 1) / static_cast<std::uint64_t>(shards);
        if (lo == hi) continue;
        futs.push_back(std::async(std::launch::async, [&spec, &opts, n, lo, hi] {
          return membership_scan(spec, n, lo, hi, opts.caps);
        }));
      }
      std::optional<Word> bad;
      for (auto& f : futs) {
        auto res = f.get();
        if (res && !bad) bad = res;
      }
      if (bad) {
        r.detail = spec_label(spec) + ": routes disagree on " + format_word(*bad);
        return r;
      }
      words += total;
    }
  }
  r.pass = true;
  r.detail = std::to_string(words) + " words x 2 routes over 6 specs, lengths <= 14";
  return r;
}

// ---- 2: counting-oracle-equivalence ----------------------------------------

BigInt brute_language_count(const GappedSubshiftSpec& spec, int n,
                            const ResourceCaps& caps) {
  const int B = spec.ambient_alphabet_size();
  Word w(static_cast<std::size_t>(n), 0);
  BigInt count = 0;
  while (true) {
    if (contains_word_naive(spec, w, caps)) ++count;
    int i = n - 1;
    while (i >= 0 && ++w[static_cast<std::size_t>(i)] == B)
      w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return count;
}

CriterionResult criterion_counting(const VerifyOptions& opts) {
  CriterionResult r{2, "counting-oracle-equivalence", false, "", 0.0};
  auto specs = oracle_specs();
  std::vector<std::future<std::string>> futs;
  for (const auto& spec : specs)
    futs.push_back(std::async(std::launch::async, [&spec, &opts]() -> std::string {
      for (int n = 1; n <= 12; ++n) {
        BigInt dp = language_count(spec, n, opts.caps);
        BigInt brute = brute_language_count(spec, n, opts.caps);
        if (dp != brute)
          return spec_label(spec) + ": |L_" + std::to_string(n) + "| dp=" +
                 dp.str() + " brute=" + brute.str();
      }
      return "";
    }));
  for (auto& f : futs) {
    std::string err = f.get();
    if (!err.empty()) {
      r.detail = err;
      return r;
    }
  }
  auto binary = make_gapped(make_full_shift(1), Rational(1));
  BigInt l4 = language_count(binary, 4, opts.caps);
  BigInt l5 = language_count(binary, 5, opts.caps);
  if (l4 != 15 || l5 != 28) {
    r.detail = "anchors |L_4|=" + l4.str() + " |L_5|=" + l5.str() +
               " (want 15, 28)";
    return r;
  }
  r.pass = true;
  r.detail = "dp == brute force for n <= 12 on 6 specs; anchors 15/28 exact";
  return r;
}

// ---- 3: subadditivity --------------------------------------------------------

CriterionResult criterion_subadditivity(const VerifyOptions& opts) {
  CriterionResult r{3, "language-subadditivity", false, "", 0.0};
  long long checked = 0;
  for (const auto& spec : oracle_specs()) {
    std::vector<BigInt> c(17);
    for (int n = 1; n <= 16; ++n) c[static_cast<std::size_t>(n)] = language_count(spec, n, opts.caps);
    for (int m = 1; m <= 15; ++m)
      for (int n = 1; m + n <= 16; ++n) {
        if (c[static_cast<std::size_t>(m + n)] >
            c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(n)]) {
          r.detail = spec_label(spec) + ": |L_" + std::to_string(m + n) +
                     "| > |L_" + std::to_string(m) + "|*|L_" + std::to_string(n) + "|";
          return r;
        }
        ++checked;
      }
  }
  r.pass = true;
  r.detail = std::to_string(checked) + " exact splits |L_{m+n}| <= |L_m||L_n|, m+n <= 16";
  return r;
}

// ---- 4: entropy-sandwich ----------------------------------------------------

CriterionResult criterion_entropy(const VerifyOptions& opts) {
  CriterionResult r{4, "entropy-sandwich", false, "", 0.0};
  auto spec = make_gapped(make_full_shift(5), Rational(1));
  EntropyProfile prof = entropy_profile(spec, 14, opts.caps);
  // h_n >= ln 5 exactly: |L_n| >= 5^n as integers
  for (const auto& row : prof.rows) {
    if (row.count < bigint_pow(5, static_cast<unsigned long>(row.n))) {
      r.detail = "|L_" + std::to_string(row.n) + "| < 5^n";
      return r;
    }
  }
  // h_14 < h_6 exactly: |L_14|^6 < |L_6|^14
  const BigInt& c14 = prof.rows[13].count;
  const BigInt& c6 = prof.rows[5].count;
  if (!(bigint_pow(c14, 6) < bigint_pow(c6, 14))) {
    r.detail = "excess over ln 5 not improving: h_14 >= h_6";
    return r;
  }
  r.pass = true;
  r.detail = "ln5 <= h_n for n <= 14; h_6-ln5=" + fmt(prof.rows[5].h - std::log(5.0)) +
             " > h_14-ln5=" + fmt(prof.rows[13].h - std::log(5.0));
  return r;
}

// ---- 5: zero-density certificate --------------------------------------------

CriterionResult criterion_zero_density(const VerifyOptions& opts) {
  CriterionResult r{5, "zero-density-certificate", false, "", 0.0};
  long long mixed_orbits = 0;
  for (const auto& spec : oracle_specs()) {
    Rational bound = spec.tau / (1 + spec.tau);
    std::optional<Rational> min_mixed;
    for (int n = 1; n <= 14; ++n) {
      PeriodicCensus census = periodic_points(spec, n, opts.caps, opts.threads);
      for (const auto& orbit : census.orbits) {
        if (orbit.period != n) continue;  // primitive orbits once, at their own n
        const Rational& d = orbit.zero_density;
        if (d == 0 || d == 1) continue;
        ++mixed_orbits;
        if (d < bound) {
          r.detail = spec_label(spec) + ": orbit " + format_word(orbit.rep) +
                     " density " + rat_str(d) + " < " + rat_str(bound);
          return r;
        }
        if (!min_mixed || d < *min_mixed) min_mixed = d;
      }
    }
    if (!min_mixed || *min_mixed != bound) {
      r.detail = spec_label(spec) + ": minimum mixed density " +
                 (min_mixed ? rat_str(*min_mixed) : std::string("none")) +
                 " != tau/(1+tau) = " + rat_str(bound);
      return r;
    }
  }
  r.pass = true;
  r.detail = std::to_string(mixed_orbits) +
             " mixed orbits of period <= 14 all >= tau/(1+tau); equality attained on all 6 specs";
  return r;
}

// ---- 6: periodic-census-anchors ----------------------------------------------

// Independent cyclic-admissibility route: a mixed word w is cyclically
// admissible iff w^4 passes the naive linear scanner (every forbidden pattern
// of w^inf spans < 2|w| symbols, so it sits inside w^4; truncated boundary
// runs only weaken the constraint).
bool cyclic_admissible_brute(const GappedSubshiftSpec& spec, const Word& w,
                             const ResourceCaps& caps) {
  bool zero = false, nonzero = false;
  for (Symbol s : w) (s == 0 ? zero : nonzero) = true;
  if (!nonzero) return true;
  if (!zero) return base_cyclic_admissible(spec.base, ambient_to_base(w), caps);
  Word rep;
  rep.reserve(w.size() * 4);
  for (int k = 0; k < 4; ++k) rep.insert(rep.end(), w.begin(), w.end());
  return contains_word_naive(spec, rep, caps);
}

CriterionResult criterion_census(const VerifyOptions& opts) {
  CriterionResult r{6, "periodic-census-anchors", false, "", 0.0};
  auto spec = make_gapped(make_full_shift(1), Rational(1));
  long long anchors[3] = {2, 4, 5};
  for (int n = 1; n <= 3; ++n) {
    BigInt got = periodic_points(spec, n, opts.caps, opts.threads).count;
    if (got != anchors[n - 1]) {
      r.detail = "|Per_" + std::to_string(n) + "| = " + got.str() + " (want " +
                 std::to_string(anchors[n - 1]) + ")";
      return r;
    }
  }
  for (int n = 1; n <= 10; ++n) {
    PeriodicCensus census = periodic_points(spec, n, opts.caps, opts.threads);
    BigInt brute = 0;
    Word w(static_cast<std::size_t>(n), 0);
    while (true) {
      if (cyclic_admissible_brute(spec, w, opts.caps)) ++brute;
      int i = n - 1;
      while (i >= 0 && ++w[static_cast<std::size_t>(i)] == 2)
        w[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
    }
    if (census.count != brute) {
      r.detail = "|Per_" + std::to_string(n) + "| census " + census.count.str() +
                 " != brute " + brute.str();
      return r;
    }
    BigInt from_orbits = 0;
    for (const auto& orbit : census.orbits) from_orbits += orbit.period;
    if (from_orbits != census.count) {
      r.detail = "orbit periods sum " + from_orbits.str() + " != |Per_" +
                 std::to_string(n) + "| = " + census.count.str();
      return r;
    }
  }
  BigInt per12 = periodic_points(spec, 12, opts.caps, opts.threads).count;
  double growth = log_of(per12) / 12.0;
  double h12 = log_of(language_count(spec, 12, opts.caps)) / 12.0;
  double ref = 0.5 * h12 - 0.2;
  if (growth < ref) {
    r.detail = "(1/12)ln|Per_12| = " + fmt(growth) + " < " + fmt(ref);
    return r;
  }
  r.pass = true;
  r.detail = "anchors 2/4/5; census == brute for n <= 10; growth " + fmt(growth) +
             " >= (1/2)h_12 - 0.2 = " + fmt(ref);
  return r;
}

// ---- 7: glue-soundness --------------------------------------------------------

CriterionResult criterion_glue(const VerifyOptions& opts) {
  CriterionResult r{7, "glue-soundness", false, "", 0.0};
  std::mt19937_64 rng(opts.seed);
  auto specs = oracle_specs();
  long long checks = 0, periodic_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& spec = specs[rng() % specs.size()];
    std::size_t k = 1 + static_cast<std::size_t>(rng() % 4);
    std::vector<Word> words;
    for (std::size_t i = 0; i < k; ++i)
      words.push_back(random_admissible(spec, 1 + rng() % 5, rng, opts.caps));
    int m = static_cast<int>(rng() % 4);
    Closure closure = (rng() & 1) ? Closure::Periodic : Closure::OpenEnd;
    GlueRequest req = default_layout(spec, words, m, closure);
    long long shift = 0;  // extra slack keeps the request feasible
    for (std::size_t i = 1; i < req.segments.size(); ++i) {
      shift += static_cast<long long>(rng() % 4);
      req.segments[i].start += shift;
    }
    if (closure == Closure::Periodic) {
      req.period = req.segments.back().end() - req.segments.front().start +
                   gap_function(spec, static_cast<long long>(req.segments.back().u.size()), m) +
                   static_cast<long long>(rng() % 5);
      ++periodic_count;
    }
    GlueResult res = glue(spec, req, opts.caps);
    bool ok = res.report.all_pass && res.report.admissible;
    if (closure == Closure::Periodic) ok = ok && res.cycle.has_value();
    for (const auto& c : res.report.checks) {
      ok = ok && c.pass && c.hi <= c.bound && c.bound == pow2_neg(m);
      ++checks;
    }
    if (!ok) {
      r.detail = "trial " + std::to_string(trial) + " (" + spec_label(spec) +
                 ", k=" + std::to_string(k) + ", m=" + std::to_string(m) + ") failed";
      return r;
    }
  }
  r.pass = true;
  r.detail = "200 requests (" + std::to_string(periodic_count) + " periodic), " +
             std::to_string(checks) + " certified bounds, 0 failures";
  return r;
}

// ---- 8: gap-minimality ---------------------------------------------------------

CriterionResult criterion_gap_minimality(const VerifyOptions& opts) {
  CriterionResult r{8, "gap-minimality", false, "", 0.0};
  long long combos = 0, searches = 0;
  for (long long tau : {1LL, 2LL}) {
    auto spec = make_gapped(make_full_shift(1), Rational(tau));
    for (int n = 1; n <= 3; ++n) {
      Word u(static_cast<std::size_t>(n), 1);
      Word v{0, 1};
      for (int m = 0; m <= 2; ++m) {
        long long M = gap_function(spec, n, m);
        for (long long gap = 1; gap <= M - 2; ++gap) {
          ++searches;
          auto w = min_gap_witness_search(spec, u, v, m, gap, opts.caps);
          if (w) {
            r.detail = "witness below gap function: tau=" + std::to_string(tau) +
                       " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                       " gap=" + std::to_string(gap);
            return r;
          }
        }
        ++searches;
        auto w = min_gap_witness_search(spec, u, v, m, M, opts.caps);
        if (!w || !contains_word(spec, *w, opts.caps)) {
          r.detail = "no witness at the gap function: tau=" + std::to_string(tau) +
                     " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                     " M=" + std::to_string(M);
          return r;
        }
        ++combos;
      }
    }
  }
  r.pass = true;
  r.detail = std::to_string(combos) + " (tau,n,m) combos, " + std::to_string(searches) +
             " exhaustive searches: none below, witness at M";
  return r;
}

// ---- 9: word-class-bound --------------------------------------------------------

CriterionResult criterion_word_class(const VerifyOptions& opts) {
  CriterionResult r{9, "word-class-bound", false, "", 0.0};
  long long checked = 0;
  for (long long tau : {1LL, 2LL}) {
    for (int a : {1, 2}) {
      auto spec = make_gapped(make_full_shift(a), Rational(tau));
      Rational beta = spec.tau / (1 + spec.tau);
      for (const Rational& kappa : {Rational(1, 4), Rational(1, 2)}) {
        for (int n = 1; n <= 10; ++n) {
          Rational center = Rational(n) * beta;
          long long lo = rat_ceil((1 - kappa) * center).convert_to<long long>();
          long long hi = rat_floor((1 + kappa) * center).convert_to<long long>();
          BinomialBound bb = binomial_bound(n, a, beta, kappa);
          if (bb.sum > bb.closed) {
            r.detail = "binomial sum exceeds closed bound at n=" + std::to_string(n);
            return r;
          }
          if (lo <= hi) {
            BigInt cls = count_word_class(spec, n, Word{0}, lo, hi, opts.caps);
            if (cls > bb.sum) {
              r.detail = spec_label(spec) + " kappa=" + rat_str(kappa) + " n=" +
                         std::to_string(n) + ": |W| = " + cls.str() + " > sum " +
                         bb.sum.str();
              return r;
            }
          }
          ++checked;
        }
      }
    }
  }
  r.pass = true;
  r.detail = std::to_string(checked) +
             " windows: |W_{n,kappa*beta,0}| <= binomial sum <= closed bound";
  return r;
}

// ---- 10: wasserstein-properties ---------------------------------------------------

CriterionResult criterion_wasserstein(const VerifyOptions& opts) {
  CriterionResult r{10, "wasserstein-properties", false, "", 0.0};
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
  auto specs = oracle_specs();

  for (int trial = 0; trial < 100; ++trial) {
    const auto& spec = specs[rng() % specs.size()];
    std::size_t L = 1 + static_cast<std::size_t>(rng() % 12);
    Word x = random_admissible(spec, L, rng, opts.caps);
    Word y = random_admissible(spec, L, rng, opts.caps);
    FiniteMeasure mu = uniform_measure({x}), nu = uniform_measure({y});
    TransportInterval ab = wasserstein(mu, nu), ba = wasserstein(nu, mu);
    Rational truncated = truncated_distance(x, y, L);
    if (!(ab.lo <= truncated && truncated <= ab.hi)) {
      r.detail = "dirac interval misses truncated metric at trial " + std::to_string(trial);
      return r;
    }
    if (ab.lo != ba.lo || ab.hi != ba.hi) {
      r.detail = "dirac symmetry violated at trial " + std::to_string(trial);
      return r;
    }
  }

  for (int trial = 0; trial < 20; ++trial) {
    const auto& spec = specs[rng() % specs.size()];
    std::size_t L = 1 + static_cast<std::size_t>(rng() % 8);
    auto random_measure = [&] {
      std::size_t atoms = 1 + static_cast<std::size_t>(rng() % 4);
      std::vector<std::pair<Word, Rational>> pts;
      for (std::size_t i = 0; i < atoms; ++i)
        pts.emplace_back(random_admissible(spec, L, rng, opts.caps), 0);
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end(),
                            [](const auto& p, const auto& q) { return p.first == q.first; }),
                pts.end());
      long long total = 0;
      std::vector<long long> raw(pts.size());
      for (auto& v : raw) total += (v = 1 + static_cast<long long>(rng() % 5));
      for (std::size_t i = 0; i < pts.size(); ++i) pts[i].second = Rational(raw[i], total);
      return make_finite_measure(std::move(pts));
    };
    FiniteMeasure mu = random_measure(), nu = random_measure();
    TransportInterval ab = wasserstein(mu, nu), ba = wasserstein(nu, mu);
    if (ab.lo != ba.lo || ab.hi != ba.hi) {
      r.detail = "measure symmetry violated at trial " + std::to_string(trial);
      return r;
    }
    if (ab.lo > ab.hi || ab.lo < 0 || ab.hi > space_diameter()) {
      r.detail = "interval outside [0, diam] at trial " + std::to_string(trial);
      return r;
    }
  }

  for (int trial = 0; trial < 100; ++trial) {
    const auto& spec = specs[rng() % specs.size()];
    long long n = 1 + static_cast<long long>(rng() % 32);
    int m = static_cast<int>(rng() % 5);
    std::size_t L = static_cast<std::size_t>(m + 1) +
                    static_cast<std::size_t>(rng() % (12 - static_cast<std::size_t>(m)));
    std::vector<Word> xs, ys;
    for (long long i = 0; i < n; ++i) xs.push_back(random_admissible(spec, L, rng, opts.caps));
    ys = xs;
    long long d = static_cast<long long>(rng() % static_cast<std::uint64_t>(n / 4 + 1));
    for (long long i = 0; i < d; ++i)
      ys[static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n))] =
          random_admissible(spec, L, rng, opts.caps);
    if (!perturbation_bound_check(xs, ys, m, Rational(d, n))) {
      r.detail = "perturbation bound violated: n=" + std::to_string(n) + " m=" +
                 std::to_string(m) + " L=" + std::to_string(L) + " d=" + std::to_string(d);
      return r;
    }
  }

  r.pass = true;
  r.detail = "100 dirac intervals contain the truncated metric; symmetry exact; "
             "100 perturbation bounds hold (n <= 32, L <= 12)";
  return r;
}

// ---- 11: level-set-gap -------------------------------------------------------------

CriterionResult criterion_level_set(const VerifyOptions& opts) {
  CriterionResult r{11, "level-set-gap", false, "", 0.0};
  Observable psi = affine(indicator(Word{0}), -1, 1);  // 1 - chi_[0]
  long long orbits = 0;
  for (long long tau : {1LL, 2LL}) {
    for (int a : {1, 2}) {
      auto spec = make_gapped(make_full_shift(a), Rational(tau));
      Rational gamma = Rational(1, 1 + tau);
      for (int n = 1; n <= 14; ++n) {
        PeriodicCensus census = periodic_points(spec, n, opts.caps, opts.threads);
        for (const auto& orbit : census.orbits) {
          if (orbit.period != n) continue;
          Rational avg = birkhoff_average_cyclic(CyclicWord(orbit.rep), psi, n);
          if (avg != 1 - orbit.zero_density) {
            r.detail = "average route mismatch on orbit " + format_word(orbit.rep);
            return r;
          }
          if (gamma < avg && avg < 1) {
            r.detail = spec_label(spec) + ": orbit " + format_word(orbit.rep) +
                       " has average " + rat_str(avg) + " inside (" + rat_str(gamma) + ", 1)";
            return r;
          }
          ++orbits;
        }
      }
    }
  }
  r.pass = true;
  r.detail = std::to_string(orbits) +
             " orbits of period <= 14: no (1-chi_[0])-average inside (1/(1+tau), 1)";
  return r;
}

// ---- 12: optimization-separation ----------------------------------------------------

CriterionResult criterion_optimization(const VerifyOptions& opts) {
  CriterionResult r{12, "optimization-separation", false, "", 0.0};
  auto spec = make_gapped(make_full_shift(1), Rational(1));
  Observable phi = affine(indicator(Word{0}), -1, 0);  // -chi_[0]
  OptimizationResult opt = ergodic_optimum(spec, phi, 12, opts.caps, opts.threads);
  if (!opt.zero_free_best || *opt.zero_free_best != 0) {
    r.detail = "zero-free optimum != 0";
    return r;
  }
  if (!opt.zero_containing_best || *opt.zero_containing_best != Rational(-1, 2)) {
    r.detail = "zero-containing optimum != -1/2";
    return r;
  }
  const auto& row2 = opt.table[1];
  if (!row2.best || *row2.best != Rational(-1, 2) || !row2.argmax ||
      *row2.argmax != Word{0, 1}) {
    r.detail = "period-2 maximum not attained by (10)^inf";
    return r;
  }
  if (birkhoff_average_cyclic(CyclicWord(Word{1, 0}), phi, 2) != Rational(-1, 2)) {
    r.detail = "(10)^inf average != -1/2";
    return r;
  }
  OptimizationResult shifted =
      ergodic_optimum(spec, affine(indicator(Word{0}), -1, Rational(7, 3)), 12,
                      opts.caps, opts.threads);
  if (shifted.argmax_set != opt.argmax_set) {
    r.detail = "argmax set not invariant under phi -> phi + c";
    return r;
  }
  if (shifted.best != opt.best + Rational(7, 3)) {
    r.detail = "optimum did not shift by the added constant";
    return r;
  }
  r.pass = true;
  r.detail = "zero-free best 0; zero-containing best -1/2 at (10)^inf; argmax set "
             "invariant under +c";
  return r;
}

// ---- 13: oscillation-certificate -----------------------------------------------------

CriterionResult criterion_oscillation(const VerifyOptions& opts) {
  CriterionResult r{13, "oscillation-certificate", false, "", 0.0};
  auto spec = make_gapped(make_full_shift(1), Rational(1));
  OscillationSchedule sched = make_geometric_schedule(Word{1}, 4, 4);
  long long N = sched.total_length();
  Word x = build_oscillating_point(spec, sched, N, opts.caps);
  OscillationResult osc = oscillation(x, indicator(Word{0}), sched.checkpoints());
  if (osc.gap < Rational(3, 10)) {
    r.detail = "checkpoint gap " + rat_str(osc.gap) + " < 3/10";
    return r;
  }
  r.pass = true;
  r.detail = "chi_[0]-averages range [" + rat_str(osc.min_avg) + ", " +
             rat_str(osc.max_avg) + "], gap " + rat_str(osc.gap) + " >= 3/10";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opts) {
  using Fn = CriterionResult (*)(const VerifyOptions&);
  const Fn criteria[] = {
      criterion_membership,   criterion_counting,      criterion_subadditivity,
      criterion_entropy,      criterion_zero_density,  criterion_census,
      criterion_glue,         criterion_gap_minimality, criterion_word_class,
      criterion_wasserstein,  criterion_level_set,     criterion_optimization,
      criterion_oscillation,
  };
  std::vector<CriterionResult> out;
  int id = 1;
  for (Fn fn : criteria) {
    auto t0 = Clock::now();
    CriterionResult res;
    try {
      res = fn(opts);
    } catch (const ResourceCapError&) {
      throw;  // caps fail fast; the caller maps this to its own exit code
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.id = id++;
    res.seconds = seconds_since(t0);
    out.push_back(std::move(res));
  }
  // names for rows that came back from the exception path
  const char* names[] = {"membership-oracle-equivalence", "counting-oracle-equivalence",
                         "language-subadditivity",        "entropy-sandwich",
                         "zero-density-certificate",      "periodic-census-anchors",
                         "glue-soundness",                "gap-minimality",
                         "word-class-bound",              "wasserstein-properties",
                         "level-set-gap",                 "optimization-separation",
                         "oscillation-certificate"};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].name.empty()) out[i].name = names[i];
  return out;
}

}  // namespace gapshift
