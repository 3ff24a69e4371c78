#include "gapshift/transport.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gapshift/errors.hpp"
#include "gapshift/metric.hpp"

namespace gapshift {

namespace {

// Exact transportation problem: integer supplies/demands (scaled weights),
// rational costs, successive shortest augmenting paths with Bellman-Ford.
// Sizes here are tiny (tens of atoms), so O(V*E) per augmentation is fine.
Rational min_cost_transport(const std::vector<BigInt>& supply,
                            const std::vector<BigInt>& demand,
                            const std::vector<std::vector<Rational>>& cost) {
  const std::size_t na = supply.size(), nb = demand.size();
  std::vector<BigInt> rem_s = supply, rem_d = demand;
  std::vector<std::vector<BigInt>> flow(na, std::vector<BigInt>(nb, 0));

  BigInt outstanding = 0;
  for (const auto& s : rem_s) outstanding += s;

  while (outstanding > 0) {
    // Shortest paths from {sources with supply} over residual arcs.
    const Rational INF = Rational(BigInt(1) << 62);
    std::vector<Rational> dist_a(na, INF), dist_b(nb, INF);
    std::vector<int> pred_b(nb, -1);  // best incoming source for sink j
    std::vector<int> pred_a(na, -1);  // best incoming sink for source i (-2: origin)
    for (std::size_t i = 0; i < na; ++i)
      if (rem_s[i] > 0) {
        dist_a[i] = 0;
        pred_a[i] = -2;
      }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < na; ++i) {
        if (dist_a[i] == INF) continue;
        for (std::size_t j = 0; j < nb; ++j) {
          Rational nd = dist_a[i] + cost[i][j];
          if (nd < dist_b[j]) {
            dist_b[j] = nd;
            pred_b[j] = static_cast<int>(i);
            changed = true;
          }
        }
      }
      for (std::size_t j = 0; j < nb; ++j) {
        if (dist_b[j] == INF) continue;
        for (std::size_t i = 0; i < na; ++i) {
          if (flow[i][j] <= 0) continue;
          Rational nd = dist_b[j] - cost[i][j];
          if (nd < dist_a[i]) {
            dist_a[i] = nd;
            pred_a[i] = static_cast<int>(j);
            changed = true;
          }
        }
      }
    }
    // Closest sink with remaining demand.
    int best_j = -1;
    for (std::size_t j = 0; j < nb; ++j)
      if (rem_d[j] > 0 && dist_b[j] < INF &&
          (best_j < 0 || dist_b[j] < dist_b[static_cast<std::size_t>(best_j)]))
        best_j = static_cast<int>(j);
    if (best_j < 0) throw std::logic_error("transport: no augmenting path");

    // Recover path and bottleneck.
    std::vector<std::pair<int, int>> fwd, bwd;  // (i,j) arcs used forward/backward
    int j = best_j;
    BigInt bottleneck = rem_d[static_cast<std::size_t>(j)];
    int origin = -1;
    while (true) {
      int i = pred_b[static_cast<std::size_t>(j)];
      fwd.push_back({i, j});
      if (pred_a[static_cast<std::size_t>(i)] == -2) {
        origin = i;
        break;
      }
      int pj = pred_a[static_cast<std::size_t>(i)];
      bwd.push_back({i, pj});
      bottleneck = std::min(bottleneck, flow[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);
      j = pj;
    }
    bottleneck = std::min(bottleneck, rem_s[static_cast<std::size_t>(origin)]);

    for (auto [fi, fj] : fwd) flow[static_cast<std::size_t>(fi)][static_cast<std::size_t>(fj)] += bottleneck;
    for (auto [bi, bj] : bwd) flow[static_cast<std::size_t>(bi)][static_cast<std::size_t>(bj)] -= bottleneck;
    rem_s[static_cast<std::size_t>(origin)] -= bottleneck;
    rem_d[static_cast<std::size_t>(best_j)] -= bottleneck;
    outstanding -= bottleneck;
  }

  Rational total = 0;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t jj = 0; jj < nb; ++jj)
      if (flow[i][jj] > 0) total += Rational(flow[i][jj]) * cost[i][jj];
  return total;
}

}  // namespace

FiniteMeasure make_finite_measure(std::vector<std::pair<Word, Rational>> atoms) {
  FiniteMeasure mu;
  Rational total = 0;
  for (auto& [w, p] : atoms) {
    if (p < 0) throw std::invalid_argument("finite measure: negative weight");
    if (w.empty()) throw std::invalid_argument("finite measure: empty atom word");
    total += p;
    if (p == 0) continue;
    if (mu.atoms.empty())
      mu.prefix_length = w.size();
    else if (w.size() != mu.prefix_length)
      throw std::invalid_argument("L mismatch");
    mu.atoms.emplace_back(std::move(w), std::move(p));
  }
  if (total != 1) throw std::invalid_argument("finite measure: weights must sum to 1");
  std::sort(mu.atoms.begin(), mu.atoms.end());
  for (std::size_t i = 1; i < mu.atoms.size(); ++i)
    if (mu.atoms[i].first == mu.atoms[i - 1].first)
      throw std::invalid_argument("finite measure: duplicate atom");
  return mu;
}

FiniteMeasure uniform_measure(const std::vector<Word>& points) {
  if (points.empty()) throw std::invalid_argument("uniform_measure: no points");
  std::map<Word, Rational> acc;
  const Rational unit(1, static_cast<long long>(points.size()));
  for (const auto& w : points) acc[w] += unit;
  std::vector<std::pair<Word, Rational>> atoms(acc.begin(), acc.end());
  return make_finite_measure(std::move(atoms));
}

TransportInterval wasserstein(const FiniteMeasure& mu, const FiniteMeasure& nu) {
  if (mu.atoms.empty() || nu.atoms.empty())
    throw std::invalid_argument("wasserstein: empty measure");
  if (mu.prefix_length != nu.prefix_length)
    throw std::invalid_argument("L mismatch");
  const std::size_t na = mu.atoms.size(), nb = nu.atoms.size();

  // Scale weights to integers with the common denominator.
  BigInt den = 1;
  for (const auto& [w, p] : mu.atoms) den = boost::multiprecision::lcm(den, rat_den(p));
  for (const auto& [w, p] : nu.atoms) den = boost::multiprecision::lcm(den, rat_den(p));
  std::vector<BigInt> supply, demand;
  supply.reserve(na);
  demand.reserve(nb);
  for (const auto& [w, p] : mu.atoms) supply.push_back(rat_num(p) * (den / rat_den(p)));
  for (const auto& [w, p] : nu.atoms) demand.push_back(rat_num(p) * (den / rat_den(p)));

  std::vector<std::vector<Rational>> lo(na, std::vector<Rational>(nb));
  std::vector<std::vector<Rational>> hi(na, std::vector<Rational>(nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      DistInterval d = word_distance_interval(mu.atoms[i].first, nu.atoms[j].first);
      lo[i][j] = d.lo;
      hi[i][j] = d.hi;
    }

  TransportInterval out;
  out.lo = min_cost_transport(supply, demand, lo) / Rational(den);
  out.hi = min_cost_transport(supply, demand, hi) / Rational(den);
  return out;
}

bool perturbation_bound_check(const std::vector<Word>& xs,
                              const std::vector<Word>& ys, int m,
                              const Rational& delta) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("length mismatch");
  if (m < 0) throw std::invalid_argument("perturbation_bound_check: m < 0");
  if (delta < 0 || delta > 1)
    throw std::invalid_argument("perturbation_bound_check: delta outside [0,1]");
  const std::size_t L = xs[0].size();
  for (const auto& w : xs)
    if (w.size() != L) throw std::invalid_argument("length mismatch");
  for (const auto& w : ys)
    if (w.size() != L) throw std::invalid_argument("length mismatch");

  const Rational eps = pow2_neg(m);
  const long long n = static_cast<long long>(xs.size());
  long long matched = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (word_distance_interval(xs[i], ys[i]).hi <= eps) ++matched;
  if (Rational(matched) < (Rational(1) - delta) * n)
    throw InfeasibleError("precondition violated: fewer than (1-delta)n certified pairs");

  TransportInterval w = wasserstein(uniform_measure(xs), uniform_measure(ys));
  Rational tail = pow2_neg(static_cast<long>(L) - 1);
  return w.hi <= eps + delta * space_diameter() + tail;
}

}  // namespace gapshift
