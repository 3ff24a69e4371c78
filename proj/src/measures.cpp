#include "gapshift/measures.hpp"

#include <stdexcept>

namespace gapshift {

EmpiricalMeasure empirical_measure(const Word& x, long long n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("empirical_measure: n and k must be positive");
  if (static_cast<long long>(x.size()) < n + k - 1)
    throw std::invalid_argument("insufficient prefix");
  EmpiricalMeasure mu;
  mu.depth = k;
  const Rational unit(1, n);
  for (long long i = 0; i < n; ++i) {
    Word w(x.begin() + static_cast<long>(i), x.begin() + static_cast<long>(i + k));
    mu.weights[w] += unit;
  }
  return mu;
}

Rational birkhoff_average(const Word& x, const Observable& phi, long long n) {
  if (n < 1) throw std::invalid_argument("birkhoff_average: n must be positive");
  if (static_cast<long long>(x.size()) < n + phi.depth - 1)
    throw std::invalid_argument("insufficient prefix");
  Rational acc = 0;
  for (long long i = 0; i < n; ++i)
    acc += evaluate_observable(phi, x, static_cast<std::size_t>(i));
  return acc / n;
}

Rational birkhoff_average_cyclic(const CyclicWord& x, const Observable& phi,
                                 long long n) {
  if (n < 1) throw std::invalid_argument("birkhoff_average_cyclic: n must be positive");
  Rational acc = 0;
  for (long long i = 0; i < n; ++i)
    acc += evaluate_observable_cyclic(phi, x, static_cast<std::size_t>(i));
  return acc / n;
}

OscillationResult oscillation(const Word& x, const Observable& phi,
                              const std::vector<long long>& checkpoints) {
  if (checkpoints.empty()) throw std::invalid_argument("oscillation: no checkpoints");
  bool first = true;
  OscillationResult out;
  for (long long n : checkpoints) {
    Rational avg = birkhoff_average(x, phi, n);
    if (first || avg < out.min_avg) out.min_avg = avg;
    if (first || avg > out.max_avg) out.max_avg = avg;
    first = false;
  }
  out.gap = out.max_avg - out.min_avg;
  return out;
}

}  // namespace gapshift
