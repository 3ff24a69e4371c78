#include "gapshift/glue.hpp"

#include <algorithm>
#include <stdexcept>

#include "gapshift/errors.hpp"

namespace gapshift {

namespace {

// Window of the point u.0^inf starting at offset j, length m+1.
Word ray_window(const Word& u, long long j, int m, Symbol tail) {
  Word w;
  w.reserve(static_cast<std::size_t>(m) + 1);
  for (long long k = j; k <= j + m; ++k)
    w.push_back(k < static_cast<long long>(u.size()) ? u[static_cast<std::size_t>(k)] : tail);
  return w;
}

void validate_request(const GappedSubshiftSpec& spec, const GlueRequest& req,
                      const ResourceCaps& caps) {
  if (req.segments.empty())
    throw InfeasibleError("infeasible request: no segments");
  if (req.m < 0)
    throw InfeasibleError("infeasible request: negative precision");
  if (req.segments.front().start < 0)
    throw InfeasibleError("infeasible request: negative start");
  for (std::size_t i = 0; i < req.segments.size(); ++i) {
    const auto& seg = req.segments[i];
    if (seg.u.empty())
      throw InfeasibleError("infeasible request: empty segment");
    if (!contains_word(spec, seg.u, caps))
      throw InfeasibleError("infeasible request: segment not in language");
    if (i + 1 < req.segments.size()) {
      long long gap = req.segments[i + 1].start - seg.end();
      long long need = gap_function(spec, static_cast<long long>(seg.u.size()), req.m);
      if (gap < need)
        throw InfeasibleError("infeasible request: gap below gap function");
    }
  }
  if (req.closure == Closure::Periodic) {
    const auto& last = req.segments.back();
    long long need = req.segments.back().end() - req.segments.front().start +
                     gap_function(spec, static_cast<long long>(last.u.size()), req.m);
    if (req.period < need)
      throw InfeasibleError("infeasible request: periodic closure gap too small");
  }
}

}  // namespace

GlueResult glue(const GappedSubshiftSpec& spec, const GlueRequest& req,
                const ResourceCaps& caps) {
  validate_request(spec, req, caps);
  const int m = req.m;
  GlueResult out;

  if (req.closure == Closure::OpenEnd) {
    long long len = req.segments.back().end() + 1 + m;
    out.prefix.assign(static_cast<std::size_t>(len), 0);
    for (const auto& seg : req.segments)
      std::copy(seg.u.begin(), seg.u.end(),
                out.prefix.begin() + static_cast<long>(seg.start));
    out.report.admissible = contains_word(spec, out.prefix, caps);
  } else {
    const long long p = req.period;
    out.prefix.assign(static_cast<std::size_t>(p), 0);
    for (const auto& seg : req.segments)
      for (std::size_t k = 0; k < seg.u.size(); ++k)
        out.prefix[static_cast<std::size_t>((seg.start + static_cast<long long>(k)) % p)] = seg.u[k];
    out.report.admissible = cyclic_admissible(spec, out.prefix, caps);
    out.cycle.emplace(out.prefix);
  }

  auto z_at = [&](long long j) -> Symbol {
    if (req.closure == Closure::Periodic)
      return out.prefix[static_cast<std::size_t>(j % req.period)];
    return j < static_cast<long long>(out.prefix.size())
               ? out.prefix[static_cast<std::size_t>(j)]
               : 0;
  };

  const Rational bound = pow2_neg(m);
  out.report.all_pass = true;
  for (std::size_t i = 0; i < req.segments.size(); ++i) {
    const auto& seg = req.segments[i];
    for (long long j = seg.start; j <= seg.end(); ++j) {
      Word zw;
      zw.reserve(static_cast<std::size_t>(m) + 1);
      for (long long k = j; k <= j + m; ++k) zw.push_back(z_at(k));
      Word xw = ray_window(seg.u, j - seg.start, m, 0);
      DistInterval d = word_distance_interval(zw, xw);
      bool pass = d.hi <= bound;
      out.report.checks.push_back(
          {static_cast<int>(i), j, d.lo, d.hi, bound, pass});
      out.report.all_pass = out.report.all_pass && pass;
    }
  }
  out.report.all_pass = out.report.all_pass && out.report.admissible;
  return out;
}

GlueRequest default_layout(const GappedSubshiftSpec& spec,
                           const std::vector<Word>& words, int m,
                           Closure closure) {
  if (words.empty()) throw InfeasibleError("infeasible request: no segments");
  GlueRequest req;
  req.m = m;
  req.closure = closure;
  long long a = 0;
  for (const auto& u : words) {
    req.segments.push_back({u, a});
    a = req.segments.back().end() +
        gap_function(spec, static_cast<long long>(u.size()), m);
  }
  if (closure == Closure::Periodic)
    req.period = req.segments.back().end() - req.segments.front().start +
                 gap_function(spec, static_cast<long long>(req.segments.back().u.size()), m);
  return req;
}

std::optional<Word> min_gap_witness_search(const GappedSubshiftSpec& spec,
                                           const Word& u, const Word& v, int m,
                                           long long gap,
                                           const ResourceCaps& caps) {
  if (u.empty() || v.empty())
    throw InfeasibleError("infeasible request: empty segment");
  if (gap < 1) throw InfeasibleError("infeasible request: gap < 1");
  if (m < -1) throw InfeasibleError("infeasible request: precision below -1");
  if (!contains_word(spec, u, caps) || !contains_word(spec, v, caps))
    throw InfeasibleError("infeasible request: segment not in language");
  const int A = spec.ambient_alphabet_size();

  const long long nu = static_cast<long long>(u.size());
  const long long nv = static_cast<long long>(v.size());
  const long long a2 = nu - 1 + gap;
  const long long len = nu + gap + nv + m;
  if (len < 1) return std::nullopt;

  // Certified shadowing within 2^-m over length-(m+1) windows is exact
  // agreement on those windows, so the shadowed stretches of z are forced.
  std::vector<std::optional<Symbol>> forced(static_cast<std::size_t>(len));
  auto force = [&](long long pos, Symbol s) -> bool {
    auto& slot = forced[static_cast<std::size_t>(pos)];
    if (slot && *slot != s) return false;
    slot = s;
    return true;
  };
  if (m >= 0) {
    for (long long j = 0; j <= nu - 1 + m; ++j)
      if (!force(j, j < nu ? u[static_cast<std::size_t>(j)] : u.back()))
        return std::nullopt;
    for (long long j = 0; j <= nv - 1 + m; ++j)
      if (!force(a2 + j, j < nv ? v[static_cast<std::size_t>(j)] : v.back()))
        return std::nullopt;
  }

  // Verify a full candidate against the actual certified bounds.
  auto certified = [&](const Word& z) -> bool {
    if (m < 0) return true;
    for (long long j = 0; j <= nu - 1; ++j) {
      Word zw(z.begin() + static_cast<long>(j), z.begin() + static_cast<long>(j + m + 1));
      DistInterval d = word_distance_interval(zw, ray_window(u, j, m, u.back()));
      if (d.hi > pow2_neg(m)) return false;
    }
    for (long long j = 0; j <= nv - 1; ++j) {
      Word zw(z.begin() + static_cast<long>(a2 + j), z.begin() + static_cast<long>(a2 + j + m + 1));
      DistInterval d = word_distance_interval(zw, ray_window(v, j, m, v.back()));
      if (d.hi > pow2_neg(m)) return false;
    }
    return true;
  };

  GappedStateMachine machine(spec, caps);
  Word z;
  z.reserve(static_cast<std::size_t>(len));
  std::vector<GappedStateMachine::State> stack{machine.initial()};
  std::size_t nodes = 0;
  std::optional<Word> hit;

  auto rec = [&](auto&& self) -> bool {  // true = stop (found)
    if (static_cast<long long>(z.size()) == len) {
      if (machine.accepting(stack.back()) && certified(z)) {
        hit = z;
        return true;
      }
      return false;
    }
    const auto& slot = forced[z.size()];
    Symbol from = slot ? *slot : 0;
    Symbol to = slot ? *slot : A - 1;
    for (Symbol s = from; s <= to; ++s) {
      if (++nodes > caps.max_enumeration)
        throw ResourceCapError("search-space cap exceeded");
      auto nxt = machine.step(stack.back(), s);
      if (!nxt) continue;
      z.push_back(s);
      stack.push_back(*nxt);
      bool done = self(self);
      stack.pop_back();
      z.pop_back();
      if (done) return true;
    }
    return false;
  };
  rec(rec);
  return hit;
}

}  // namespace gapshift
