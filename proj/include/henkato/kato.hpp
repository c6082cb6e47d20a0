#pragma once

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "henkato/errors.hpp"

namespace henkato {

// Cyclic tuple of negated self-intersections of the exceptional curves.
using DlousskySequence = std::vector<long>;

// One blow-up: the center lies on the listed previously-created divisors
// (at most two, normal crossings) and possibly on the glued-back image of
// the final divisor.
struct TowerStep {
  std::vector<long> touches;
  bool glued_on_last = false;
};

struct TowerDescription {
  std::vector<TowerStep> steps;
};

struct KatoInvariants {
  long p = 0, q = 0, j = 0;
  std::vector<long> type;
};

inline void check_degrees(const std::vector<long>& d) {
  if (d.empty()) throw ValidationError("empty degree list");
  for (long dk : d)
    if (dk < 2) throw ValidationError("degrees must be >= 2");
}

inline long b2(const std::vector<long>& d) {
  check_degrees(d);
  long n = 0;
  for (long dk : d) n += 2 * dk - 1;
  return n;
}

// Per factor of degree d: the block (d, 2 repeated 2d-3 times, 3).
inline DlousskySequence dloussky_closed(const std::vector<long>& d) {
  check_degrees(d);
  DlousskySequence s;
  for (long dk : d) {
    s.push_back(dk);
    for (long r = 0; r < 2 * dk - 3; ++r) s.push_back(2);
    s.push_back(3);
  }
  return s;
}

// The blow-up schedule of the germ at infinity, factor by factor. The first
// factor starts at the glued-back image of the final divisor; every later
// factor starts on the last divisor of the factor before it. Within a factor
// of degree d: d-1 blow-ups along the strict transform of its first divisor,
// then a chain of d-1 blow-ups each on the newest divisor only.
inline TowerDescription build_henon_tower(const std::vector<long>& d) {
  check_degrees(d);
  TowerDescription t;
  long base = 0;
  for (std::size_t f = 0; f < d.size(); ++f) {
    long dk = d[f];
    bool first_factor = f == 0;
    long prev_last = base - 1;
    for (long s = 1; s <= 2 * dk - 1; ++s) {
      TowerStep step;
      if (s == 1) {
        if (first_factor)
          step.glued_on_last = true;
        else
          step.touches = {prev_last};
      } else if (s == 2) {
        step.touches = {base};
        if (first_factor)
          step.glued_on_last = true;
        else
          step.touches.push_back(prev_last);
      } else if (s <= dk) {
        step.touches = {base, base + s - 2};
      } else if (s == dk + 1) {
        step.touches = {base + dk - 1};
      } else {
        step.touches = {base + s - 2};
      }
      t.steps.push_back(std::move(step));
    }
    base += 2 * dk - 1;
  }
  return t;
}

// Run the blow-up bookkeeping: each step creates a divisor at -1 and drops
// every touched divisor by one; glued steps additionally drop the final
// divisor. Returns the negated self-intersections.
inline DlousskySequence simulate_tower(const TowerDescription& t) {
  long n = static_cast<long>(t.steps.size());
  if (n == 0) throw ValidationError("empty tower");
  std::vector<long> self;
  self.reserve(static_cast<std::size_t>(n));
  long glued = 0;
  for (long k = 0; k < n; ++k) {
    const TowerStep& step = t.steps[static_cast<std::size_t>(k)];
    if (static_cast<long>(step.touches.size()) + (step.glued_on_last ? 1 : 0) > 2)
      throw ValidationError("blow-up center on more than two curves, step " + std::to_string(k + 1));
    std::set<long> seen;
    for (long idx : step.touches) {
      if (idx < 0 || idx >= k)
        throw ValidationError("blow-up center on a not-yet-created divisor, step " +
                              std::to_string(k + 1));
      if (!seen.insert(idx).second)
        throw ValidationError("repeated divisor in membership set, step " + std::to_string(k + 1));
      --self[static_cast<std::size_t>(idx)];
    }
    if (step.glued_on_last) ++glued;
    self.push_back(-1);
  }
  self[static_cast<std::size_t>(n - 1)] -= glued;
  DlousskySequence out;
  out.reserve(self.size());
  for (long v : self) out.push_back(-v);
  return out;
}

// (p, q, j) = (D_N, 2 D_N - 2, D_N - D_{N-1});
// type m_i = 2 D_N - D_{N-i+1} - D_{N-i}.
inline KatoInvariants invariants_closed(const std::vector<long>& d) {
  check_degrees(d);
  long N = static_cast<long>(d.size());
  std::vector<long> D(static_cast<std::size_t>(N) + 1, 1);
  for (long i = 1; i <= N; ++i) {
    if (__builtin_mul_overflow(D[static_cast<std::size_t>(i - 1)], d[static_cast<std::size_t>(i - 1)],
                               &D[static_cast<std::size_t>(i)]))
      throw ValidationError("degree product overflows");
  }
  KatoInvariants inv;
  inv.p = D[static_cast<std::size_t>(N)];
  inv.q = 2 * inv.p - 2;
  inv.j = inv.p - D[static_cast<std::size_t>(N - 1)];
  for (long i = 1; i <= N; ++i)
    inv.type.push_back(2 * inv.p - D[static_cast<std::size_t>(N - i + 1)] -
                       D[static_cast<std::size_t>(N - i)]);
  return inv;
}

// The gcd descent over a support: m_1 = min, i_1 = gcd(m_1, p),
// m_a = min{m > m_{a-1} in support : gcd(m, i_{a-1}) < i_{a-1}},
// stopping once the running gcd reaches 1.
inline std::vector<long> type_from_support(long p, const std::set<long>& support) {
  if (p < 2) throw ValidationError("type needs p >= 2");
  if (support.empty()) throw ValidationError("type needs a nonempty support");
  std::vector<long> type;
  long m = *support.begin();
  type.push_back(m);
  long i = std::gcd(m, p);
  while (i > 1) {
    auto it = support.upper_bound(m);
    while (it != support.end() && std::gcd(*it, i) == i) ++it;
    if (it == support.end())
      throw TypeUndefined("type undefined (not a Dloussky-germ support)");
    m = *it;
    type.push_back(m);
    i = std::gcd(i, m);
  }
  return type;
}

// Offsets k with s2 = rotate(s1, k), where rotate shifts left by k.
inline std::vector<long> cyclic_equal(const DlousskySequence& s1, const DlousskySequence& s2) {
  std::vector<long> ks;
  long n = static_cast<long>(s1.size());
  if (n != static_cast<long>(s2.size())) return ks;
  if (n == 0) return ks;
  for (long k = 0; k < n; ++k) {
    bool ok = true;
    for (long j = 0; j < n && ok; ++j)
      ok = s2[static_cast<std::size_t>(j)] == s1[static_cast<std::size_t>((j + k) % n)];
    if (ok) ks.push_back(k);
  }
  return ks;
}

}  // namespace henkato
