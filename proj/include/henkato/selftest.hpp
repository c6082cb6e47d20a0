#pragma once

#include <functional>
#include <string>
#include <vector>

#include "henkato/decide.hpp"
#include "henkato/germ.hpp"
#include "henkato/henon.hpp"
#include "henkato/io.hpp"
#include "henkato/kato.hpp"
#include "henkato/reconstruct.hpp"
#include "henkato/sampling.hpp"
#include "henkato/series.hpp"

namespace henkato {

struct SelfTestCheck {
  std::string name;
  long passed = 0;
  long total = 0;
};

struct SelfTestReport {
  std::vector<SelfTestCheck> checks;

  long passed() const {
    long n = 0;
    for (const auto& c : checks) n += c.passed;
    return n;
  }
  long failed() const {
    long n = 0;
    for (const auto& c : checks) n += c.total - c.passed;
    return n;
  }
  bool ok() const { return failed() == 0; }
};

namespace detail {

inline bool laurent_agree(const LaurentSeries& a, const LaurentSeries& b, long need_top) {
  long top = std::min(a.top(), b.top());
  if (top < need_top) return false;
  if (a.is_zero() != b.is_zero()) return false;
  if (a.is_zero()) return true;
  long lo = std::min(a.val(), b.val());
  for (long n = lo; n <= top; ++n)
    if (a.coeff(n) != b.coeff(n)) return false;
  return true;
}

}  // namespace detail

// Deterministic cross-path and roundtrip checks, runnable from the CLI.
inline SelfTestReport run_selftest() {
  SelfTestReport report;

  {
    SelfTestCheck c{"series roundtrips", 0, 0};
    Sampler s(0x5e11e5u);
    for (int rep = 0; rep < 40; ++rep) {
      long order = s.uniform(6, 14);
      Series u = s.unit_series(order);
      ++c.total;
      if (reciprocal_unit(reciprocal_unit(u)) == u) ++c.passed;
      ++c.total;
      long num = s.uniform(1, 5), den = s.uniform(1, 5);
      mpq_class alpha(s.chance(0.5) ? num : -num, den);
      alpha.canonicalize();
      if (pow_rational(pow_rational(u, alpha), mpq_class(1) / alpha) == u) ++c.passed;
      ++c.total;
      Series tangent = s.unit_series(order);
      LaurentSeries f(1, tangent);
      LaurentSeries g = comp_inverse(f);
      if (detail::laurent_agree(comp_inverse(g), f, order) &&
          detail::laurent_agree(compose(f, g), LaurentSeries::identity(order), order))
        ++c.passed;
    }
    report.checks.push_back(c);
  }

  {
    SelfTestCheck c{"psi cross-path", 0, 0};
    Sampler s(0xc0ffee1u);
    for (int rep = 0; rep < 10; ++rep) {
      HenonMap m = s.map(3, 3);
      Degrees deg = degrees(m);
      PsiChain chain = psi_chain(m);
      ++c.total;
      bool ok = true;
      LaurentSeries prev_phi = phi_direct(m, 1);
      ok = ok && detail::laurent_agree(prev_phi, chain.psi(1), 2 * deg.total() - 1);
      for (long i = 2; i <= deg.N() && ok; ++i) {
        LaurentSeries phi = phi_direct(m, i);
        LaurentSeries via = compose(phi, comp_inverse(prev_phi));
        ok = detail::laurent_agree(via, chain.psi(i), 2 * deg.total() - 1);
        prev_phi = phi;
      }
      if (ok) ++c.passed;
    }
    report.checks.push_back(c);
  }

  {
    SelfTestCheck c{"normal form roundtrip", 0, 0};
    Sampler s(0xdecade5u);
    for (int rep = 0; rep < 10; ++rep) {
      HenonMap m = s.map(3, 3);
      ++c.total;
      try {
        if (henon_from_normal_form(normal_form(m)) == m) ++c.passed;
      } catch (...) {
      }
    }
    report.checks.push_back(c);
  }

  {
    SelfTestCheck c{"blow-up engine vs closed form", 0, 0};
    std::vector<std::vector<long>> tuples;
    std::vector<long> cur;
    // every degree tuple with b2 <= 24
    std::function<void(long)> gen = [&](long budget) {
      if (!cur.empty()) tuples.push_back(cur);
      for (long d = 2; 2 * d - 1 <= budget; ++d) {
        cur.push_back(d);
        gen(budget - (2 * d - 1));
        cur.pop_back();
      }
    };
    gen(24);
    for (const auto& d : tuples) {
      ++c.total;
      DlousskySequence sim = simulate_tower(build_henon_tower(d));
      if (sim == dloussky_closed(d) && static_cast<long>(sim.size()) == b2(d)) ++c.passed;
    }
    report.checks.push_back(c);
  }

  {
    SelfTestCheck c{"conjugacy path agreement", 0, 0};
    Sampler s(0xfeedbacu);
    for (int rep = 0; rep < 12; ++rep) {
      HenonMap f = s.map(2, 3);
      HenonMap g = f;
      int variant = rep % 3;
      if (variant == 1) {
        Degrees deg = degrees(f);
        long M = deg.total() - 1;
        GaussianRational zeta = M % 2 == 0 ? GaussianRational(-1) : GaussianRational(1);
        g = theta_conjugate(f, zeta);
      } else if (variant == 2) {
        std::vector<HenonFactor> fs = f.factors();
        fs[0].p_coeffs[0] += GaussianRational(1);
        g = HenonMap(fs);
      }
      ++c.total;
      auto w1 = conjugate_near_infinity(f, g);
      auto w2 = conjugate_via_normal_forms(f, g);
      if (w1.has_value() == w2.has_value()) ++c.passed;
    }
    report.checks.push_back(c);
  }

  {
    SelfTestCheck c{"surjectivity roundtrip", 0, 0};
    Sampler s(0xab5eedu);
    for (int rep = 0; rep < 5; ++rep) {
      long n = s.uniform(1, 2);
      std::vector<long> d;
      for (long i = 0; i < n; ++i) d.push_back(s.uniform(2, 3));
      std::map<std::pair<long, long>, GaussianRational> at;
      for (long i = 1; i <= n; ++i) {
        at[{i, 0}] = i == n ? GaussianRational(1) : s.nonzero_gaussian(4, 4);
        for (long l = 2; l <= d[static_cast<std::size_t>(i - 1)]; ++l)
          at[{i, l}] = s.sparse_gaussian(4, 4);
      }
      TargetParameters t(s.nonzero_gaussian(4, 4), d, at);
      ++c.total;
      try {
        HenonMap m = solve_surjectivity(t);
        Series h = h_hat(m);
        bool ok = degrees(m).A == t.lambda() * mpq_class(t.D().back());
        for (const auto& [key, value] : t.alpha())
          ok = ok && h[slot_exponent(t.D(), key.first, key.second)] == value;
        if (ok) ++c.passed;
      } catch (...) {
      }
    }
    report.checks.push_back(c);
  }

  {
    SelfTestCheck c{"text and document roundtrips", 0, 0};
    Sampler s(0x10de5u);
    for (int rep = 0; rep < 50; ++rep) {
      GaussianRational g = s.gaussian(30, 30);
      ++c.total;
      auto back = GaussianRational::parse(g.str());
      if (back && *back == g) ++c.passed;
    }
    for (int rep = 0; rep < 10; ++rep) {
      HenonMap m = s.map(3, 4);
      ++c.total;
      if (io::map_from_json(io::map_to_json(m)) == m) ++c.passed;
    }
    report.checks.push_back(c);
  }

  return report;
}

}  // namespace henkato
