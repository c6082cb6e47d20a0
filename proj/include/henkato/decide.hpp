#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "henkato/errors.hpp"
#include "henkato/germ.hpp"
#include "henkato/henon.hpp"
#include "henkato/kato.hpp"

namespace henkato {

// Linear congruences m*e = t (mod M) for the exponent e of zeta = omega^e,
// omega = exp(2*pi*i/M). Every coefficient ratio that must equal a power of
// zeta lies in Q(i), whose only roots of unity are 1, -1, i, -i, so each
// ratio pins a residue t and the search is pure modular arithmetic.
struct CongruenceSystem {
  long modulus = 1;
  std::vector<std::pair<long, long>> constraints;  // (m, t)

  void add(long m, long t) {
    m %= modulus;
    if (m < 0) m += modulus;
    t %= modulus;
    if (t < 0) t += modulus;
    constraints.push_back({m, t});
  }
};

// Solutions e = r (mod mod), with mod dividing the system modulus.
struct ResidueClass {
  long r = 0;
  long mod = 1;

  bool contains(long e) const { return ((e - r) % mod + mod) % mod == 0; }
};

// t with r = omega^t, or nothing when r is not an M-th root of unity.
inline std::optional<long> ratio_to_residue(const GaussianRational& r, long M) {
  auto s = r.unit_exponent();
  if (!s) return std::nullopt;
  switch (*s) {
    case 0: return 0;
    case 2: return M % 2 == 0 ? std::optional<long>(M / 2) : std::nullopt;
    case 1: return M % 4 == 0 ? std::optional<long>(M / 4) : std::nullopt;
    default: return M % 4 == 0 ? std::optional<long>(3 * M / 4) : std::nullopt;
  }
}

namespace detail {

// Extended gcd; returns g and x with a*x = g (mod m) contributions.
inline long egcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long x1 = 0, y1 = 0;
  long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline long mod_inverse(long a, long m) {
  if (m == 1) return 0;
  long x = 0, y = 0;
  long g = egcd(((a % m) + m) % m, m, x, y);
  if (g != 1) throw InternalError("modular inverse of a non-unit");
  return ((x % m) + m) % m;
}

inline std::optional<ResidueClass> merge(const ResidueClass& a, const ResidueClass& b) {
  long g = std::gcd(a.mod, b.mod);
  long diff = b.r - a.r;
  if (diff % g != 0) return std::nullopt;
  long lcm = a.mod / g * b.mod;
  long step = b.mod / g;
  long k = ((diff / g) % step + step) % step;
  k = k * mod_inverse((a.mod / g) % step, step) % step;
  long r = (a.r + a.mod % lcm * k) % lcm;
  return ResidueClass{((r % lcm) + lcm) % lcm, lcm};
}

}  // namespace detail

inline std::optional<ResidueClass> solve_congruences(const CongruenceSystem& sys) {
  long M = sys.modulus;
  if (M < 1) throw std::invalid_argument("modulus must be positive");
  ResidueClass sol{0, 1};
  for (auto [m, t] : sys.constraints) {
    long g = std::gcd(m, M);  // m = 0 gives g = M
    if (t % g != 0) return std::nullopt;
    long mod = M / g;
    ResidueClass c{0, 1};
    if (mod > 1) c = ResidueClass{t / g % mod * detail::mod_inverse(m / g, mod) % mod, mod};
    auto merged = detail::merge(sol, c);
    if (!merged) return std::nullopt;
    sol = *merged;
  }
  return sol;
}

// The concrete fourth root of unity omega^e, when it lies in Q(i).
inline std::optional<GaussianRational> zeta_from_exponent(long e, long M) {
  e = ((e % M) + M) % M;
  if ((4 * e) % M != 0) return std::nullopt;
  return GaussianRational::i_power(4 * e / M % 4);
}

struct ConjugacyWitness {
  long e = 0;       // smallest admissible exponent, zeta = omega^e
  long modulus = 1; // M = deg(F) - 1
  ResidueClass all; // the full progression of admissible exponents
};

struct BiholoWitness {
  long k = 0;  // rotation index, 1..N
  long e = 0;
  long modulus = 1;
};

namespace detail {

inline bool same_degree_profile(const Degrees& a, const Degrees& b) {
  return a.d == b.d;
}

// Collects the factor-level constraints of G = theta(F): each coefficient
// slot ratio must be zeta^{l D_{i-1}}, each Jacobian ratio zeta^{D_i - D_{i-2}}
// with D_{-1} = D_{N-1}. Returns nothing when a ratio rules conjugacy out.
inline std::optional<CongruenceSystem> factor_constraints(const HenonMap& F, const HenonMap& G,
                                                          const Degrees& deg) {
  long N = deg.N();
  long M = deg.total() - 1;
  CongruenceSystem sys{M, {}};
  for (long i = 1; i <= N; ++i) {
    const HenonFactor& f = F.factor(i);
    const HenonFactor& g = G.factor(i);
    for (long l = 2; l <= f.d; ++l) {
      const GaussianRational& cf = f.p_coeffs[static_cast<std::size_t>(f.d - l)];
      const GaussianRational& cg = g.p_coeffs[static_cast<std::size_t>(f.d - l)];
      if (cf.is_zero() && cg.is_zero()) continue;
      if (cf.is_zero() || cg.is_zero()) return std::nullopt;
      auto t = ratio_to_residue(cg / cf, M);
      if (!t) return std::nullopt;
      sys.add(l * deg.D[static_cast<std::size_t>(i - 1)], *t);
    }
    auto t = ratio_to_residue(g.a / f.a, M);
    if (!t) return std::nullopt;
    long d_im2 = (i == 1) ? deg.D[static_cast<std::size_t>(N - 1)]
                          : deg.D[static_cast<std::size_t>(i - 2)];
    sys.add(deg.D[static_cast<std::size_t>(i)] - d_im2, *t);
  }
  return sys;
}

}  // namespace detail

// Are F and G conjugate as germs at infinity? Equivalent to G being the
// theta-conjugate of F for some root of unity zeta with zeta^{deg(F)-1} = 1.
inline std::optional<ConjugacyWitness> conjugate_near_infinity(const HenonMap& F,
                                                               const HenonMap& G) {
  Degrees df = degrees(F);
  Degrees dg = degrees(G);
  if (!detail::same_degree_profile(df, dg)) return std::nullopt;
  long M = df.total() - 1;
  if (M == 1) {
    if (F == G) return ConjugacyWitness{0, 1, {0, 1}};
    return std::nullopt;
  }
  auto sys = detail::factor_constraints(F, G, df);
  if (!sys) return std::nullopt;
  auto sol = solve_congruences(*sys);
  if (!sol) return std::nullopt;
  return ConjugacyWitness{sol->r, M, *sol};
}

// Same decision through the normal forms: lambdas must agree and the h-hat
// coefficients must satisfy b^G_n / b^F_n = zeta^{n + D_{N-1} - 1}.
inline std::optional<ConjugacyWitness> conjugate_via_normal_forms(const HenonMap& F,
                                                                  const HenonMap& G,
                                                                  long top = 0) {
  Degrees df = degrees(F);
  Degrees dg = degrees(G);
  if (!detail::same_degree_profile(df, dg)) return std::nullopt;
  long p = df.total();
  if (df.A != dg.A) return std::nullopt;  // lambda = A / p is a conjugacy invariant
  Series hf = h_hat(F, top);
  Series hg = h_hat(G, top);
  long M = p - 1;
  if (M == 1) {
    if (hf == hg) return ConjugacyWitness{0, 1, {0, 1}};
    return std::nullopt;
  }
  long dn1 = df.D[static_cast<std::size_t>(df.N() - 1)];
  CongruenceSystem sys{M, {}};
  for (long n = 1; n <= hf.order(); ++n) {
    if (hf[n].is_zero() && hg[n].is_zero()) continue;
    if (hf[n].is_zero() || hg[n].is_zero()) return std::nullopt;
    auto t = ratio_to_residue(hg[n] / hf[n], M);
    if (!t) return std::nullopt;
    sys.add(n + dn1 - 1, *t);
  }
  auto sol = solve_congruences(sys);
  if (!sol) return std::nullopt;
  return ConjugacyWitness{sol->r, M, *sol};
}

// Are the Kato surfaces of F and G biholomorphic? True exactly when G is
// conjugate near infinity to some rotation of the factor cycle of F.
inline std::optional<BiholoWitness> kato_biholomorphic(const HenonMap& F, const HenonMap& G) {
  Degrees df = degrees(F);
  Degrees dg = degrees(G);
  std::vector<long> offsets = cyclic_equal(df.d, dg.d);
  for (long off : offsets) {
    long k = off == 0 ? df.N() : off;
    auto w = conjugate_near_infinity(rotate(F, k), G);
    if (w) return BiholoWitness{k, w->e, w->modulus};
  }
  return std::nullopt;
}

}  // namespace henkato
