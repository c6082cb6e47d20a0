#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "henkato/errors.hpp"
#include "henkato/henon.hpp"
#include "henkato/series.hpp"

namespace henkato {

// Transition maps psi_i between the partial Boettcher coordinates phi_{0,i};
// each is tangent to the identity and known up to the working exponent.
struct PsiChain {
  std::vector<LaurentSeries> psis;

  const LaurentSeries& psi(long i) const { return psis.at(static_cast<std::size_t>(i - 1)); }
};

// The germ's polynomial normal form data: (x,y) -> (x^p, lambda*y*x^{2p-2} + g(x)),
// with g stored densely on exponents 0..2p-2. The x^p slot of g carries
// b_{2p-1}/lambda, where b_n are the coefficients of h-hat. When lambda = 1
// the x^{2p} coefficient of the true normal form exists but is not computed,
// hence the flag.
struct NormalForm {
  long p = 0;
  GaussianRational lambda;
  std::vector<GaussianRational> g;  // index = exponent, size 2p-1
  bool c_undetermined = false;

  const GaussianRational& g_at(long n) const { return g.at(static_cast<std::size_t>(n)); }

  std::set<long> support() const {
    std::set<long> s;
    for (long n = 1; n < static_cast<long>(g.size()); ++n)
      if (!g[static_cast<std::size_t>(n)].is_zero()) s.insert(n);
    return s;
  }

  friend bool operator==(const NormalForm& x, const NormalForm& y) {
    return x.p == y.p && x.lambda == y.lambda && x.g == y.g &&
           x.c_undetermined == y.c_undetermined;
  }
  friend bool operator!=(const NormalForm& x, const NormalForm& y) { return !(x == y); }
};

inline long default_working_top(const Degrees& deg) { return 2 * deg.total(); }

// psi_1 = x * U_1(x)^{-1/d_1}, and for i >= 2
//   psi_i = x * E_i(x)^{-1/D_i},
//   E_i(x) = U_i(x^{D_{i-1}}) - a_i x^{D_i} (psi_{i-1}^{-1}(x))^{-D_{i-2}}.
// Every psi_i comes out known up to the absolute exponent `top`.
inline PsiChain psi_chain(const HenonMap& m, long top = 0) {
  Degrees deg = degrees(m);
  if (top <= 0) top = default_working_top(deg);
  if (top < 2) throw std::invalid_argument("working order too small");
  const long T = top;
  PsiChain chain;

  chain.psis.push_back(LaurentSeries(1, pow_rational(u_series(m, 1, T - 1), mpq_class(-1, deg.d[0]))));

  for (long i = 2; i <= deg.N(); ++i) {
    long Di = deg.D[static_cast<std::size_t>(i)];
    long Dprev = deg.D[static_cast<std::size_t>(i - 1)];
    long Dprev2 = deg.D[static_cast<std::size_t>(i - 2)];

    // The inverse power is multiplied by a_i x^{D_i}, so exponents of
    // psi_{i-1}^{-1} beyond T + D_{i-2} - D_i cannot reach the truncation.
    LaurentSeries inv_prev =
        comp_inverse(chain.psis.back().truncated_to_top(T + Dprev2 - Di));
    LaurentSeries tail = pow_int(inv_prev, -Dprev2);
    tail = mul(tail, LaurentSeries::monomial(m.factor(i).a, Di, Di + T));

    Series usub(T);
    const HenonFactor& f = m.factor(i);
    for (long l = 0; l <= f.d && l * Dprev <= T; ++l)
      usub.at(l * Dprev) = f.p_coeffs[static_cast<std::size_t>(f.d - l)];

    LaurentSeries e = sub(LaurentSeries::from_series(usub), tail);
    Series e_series = e.to_series(T - 1);
    chain.psis.push_back(LaurentSeries(1, pow_rational(e_series, mpq_class(-1, Di))));
  }
  return chain;
}

// phi_{0,i} = x * (V_i(x,0))^{-1/D_i}, computed straight from the reversed
// polynomial q_i. Independent route to the same data as psi_chain:
// psi_i = phi_{0,i} o phi_{0,i-1}^{-1}.
inline LaurentSeries phi_direct(const HenonMap& m, long i, long top = 0) {
  Degrees deg = degrees(m);
  if (top <= 0) top = default_working_top(deg);
  if (i < 1 || i > deg.N()) throw std::out_of_range("phi_direct index out of range");
  Series v = v_series(m, i, top - 1);
  return LaurentSeries(1, pow_rational(v, mpq_class(-1, deg.D[static_cast<std::size_t>(i)])));
}

// h-hat = x^{D_N} (psi_N^{-1}(x))^{-D_{N-1}}, truncated below x^{2 D_N}.
// Its valuation is D_N - D_{N-1} with lowest coefficient 1, and the
// coefficient at x^{D_N} always vanishes.
inline Series h_hat(const HenonMap& m, long top = 0) {
  Degrees deg = degrees(m);
  if (top <= 0) top = default_working_top(deg);
  long N = deg.N();
  long p = deg.total();
  long dn1 = deg.D[static_cast<std::size_t>(N - 1)];
  PsiChain chain = psi_chain(m, top);
  long hi = std::min(2 * p - 1, top - 1 - dn1 + p);
  LaurentSeries inv = comp_inverse(chain.psis.back().truncated_to_top(hi + 1 + dn1 - p));
  LaurentSeries h = pow_int(inv, -dn1).shifted(p);
  return h.to_series(std::min(hi, h.top()));
}

inline NormalForm normal_form(const HenonMap& m, long top = 0) {
  Degrees deg = degrees(m);
  const long p = deg.total();
  if (top <= 0) top = 2 * p;
  if (top < 2 * p) throw ValidationError("working order must be at least 2*deg(F)");
  Series h = h_hat(m, top);

  NormalForm nf;
  nf.p = p;
  nf.lambda = deg.A * mpq_class(1, p);
  nf.c_undetermined = nf.lambda.is_one();
  nf.g.assign(static_cast<std::size_t>(2 * p - 1), GaussianRational());

  long j = p - deg.D[static_cast<std::size_t>(deg.N() - 1)];
  for (long n = 1; n < j; ++n)
    if (!h[n].is_zero()) throw InternalError("h-hat has a term below its predicted valuation");
  if (!h[j].is_one()) throw InternalError("h-hat's lowest coefficient is not 1");
  if (!h[p].is_zero()) throw InternalError("h-hat's x^p coefficient is nonzero");

  for (long n = 1; n <= 2 * p - 2; ++n)
    if (n != p) nf.g[static_cast<std::size_t>(n)] = h[n];
  nf.g[static_cast<std::size_t>(p)] = h[2 * p - 1] / nf.lambda;
  return nf;
}

}  // namespace henkato
