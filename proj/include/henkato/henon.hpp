#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "henkato/errors.hpp"
#include "henkato/gaussian_rational.hpp"
#include "henkato/series.hpp"

namespace henkato {

// One standard factor (z,w) -> (P(z) - a*w, z) with P monic and centered.
struct HenonFactor {
  long d = 0;                                // degree of P, >= 2
  std::vector<GaussianRational> p_coeffs;    // dense ascending, size d+1
  GaussianRational a;                        // Jacobian factor, != 0

  // P with coefficient of z^{d-l} given by low_coeffs[l], l = 2..d.
  static HenonFactor monic_centered(long d, std::vector<GaussianRational> low_coeffs,
                                    GaussianRational a) {
    if (d < 2) throw std::invalid_argument("factor degree must be >= 2");
    if (static_cast<long>(low_coeffs.size()) != d - 1)
      throw std::invalid_argument("expected d-1 low coefficients");
    HenonFactor f;
    f.d = d;
    f.p_coeffs.assign(static_cast<std::size_t>(d) + 1, GaussianRational());
    f.p_coeffs[static_cast<std::size_t>(d)] = GaussianRational(1);
    for (long l = 2; l <= d; ++l) f.p_coeffs[static_cast<std::size_t>(d - l)] = low_coeffs[l - 2];
    f.a = std::move(a);
    return f;
  }

  friend bool operator==(const HenonFactor& x, const HenonFactor& y) {
    return x.d == y.d && x.p_coeffs == y.p_coeffs && x.a == y.a;
  }
  friend bool operator!=(const HenonFactor& x, const HenonFactor& y) { return !(x == y); }
};

// Ordered factor list [F_1, ..., F_N]; the composed map is F_N o ... o F_1.
class HenonMap {
public:
  HenonMap() = default;
  explicit HenonMap(std::vector<HenonFactor> factors) : factors_(std::move(factors)) {}

  long size() const { return static_cast<long>(factors_.size()); }
  const HenonFactor& factor(long i) const { return factors_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<HenonFactor>& factors() const { return factors_; }

  friend bool operator==(const HenonMap& x, const HenonMap& y) { return x.factors_ == y.factors_; }
  friend bool operator!=(const HenonMap& x, const HenonMap& y) { return !(x == y); }

private:
  std::vector<HenonFactor> factors_;
};

inline std::vector<std::string> validate(const HenonMap& m) {
  std::vector<std::string> bad;
  if (m.size() == 0) {
    bad.push_back("empty factor list");
    return bad;
  }
  for (long i = 1; i <= m.size(); ++i) {
    const HenonFactor& f = m.factor(i);
    std::string where = "factor " + std::to_string(i);
    if (f.d < 2) {
      bad.push_back("degree < 2, " + where);
      continue;
    }
    if (static_cast<long>(f.p_coeffs.size()) != f.d + 1) {
      bad.push_back("coefficient list has wrong length, " + where);
      continue;
    }
    if (!f.p_coeffs[static_cast<std::size_t>(f.d)].is_one()) bad.push_back("not monic, " + where);
    if (!f.p_coeffs[static_cast<std::size_t>(f.d - 1)].is_zero())
      bad.push_back("not centered, " + where);
    if (f.a.is_zero()) bad.push_back("a = 0, " + where);
  }
  return bad;
}

inline bool is_valid(const HenonMap& m) { return validate(m).empty(); }

inline void require_valid(const HenonMap& m) {
  auto bad = validate(m);
  if (bad.empty()) return;
  std::string msg = "invalid Henon map:";
  for (const auto& b : bad) msg += " [" + b + "]";
  throw ValidationError(msg);
}

struct Degrees {
  std::vector<long> d;  // d[i-1] = deg P_i
  std::vector<long> D;  // D[i] = d_1 * ... * d_i, D[0] = 1
  GaussianRational A;   // product of the a_i

  long N() const { return static_cast<long>(d.size()); }
  long total() const { return D.back(); }
};

inline Degrees degrees(const HenonMap& m) {
  require_valid(m);
  Degrees out;
  out.D.push_back(1);
  out.A = GaussianRational(1);
  for (long i = 1; i <= m.size(); ++i) {
    const HenonFactor& f = m.factor(i);
    out.d.push_back(f.d);
    long next = 0;
    if (__builtin_mul_overflow(out.D.back(), f.d, &next))
      throw ValidationError("degree product overflows");
    out.D.push_back(next);
    out.A *= f.a;
  }
  return out;
}

namespace poly {

// Dense ascending coefficient vectors; exact polynomial arithmetic.
using Poly = std::vector<GaussianRational>;

inline Poly mul(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j].is_zero()) continue;
      r[i + j] += p[i] * q[j];
    }
  }
  return r;
}

inline void add_scaled(Poly& p, const Poly& q, const GaussianRational& c) {
  if (p.size() < q.size()) p.resize(q.size());
  for (std::size_t j = 0; j < q.size(); ++j)
    if (!q[j].is_zero()) p[j] += q[j] * c;
}

// p(q) by Horner over the coefficients of p.
inline Poly compose(const Poly& p, const Poly& q) {
  Poly acc{p.back()};
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    acc = mul(acc, q);
    acc[0] += p[k];
  }
  return acc;
}

inline GaussianRational eval(const Poly& p, const GaussianRational& z) {
  GaussianRational acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

}  // namespace poly

// q_i(z) = Q_i(z, 0) from q_0 = z, q_1 = P_1, q_i = P_i(q_{i-1}) - a_i q_{i-2}.
inline poly::Poly q_restriction(const HenonMap& m, long i) {
  require_valid(m);
  if (i < 0 || i > m.size()) throw std::out_of_range("q_restriction index out of range");
  poly::Poly prevprev{GaussianRational(0), GaussianRational(1)};  // z
  if (i == 0) return prevprev;
  poly::Poly prev = m.factor(1).p_coeffs;
  for (long k = 2; k <= i; ++k) {
    poly::Poly next = poly::compose(m.factor(k).p_coeffs, prev);
    poly::add_scaled(next, prevprev, -m.factor(k).a);
    prevprev = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

// U_i(x) = x^{d_i} P_i(1/x), padded with exact zeros up to `order`.
inline Series u_series(const HenonMap& m, long i, long order) {
  require_valid(m);
  const HenonFactor& f = m.factor(i);
  Series u(order);
  for (long l = 0; l <= f.d && l <= order; ++l)
    u.at(l) = f.p_coeffs[static_cast<std::size_t>(f.d - l)];
  return u;
}

// V_i(x, 0) = x^{D_i} q_i(1/x), padded with exact zeros up to `order`.
inline Series v_series(const HenonMap& m, long i, long order) {
  poly::Poly q = q_restriction(m, i);
  long deg = static_cast<long>(q.size()) - 1;
  Series v(order);
  for (long l = 0; l <= deg && l <= order; ++l) v.at(l) = q[static_cast<std::size_t>(deg - l)];
  return v;
}

// Factor list [F_{k+1},...,F_N,F_1,...,F_k]: the composition read off is
// F_k o ... o F_1 o F_N o ... o F_{k+1}. rotate(m, N) = m.
inline HenonMap rotate(const HenonMap& m, long k) {
  require_valid(m);
  if (k < 1 || k > m.size()) throw std::out_of_range("rotation index out of range");
  std::vector<HenonFactor> fs;
  fs.reserve(static_cast<std::size_t>(m.size()));
  for (long i = k + 1; i <= m.size(); ++i) fs.push_back(m.factor(i));
  for (long i = 1; i <= k; ++i) fs.push_back(m.factor(i));
  return HenonMap(std::move(fs));
}

// Conjugation by theta_i(z,w) = (zeta^{D_i} z, zeta^{D_{i-1}} w) applied
// factorwise, with D_{-1} = D_{N-1}. Requires zeta^{D_N - 1} = 1 and zeta
// one of the four roots of unity of Q(i). The coefficient of z^{d_i - l}
// picks up zeta^{l D_{i-1}}; a_i picks up zeta^{D_i - D_{i-2}}.
inline HenonMap theta_conjugate(const HenonMap& m, const GaussianRational& zeta) {
  Degrees deg = degrees(m);
  auto s = zeta.unit_exponent();
  if (!s) throw ValidationError("zeta must be one of 1, -1, i, -i");
  if (GaussianRational::pow(zeta, deg.total() - 1) != GaussianRational(1))
    throw ValidationError("zeta^(deg(F)-1) != 1");
  long N = deg.N();
  std::vector<HenonFactor> fs;
  for (long i = 1; i <= N; ++i) {
    const HenonFactor& f = m.factor(i);
    HenonFactor g = f;
    for (long l = 0; l <= f.d; ++l) {
      long e = l * deg.D[static_cast<std::size_t>(i - 1)];
      GaussianRational& c = g.p_coeffs[static_cast<std::size_t>(f.d - l)];
      if (!c.is_zero()) c *= GaussianRational::i_power(*s * e);
    }
    long d_im2 = (i == 1) ? deg.D[static_cast<std::size_t>(N - 1)]
                          : deg.D[static_cast<std::size_t>(i - 2)];
    g.a *= GaussianRational::i_power(*s * (deg.D[static_cast<std::size_t>(i)] - d_im2));
    fs.push_back(std::move(g));
  }
  return HenonMap(std::move(fs));
}

// Pointwise evaluation of the composed map: repeatedly (z, w) -> (P_i(z) - a_i w, z).
// Starting from w = 0 this returns (q_N(z), q_{N-1}(z)).
inline std::pair<GaussianRational, GaussianRational> eval_map(const HenonMap& m,
                                                              const GaussianRational& z0,
                                                              const GaussianRational& w0) {
  require_valid(m);
  GaussianRational z = z0, w = w0;
  for (long k = 1; k <= m.size(); ++k) {
    GaussianRational next = poly::eval(m.factor(k).p_coeffs, z) - m.factor(k).a * w;
    w = z;
    z = next;
  }
  return {z, w};
}

}  // namespace henkato
