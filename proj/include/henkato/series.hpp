#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "henkato/gaussian_rational.hpp"

namespace henkato {

// Truncated power series over Q(i): coefficients of x^0..x^order are known
// exactly, everything above is unknown. Arithmetic never extends precision:
// results carry the minimum of the input orders.
class Series {
public:
  explicit Series(long order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.assign(static_cast<std::size_t>(order) + 1, GaussianRational());
  }

  static Series one(long order) {
    Series s(order);
    s.c_[0] = GaussianRational(1);
    return s;
  }

  static Series constant(const GaussianRational& v, long order) {
    Series s(order);
    s.c_[0] = v;
    return s;
  }

  long order() const { return static_cast<long>(c_.size()) - 1; }

  const GaussianRational& operator[](long k) const {
    if (k < 0 || k > order()) throw std::logic_error("series coefficient index out of known range");
    return c_[static_cast<std::size_t>(k)];
  }

  GaussianRational& at(long k) {
    if (k < 0 || k > order()) throw std::logic_error("series coefficient index out of known range");
    return c_[static_cast<std::size_t>(k)];
  }

  bool is_identically_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  Series truncated(long new_order) const {
    if (new_order > order()) throw std::logic_error("cannot extend series precision by truncation");
    Series s(new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
    return s;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
  std::vector<GaussianRational> c_;
};

inline Series add(const Series& f, const Series& g) {
  long m = std::min(f.order(), g.order());
  Series r(m);
  for (long k = 0; k <= m; ++k) r.at(k) = f[k] + g[k];
  return r;
}

inline Series sub(const Series& f, const Series& g) {
  long m = std::min(f.order(), g.order());
  Series r(m);
  for (long k = 0; k <= m; ++k) r.at(k) = f[k] - g[k];
  return r;
}

inline Series negate(const Series& f) {
  Series r(f.order());
  for (long k = 0; k <= f.order(); ++k) r.at(k) = -f[k];
  return r;
}

inline Series scale(const Series& f, const GaussianRational& c) {
  Series r(f.order());
  if (c.is_zero()) return r;
  for (long k = 0; k <= f.order(); ++k)
    if (!f[k].is_zero()) r.at(k) = f[k] * c;
  return r;
}

namespace detail {

inline std::size_t max_den_bits(const Series& f, long upto) {
  std::size_t bits = 0;
  for (long k = 0; k <= upto; ++k) {
    bits = std::max(bits, mpz_sizeinbase(f[k].re().get_den().get_mpz_t(), 2));
    bits = std::max(bits, mpz_sizeinbase(f[k].im().get_den().get_mpz_t(), 2));
  }
  return bits;
}

// Exact convolution over a common denominator: Gaussian-integer numerators,
// mpz accumulation without per-term gcds, one canonicalization per output
// coefficient. Pays off once denominators are wide.
inline Series mul_via_integers(const Series& f, const Series& g, long m) {
  auto load = [m](const Series& s, std::vector<mpz_class>& re, std::vector<mpz_class>& im,
                  mpz_class& den) {
    long n = std::min(s.order(), m);
    den = 1;
    for (long k = 0; k <= n; ++k) {
      den = lcm(den, s[k].re().get_den());
      den = lcm(den, s[k].im().get_den());
    }
    re.resize(static_cast<std::size_t>(n) + 1);
    im.resize(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), den.get_mpz_t(), s[k].re().get_den().get_mpz_t());
      re[static_cast<std::size_t>(k)] = s[k].re().get_num() * q;
      mpz_divexact(q.get_mpz_t(), den.get_mpz_t(), s[k].im().get_den().get_mpz_t());
      im[static_cast<std::size_t>(k)] = s[k].im().get_num() * q;
    }
  };
  std::vector<mpz_class> fr, fi, gr, gi;
  mpz_class fden, gden;
  load(f, fr, fi, fden);
  load(g, gr, gi, gden);
  std::vector<mpz_class> zr(static_cast<std::size_t>(m) + 1), zi(static_cast<std::size_t>(m) + 1);
  for (long j = 0; j < static_cast<long>(fr.size()); ++j) {
    bool jr = fr[static_cast<std::size_t>(j)] != 0;
    bool ji = fi[static_cast<std::size_t>(j)] != 0;
    if (!jr && !ji) continue;
    long top = std::min<long>(static_cast<long>(gr.size()) - 1, m - j);
    for (long k = 0; k <= top; ++k) {
      auto& a = fr[static_cast<std::size_t>(j)];
      auto& b = fi[static_cast<std::size_t>(j)];
      auto& c = gr[static_cast<std::size_t>(k)];
      auto& d = gi[static_cast<std::size_t>(k)];
      auto& tr = zr[static_cast<std::size_t>(j + k)];
      auto& ti = zi[static_cast<std::size_t>(j + k)];
      if (jr) {
        if (c != 0) mpz_addmul(tr.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        if (d != 0) mpz_addmul(ti.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
      }
      if (ji) {
        if (d != 0) mpz_submul(tr.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
        if (c != 0) mpz_addmul(ti.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
      }
    }
  }
  mpz_class den = fden * gden;
  Series r(m);
  for (long n = 0; n <= m; ++n) {
    mpq_class re(zr[static_cast<std::size_t>(n)], den), im(zi[static_cast<std::size_t>(n)], den);
    re.canonicalize();
    im.canonicalize();
    r.at(n) = GaussianRational(std::move(re), std::move(im));
  }
  return r;
}

}  // namespace detail

inline Series mul(const Series& f, const Series& g) {
  long m = std::min(f.order(), g.order());
  if (m >= 16 &&
      detail::max_den_bits(f, std::min(f.order(), m)) +
              detail::max_den_bits(g, std::min(g.order(), m)) >
          128)
    return detail::mul_via_integers(f, g, m);
  Series r(m);
  for (long j = 0; j <= std::min(f.order(), m); ++j) {
    if (f[j].is_zero()) continue;
    long top = std::min(g.order(), m - j);
    for (long k = 0; k <= top; ++k) {
      if (g[k].is_zero()) continue;
      GaussianRational::add_mul(r.at(j + k), f[j], g[k]);
    }
  }
  return r;
}

// 1/f for f with nonzero constant term.
inline Series reciprocal_unit(const Series& f) {
  if (f[0].is_zero()) throw std::invalid_argument("reciprocal needs a nonzero constant term");
  long m = f.order();
  Series r(m);
  GaussianRational inv0 = f[0].inverse();
  r.at(0) = inv0;
  for (long n = 1; n <= m; ++n) {
    GaussianRational acc;
    for (long k = 1; k <= n; ++k) {
      if (f[k].is_zero() || r[n - k].is_zero()) continue;
      GaussianRational::add_mul(acc, f[k], r[n - k]);
    }
    if (!acc.is_zero()) r.at(n) = -(acc * inv0);
  }
  return r;
}

// Principal-branch (1+u)^alpha for f = 1+u with u(0)=0, alpha rational.
// Coefficientwise this is the binomial expansion with exact rational
// binomial coefficients; computed through the first-order relation
// n*y_n = sum_{k=1..n} (alpha*k - (n-k)) f_k y_{n-k}.
inline Series pow_rational(const Series& f, const mpq_class& alpha) {
  if (!f[0].is_one()) throw std::invalid_argument("pow_rational needs constant term exactly 1");
  long m = f.order();
  Series y(m);
  y.at(0) = GaussianRational(1);
  if (alpha == 0) return y;
  for (long n = 1; n <= m; ++n) {
    GaussianRational acc;
    for (long k = 1; k <= n; ++k) {
      if (f[k].is_zero() || y[n - k].is_zero()) continue;
      mpq_class w = alpha * k - (n - k);
      if (w == 0) continue;
      GaussianRational::add_mul(acc, f[k] * w, y[n - k]);
    }
    if (!acc.is_zero()) y.at(n) = acc * mpq_class(1, n);
  }
  return y;
}

// f(x^k) for k >= 1, assuming the substitution is by the exact monomial x^k.
// Knowledge extends to exponent k*(order+1)-1: the gaps are known zeros.
inline Series substitute_power(const Series& f, long k) {
  if (k < 1) throw std::invalid_argument("substitute_power needs k >= 1");
  long m = k * (f.order() + 1) - 1;
  Series r(m);
  for (long j = 0; j <= f.order(); ++j)
    if (!f[j].is_zero()) r.at(j * k) = f[j];
  return r;
}

// Laurent series x^val * u(x) with u(0) != 0, plus a designated zero state.
// A value knows its coefficients for all exponents <= top(): below val they
// are zero, in [val, top] they live in the unit. A zero produced by
// cancellation keeps the exponent bound it is known to vanish below.
class LaurentSeries {
public:
  static constexpr long kExactTop = std::numeric_limits<long>::max() / 4;

  LaurentSeries(long val, Series unit) : zero_(false), val_(val), unit_(std::move(unit)) {
    long j = 0;
    while (j <= unit_.order() && unit_[j].is_zero()) ++j;
    if (j > unit_.order()) {
      zero_ = true;
      zero_top_ = val_ + unit_.order();
      unit_ = Series(0);
      val_ = 0;
    } else if (j > 0) {
      Series shifted(unit_.order() - j);
      for (long k = j; k <= unit_.order(); ++k) shifted.at(k - j) = unit_[k];
      val_ += j;
      unit_ = std::move(shifted);
    }
  }

  static LaurentSeries zero() {
    LaurentSeries z;
    z.zero_top_ = kExactTop;
    return z;
  }

  static LaurentSeries zero_known_to(long top) {
    LaurentSeries z;
    z.zero_top_ = std::min(top, kExactTop);
    return z;
  }

  static LaurentSeries from_series(const Series& s) { return LaurentSeries(0, s); }

  // c * x^e with c != 0, known up to exponent `top`.
  static LaurentSeries monomial(const GaussianRational& c, long e, long top) {
    if (c.is_zero()) throw std::invalid_argument("monomial coefficient must be nonzero");
    if (top < e) throw std::invalid_argument("monomial knowledge bound below its exponent");
    return LaurentSeries(e, Series::constant(c, top - e));
  }

  static LaurentSeries identity(long top) { return monomial(GaussianRational(1), 1, top); }

  bool is_zero() const { return zero_; }

  long val() const {
    if (zero_) throw std::logic_error("valuation of a zero Laurent series is undefined");
    return val_;
  }

  long top() const { return zero_ ? zero_top_ : val_ + unit_.order(); }

  const Series& unit() const {
    if (zero_) throw std::logic_error("unit of a zero Laurent series is undefined");
    return unit_;
  }

  GaussianRational coeff(long n) const {
    if (n > top()) throw std::logic_error("Laurent coefficient above knowledge bound");
    if (zero_ || n < val_) return GaussianRational();
    return unit_[n - val_];
  }

  LaurentSeries shifted(long k) const {
    if (zero_) return zero_known_to(top() >= kExactTop ? kExactTop : top() + k);
    return LaurentSeries(val_ + k, unit_);
  }

  // Forget knowledge above the given absolute exponent.
  LaurentSeries truncated_to_top(long new_top) const {
    if (top() <= new_top) return *this;
    if (zero_ || new_top < val_) return zero_known_to(new_top);
    return LaurentSeries(val_, unit_.truncated(new_top - val_));
  }

  // Dense coefficients 0..order; requires val >= 0 (or zero) and order <= top.
  Series to_series(long order) const {
    if (!zero_ && val_ < 0) throw std::invalid_argument("negative valuation does not fit a power series");
    if (order > top()) throw std::logic_error("requested order above knowledge bound");
    Series s(order);
    for (long n = zero_ ? order + 1 : std::max(val_, 0L); n <= order; ++n) s.at(n) = coeff(n);
    return s;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.zero_ != b.zero_) return false;
    if (a.zero_) return a.zero_top_ == b.zero_top_;
    return a.val_ == b.val_ && a.unit_ == b.unit_;
  }
  friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

private:
  LaurentSeries() : zero_(true), zero_top_(kExactTop), val_(0), unit_(0) {}

  bool zero_;
  long zero_top_ = kExactTop;
  long val_;
  Series unit_;
};

namespace detail {
inline long cap_top(long t) { return std::min(t, LaurentSeries::kExactTop); }
}

inline LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g) {
  long top = std::min(f.top(), g.top());
  if (f.is_zero() && g.is_zero()) return LaurentSeries::zero_known_to(top);
  if (f.is_zero() && f.top() >= g.top()) return g;
  if (g.is_zero() && g.top() >= f.top()) return f;
  long lo = std::min(f.is_zero() ? top : f.val(), g.is_zero() ? top : g.val());
  if (lo > top) return LaurentSeries::zero_known_to(top);
  Series c(top - lo);
  for (long n = lo; n <= top; ++n) c.at(n - lo) = f.coeff(n) + g.coeff(n);
  return LaurentSeries(lo, std::move(c));
}

inline LaurentSeries negate(const LaurentSeries& f) {
  if (f.is_zero()) return f;
  return LaurentSeries(f.val(), negate(f.unit()));
}

inline LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g) { return add(f, negate(g)); }

inline LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g) {
  if (f.is_zero() || g.is_zero()) {
    if (f.is_zero() && f.top() >= LaurentSeries::kExactTop && g.is_zero() &&
        g.top() >= LaurentSeries::kExactTop)
      return LaurentSeries::zero();
    if (f.is_zero() && f.top() >= LaurentSeries::kExactTop) return LaurentSeries::zero();
    if (g.is_zero() && g.top() >= LaurentSeries::kExactTop) return LaurentSeries::zero();
    // O(x^{T+1}) * (x^v + ...) vanishes below T+1+v.
    if (f.is_zero() && g.is_zero())
      return LaurentSeries::zero_known_to(detail::cap_top(f.top() + g.top() + 1));
    const LaurentSeries& z = f.is_zero() ? f : g;
    const LaurentSeries& n = f.is_zero() ? g : f;
    return LaurentSeries::zero_known_to(detail::cap_top(z.top() + n.val()));
  }
  return LaurentSeries(f.val() + g.val(), mul(f.unit(), g.unit()));
}

enum class ArithKind { add, sub, mul };

inline LaurentSeries arith(const LaurentSeries& f, const LaurentSeries& g, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return add(f, g);
    case ArithKind::sub: return sub(f, g);
    default: return mul(f, g);
  }
}

inline LaurentSeries reciprocal(const LaurentSeries& f) {
  if (f.is_zero()) throw std::invalid_argument("reciprocal of zero");
  return LaurentSeries(-f.val(), reciprocal_unit(f.unit()));
}

// f^n for integer n (negative allowed).
inline LaurentSeries pow_int(const LaurentSeries& f, long n) {
  if (f.is_zero()) {
    if (n <= 0) throw std::invalid_argument("zero Laurent series has no inverse powers");
    return LaurentSeries::zero_known_to(detail::cap_top(n * (f.top() + 1) - 1));
  }
  if (n == 0) return LaurentSeries(0, Series::one(f.unit().order()));
  if (f.unit()[0].is_one()) return LaurentSeries(n * f.val(), pow_rational(f.unit(), mpq_class(n)));
  Series base = n < 0 ? reciprocal_unit(f.unit()) : f.unit();
  unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
  Series acc = Series::one(base.order());
  while (e != 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return LaurentSeries(n * f.val(), std::move(acc));
}

// f(g(x)) for a power series f and g of valuation >= 1; plain Horner.
inline Series compose(const Series& f, const LaurentSeries& g) {
  if (g.is_zero()) {
    Series r(std::min(f.order(), g.top()));
    r.at(0) = f[0];
    return r;
  }
  if (g.val() < 1) throw std::invalid_argument("composition needs inner valuation >= 1");
  long m = std::min(f.order(), g.top());
  Series gs = g.to_series(m);
  Series acc = Series::constant(f[std::min(f.order(), m)], m);
  for (long k = std::min(f.order(), m) - 1; k >= 0; --k) {
    acc = mul(acc, gs);
    acc.at(0) += f[k];
  }
  return acc;
}

inline LaurentSeries compose(const LaurentSeries& f, const LaurentSeries& g) {
  if (g.is_zero() || g.val() < 1)
    throw std::invalid_argument("composition needs inner valuation >= 1");
  if (f.is_zero())
    return LaurentSeries::zero_known_to(detail::cap_top((f.top() + 1) * g.val() - 1));
  LaurentSeries head = pow_int(g, f.val());
  return mul(head, LaurentSeries::from_series(compose(f.unit(), g)));
}

// Compositional inverse of a tangent-to-identity map f = x(1 + ...), by
// Lagrange inversion: [x^n] f^{-1} = (1/n) [x^{n-1}] (x/f)^n.
inline LaurentSeries comp_inverse(const LaurentSeries& f) {
  if (f.is_zero() || f.val() != 1 || !f.unit()[0].is_one())
    throw std::invalid_argument("compositional inverse needs f = x(1 + O(x))");
  long r_ord = f.unit().order();
  Series r = reciprocal_unit(f.unit());
  Series g(r_ord);
  g.at(0) = GaussianRational(1);
  Series p = r;
  for (long n = 1; n <= r_ord + 1; ++n) {
    if (n >= 2) p = mul(p, r);
    if (n - 1 <= r_ord && !p[n - 1].is_zero()) g.at(n - 1) = p[n - 1] * mpq_class(1, n);
  }
  return LaurentSeries(1, std::move(g));
}

}  // namespace henkato
