#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace henkato {

// Exact element of Q(i). Both parts are GMP rationals, which GMP keeps in
// lowest terms with positive denominator, so operator== is structural
// equality of canonical forms.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  explicit GaussianRational(mpq_class re) : GaussianRational(std::move(re), mpq_class(0)) {}

  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  // num/den pairs; throws on zero denominators.
  static GaussianRational from_fraction(long re_num, long re_den, long im_num = 0, long im_den = 1) {
    if (re_den == 0 || im_den == 0) throw std::invalid_argument("zero denominator");
    return GaussianRational(mpq_class(re_num, re_den), mpq_class(im_num, im_den));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conjugate() const { return GaussianRational(re_, -im_); }

  // |z|^2, always a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (im_ == 0 && o.im_ == 0) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  GaussianRational inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero in Q(i)");
    mpq_class n = norm();
    return GaussianRational(re_ / n, -im_ / n);
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) {
    return GaussianRational(-a.re_, -a.im_);
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational& operator*=(const mpq_class& q) {
    re_ *= q;
    im_ *= q;
    return *this;
  }
  friend GaussianRational operator*(GaussianRational a, const mpq_class& q) { return a *= q; }

  // acc += a * b without temporaries; the workhorse of series convolutions.
  static void add_mul(GaussianRational& acc, const GaussianRational& a, const GaussianRational& b) {
    if (a.im_ == 0) {
      if (a.re_ == 0) return;
      acc.re_ += a.re_ * b.re_;
      if (b.im_ != 0) acc.im_ += a.re_ * b.im_;
      return;
    }
    if (b.im_ == 0) {
      acc.re_ += a.re_ * b.re_;
      acc.im_ += a.im_ * b.re_;
      return;
    }
    acc.re_ += a.re_ * b.re_ - a.im_ * b.im_;
    acc.im_ += a.re_ * b.im_ + a.im_ * b.re_;
  }

  static GaussianRational pow(const GaussianRational& base, long e) {
    if (e < 0) return pow(base.inverse(), -e);
    GaussianRational acc(1);
    GaussianRational b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n != 0) {
      if (n & 1) acc *= b;
      b *= b;
      n >>= 1;
    }
    return acc;
  }

  // i^k for any integer k.
  static GaussianRational i_power(long k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return GaussianRational(1);
      case 1: return i();
      case 2: return GaussianRational(-1);
      default: return -i();
    }
  }

  // k with *this == i^k, when *this is one of the four roots of unity in Q(i).
  std::optional<int> unit_exponent() const {
    if (im_ == 0) {
      if (re_ == 1) return 0;
      if (re_ == -1) return 2;
      return std::nullopt;
    }
    if (re_ == 0) {
      if (im_ == 1) return 1;
      if (im_ == -1) return 3;
    }
    return std::nullopt;
  }

  // Canonical text form. Pure real prints as "p/q"; pure imaginary as
  // "pi/q"; mixed values put the Gaussian-integer numerator over a common
  // denominator, factoring a sign so the real part inside parens is
  // positive: "(3+2i)/5", "-(1+i)/3".
  std::string str() const {
    if (im_ == 0) return re_.get_str();
    if (re_ == 0) {
      const mpz_class& num = im_.get_num();
      const mpz_class& den = im_.get_den();
      std::string s;
      if (num == 1) {
        s = "i";
      } else if (num == -1) {
        s = "-i";
      } else {
        s = num.get_str() + "i";
      }
      if (den != 1) s += "/" + den.get_str();
      return s;
    }
    mpz_class q = lcm(re_.get_den(), im_.get_den());
    mpz_class a = re_.get_num() * (q / re_.get_den());
    mpz_class b = im_.get_num() * (q / im_.get_den());
    bool neg = a < 0;
    if (neg) {
      a = -a;
      b = -b;
    }
    std::string s = neg ? "-(" : "(";
    s += a.get_str();
    s += (b > 0 ? "+" : "-");
    mpz_class babs = abs(b);
    if (babs != 1) s += babs.get_str();
    s += "i)";
    if (q != 1) s += "/" + q.get_str();
    return s;
  }

  static std::optional<GaussianRational> parse(std::string_view sv);

  static GaussianRational from_string(std::string_view sv) {
    auto v = parse(sv);
    if (!v) throw std::invalid_argument("cannot parse Gaussian rational: '" + std::string(sv) + "'");
    return *v;
  }

private:
  mpq_class re_, im_;
};

namespace detail {

inline bool parse_decimal_uint(std::string_view sv, mpz_class& out) {
  if (sv.empty()) return false;
  for (char c : sv)
    if (c < '0' || c > '9') return false;
  out = mpz_class(std::string(sv), 10);
  return true;
}

inline bool parse_decimal_int(std::string_view sv, mpz_class& out) {
  if (sv.empty()) return false;
  bool neg = sv[0] == '-';
  if (sv[0] == '+' || sv[0] == '-') sv.remove_prefix(1);
  if (!parse_decimal_uint(sv, out)) return false;
  if (neg) out = -out;
  return true;
}

inline bool parse_plain_rational(std::string_view sv, mpq_class& out) {
  auto slash = sv.find('/');
  mpz_class num, den(1);
  if (slash == std::string_view::npos) {
    if (!parse_decimal_int(sv, num)) return false;
  } else {
    if (!parse_decimal_int(sv.substr(0, slash), num)) return false;
    if (!parse_decimal_uint(sv.substr(slash + 1), den)) return false;
    if (den == 0) return false;
  }
  out = mpq_class(num, den);
  out.canonicalize();
  return true;
}

}  // namespace detail

inline std::optional<GaussianRational> GaussianRational::parse(std::string_view sv) {
  using detail::parse_decimal_uint;
  using detail::parse_plain_rational;

  while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
  while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t')) sv.remove_suffix(1);
  if (sv.empty()) return std::nullopt;

  if (sv.find('i') == std::string_view::npos) {
    mpq_class q;
    if (!parse_plain_rational(sv, q)) return std::nullopt;
    return GaussianRational(std::move(q), mpq_class(0));
  }

  bool neg = false;
  if (sv.front() == '+' || sv.front() == '-') {
    neg = sv.front() == '-';
    sv.remove_prefix(1);
    if (sv.empty()) return std::nullopt;
  }

  mpz_class den(1);
  if (sv.front() == '(') {
    auto close = sv.find(')');
    if (close == std::string_view::npos) return std::nullopt;
    std::string_view inner = sv.substr(1, close - 1);
    std::string_view rest = sv.substr(close + 1);
    if (!rest.empty()) {
      if (rest.front() != '/') return std::nullopt;
      if (!parse_decimal_uint(rest.substr(1), den) || den == 0) return std::nullopt;
    }
    // inner is INT SIGN [UINT] 'i'
    if (inner.empty() || inner.back() != 'i') return std::nullopt;
    inner.remove_suffix(1);
    std::size_t split = inner.find_last_of("+-");
    if (split == std::string_view::npos || split == 0) return std::nullopt;
    mpz_class a, b;
    if (!detail::parse_decimal_int(inner.substr(0, split), a)) return std::nullopt;
    std::string_view bpart = inner.substr(split + 1);
    if (bpart.empty()) {
      b = 1;
    } else if (!parse_decimal_uint(bpart, b)) {
      return std::nullopt;
    }
    if (inner[split] == '-') b = -b;
    mpq_class re(a, den), im(b, den);
    re.canonicalize();
    im.canonicalize();
    if (neg) {
      re = -re;
      im = -im;
    }
    return GaussianRational(std::move(re), std::move(im));
  }

  // pure imaginary: [UINT] 'i' ['/' UINT]
  auto ipos = sv.find('i');
  if (ipos == std::string_view::npos) return std::nullopt;
  mpz_class b(1);
  if (ipos > 0 && !parse_decimal_uint(sv.substr(0, ipos), b)) return std::nullopt;
  std::string_view rest = sv.substr(ipos + 1);
  if (!rest.empty()) {
    if (rest.front() != '/') return std::nullopt;
    if (!parse_decimal_uint(rest.substr(1), den) || den == 0) return std::nullopt;
  }
  mpq_class im(b, den);
  im.canonicalize();
  if (neg) im = -im;
  return GaussianRational(mpq_class(0), std::move(im));
}

}  // namespace henkato
