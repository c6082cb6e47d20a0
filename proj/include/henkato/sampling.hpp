#pragma once

#include <random>
#include <utility>
#include <vector>

#include "henkato/gaussian_rational.hpp"
#include "henkato/henon.hpp"
#include "henkato/series.hpp"

namespace henkato {

// Deterministic generator of small exact values and maps.
class Sampler {
public:
  explicit Sampler(unsigned long seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }

  // Numerators in [-max_num, max_num], denominators in [1, max_den].
  mpq_class rational(long max_num = 10, long max_den = 10) {
    mpq_class q(uniform(-max_num, max_num), uniform(1, max_den));
    q.canonicalize();
    return q;
  }

  GaussianRational gaussian(long max_num = 10, long max_den = 10) {
    return GaussianRational(rational(max_num, max_den), rational(max_num, max_den));
  }

  GaussianRational nonzero_gaussian(long max_num = 10, long max_den = 10) {
    while (true) {
      GaussianRational g = gaussian(max_num, max_den);
      if (!g.is_zero()) return g;
    }
  }

  // A coefficient that is zero roughly a third of the time, so random
  // polynomials exercise sparse supports.
  GaussianRational sparse_gaussian(long max_num = 10, long max_den = 10) {
    if (chance(1.0 / 3)) return GaussianRational();
    return gaussian(max_num, max_den);
  }

  HenonFactor factor(long d) {
    std::vector<GaussianRational> low;
    for (long l = 2; l <= d; ++l) low.push_back(sparse_gaussian());
    return HenonFactor::monic_centered(d, std::move(low), nonzero_gaussian());
  }

  HenonMap map(long max_n = 3, long max_d = 4) {
    long n = uniform(1, max_n);
    std::vector<HenonFactor> fs;
    for (long i = 0; i < n; ++i) fs.push_back(factor(uniform(2, max_d)));
    return HenonMap(std::move(fs));
  }

  // Unit power series 1 + ... with sparse coefficients.
  Series unit_series(long order, long max_num = 6, long max_den = 6) {
    Series s = Series::one(order);
    for (long k = 1; k <= order; ++k) {
      if (chance(0.5)) continue;
      GaussianRational g = gaussian(max_num, max_den);
      if (!g.is_zero()) s.at(k) = g;
    }
    return s;
  }

  std::mt19937_64& rng() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace henkato
