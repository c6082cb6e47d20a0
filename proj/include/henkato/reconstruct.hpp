#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "henkato/errors.hpp"
#include "henkato/germ.hpp"
#include "henkato/henon.hpp"
#include "henkato/kato.hpp"
#include "henkato/series.hpp"

namespace henkato {

// Exponent where the coefficient indexed (i, l) of a degree-(d_1..d_N)
// target lands inside h-hat: n(i,l) = 2 D_N - D_i - D_{i-1} + l D_{i-1}.
inline long slot_exponent(const std::vector<long>& D, long i, long l) {
  long N = static_cast<long>(D.size()) - 1;
  return 2 * D[static_cast<std::size_t>(N)] - D[static_cast<std::size_t>(i)] -
         D[static_cast<std::size_t>(i - 1)] + l * D[static_cast<std::size_t>(i - 1)];
}

// A prescribed h-hat below x^{2 D_N}: lambda plus one coefficient per lattice
// slot (i, l) with i in 1..N and l in {0} u [2, d_i]. alpha(N,0) is pinned
// to 1 and every alpha(i,0) must be nonzero.
class TargetParameters {
public:
  TargetParameters(GaussianRational lambda, std::vector<long> degrees,
                   std::map<std::pair<long, long>, GaussianRational> alpha_tilde)
      : lambda_(std::move(lambda)), d_(std::move(degrees)), alpha_(std::move(alpha_tilde)) {
    if (lambda_.is_zero()) throw ValidationError("lambda must be nonzero");
    check_degrees(d_);
    long N = static_cast<long>(d_.size());
    D_.assign(static_cast<std::size_t>(N) + 1, 1);
    for (long i = 1; i <= N; ++i) {
      if (__builtin_mul_overflow(D_[static_cast<std::size_t>(i - 1)],
                                 d_[static_cast<std::size_t>(i - 1)],
                                 &D_[static_cast<std::size_t>(i)]))
        throw ValidationError("degree product overflows");
    }
    for (const auto& [key, value] : alpha_) {
      auto [i, l] = key;
      if (i < 1 || i > N || l < 0 || l == 1 || l > d_[static_cast<std::size_t>(i - 1)])
        throw ValidationError("alpha index (" + std::to_string(i) + "," + std::to_string(l) +
                              ") outside the slot lattice");
      (void)value;
    }
    for (long i = 1; i <= N; ++i) {
      auto it = alpha_.find({i, 0});
      if (it == alpha_.end() || it->second.is_zero())
        throw ValidationError("alpha(" + std::to_string(i) + ",0) must be present and nonzero");
    }
    if (alpha_.at({N, 0}) != GaussianRational(1))
      throw ValidationError("alpha(N,0) must equal 1");
    for (long i = 1; i <= N; ++i)
      for (long l = 0; l <= d_[static_cast<std::size_t>(i - 1)]; ++l) {
        if (l == 1) continue;
        if (!alpha_.count({i, l})) alpha_[{i, l}] = GaussianRational();
      }
    std::set<long> exps;
    for (const auto& [key, value] : alpha_) {
      (void)value;
      if (!exps.insert(slot_exponent(D_, key.first, key.second)).second)
        throw InternalError("slot exponent map is not injective");
    }
  }

  const GaussianRational& lambda() const { return lambda_; }
  const std::vector<long>& degrees() const { return d_; }
  const std::vector<long>& D() const { return D_; }
  long N() const { return static_cast<long>(d_.size()); }
  const std::map<std::pair<long, long>, GaussianRational>& alpha() const { return alpha_; }
  const GaussianRational& alpha_at(long i, long l) const { return alpha_.at({i, l}); }

private:
  GaussianRational lambda_;
  std::vector<long> d_;
  std::vector<long> D_;
  std::map<std::pair<long, long>, GaussianRational> alpha_;
};

// Unpack g back into h-hat: b_n = g_n for n <= 2p-2 except b_p = 0, and
// b_{2p-1} = lambda * g_p.
inline Series hhat_from_normal_form(const NormalForm& nf) {
  if (nf.p < 2) throw ValidationError("normal form needs p >= 2");
  if (static_cast<long>(nf.g.size()) != 2 * nf.p - 1)
    throw ValidationError("normal form g has wrong length");
  if (nf.lambda.is_zero()) throw ValidationError("normal form lambda must be nonzero");
  long j = 0;
  for (long n = 1; n <= 2 * nf.p - 2 && j == 0; ++n)
    if (!nf.g_at(n).is_zero()) j = n;
  if (j == 0 || !nf.g_at(j).is_one())
    throw NotHenonNormalForm("not a Henon-type normal form: lowest coefficient of g is not 1");
  Series h(2 * nf.p - 1);
  for (long n = 1; n <= 2 * nf.p - 2; ++n)
    if (n != nf.p) h.at(n) = nf.g_at(n);
  h.at(2 * nf.p - 1) = nf.lambda * nf.g_at(nf.p);
  return h;
}

// Recover (d_1..d_N) from the gcd descent over g's support: each type entry
// m gives the next partial product through D_lo = 2p - m - D_hi.
inline std::vector<long> degrees_from_normal_form(const NormalForm& nf) {
  if (nf.p < 2) throw ValidationError("normal form needs p >= 2");
  auto support = nf.support();
  if (support.empty()) throw NotHenonNormalForm("normal form not of Henon type: g = 0");
  std::vector<long> type;
  try {
    type = type_from_support(nf.p, support);
  } catch (const TypeUndefined& e) {
    throw NotHenonNormalForm(std::string("normal form not of Henon type: ") + e.what());
  }
  std::vector<long> ds;
  long hi = nf.p;
  for (long m : type) {
    long lo = 2 * nf.p - m - hi;
    if (lo < 1 || hi % lo != 0 || hi / lo < 2)
      throw NotHenonNormalForm("normal form not of Henon type: degree chain fails at m = " +
                               std::to_string(m));
    ds.push_back(hi / lo);
    hi = lo;
  }
  if (hi != 1)
    throw NotHenonNormalForm("normal form not of Henon type: degree chain does not reach 1");
  return std::vector<long>(ds.rbegin(), ds.rend());
}

// Peel the factors off h-hat, outermost first. Stage i knows psi_i^{-1} to
// relative order D_i + D_{i-1}; reading W = x^{D_i} psi_i^{-D_i} at the
// multiples of D_{i-1} yields U_i, the leftover term yields a_i and
// psi_{i-1}^{-1}. The result is checked by running the forward pipeline.
inline HenonMap henon_from_normal_form(const NormalForm& nf) {
  Series h = hhat_from_normal_form(nf);
  std::vector<long> d = degrees_from_normal_form(nf);
  long N = static_cast<long>(d.size());
  std::vector<long> D(static_cast<std::size_t>(N) + 1, 1);
  for (long i = 1; i <= N; ++i)
    D[static_cast<std::size_t>(i)] =
        D[static_cast<std::size_t>(i - 1)] * d[static_cast<std::size_t>(i - 1)];
  const long p = nf.p;
  if (D[static_cast<std::size_t>(N)] != p)
    throw InconsistentNormalForm("degree chain does not multiply to p", N);
  const GaussianRational A = nf.lambda * mpq_class(p);

  // psi_N^{-1} from h-hat.
  long DN1 = D[static_cast<std::size_t>(N - 1)];
  for (long n = 1; n < p - DN1; ++n)
    if (!h[n].is_zero())
      throw InconsistentNormalForm("support below the expected valuation", N);
  Series s0(p + DN1 - 1);
  for (long k = 0; k <= s0.order(); ++k) s0.at(k) = h[k + p - DN1];
  LaurentSeries psi_inv(1, pow_rational(s0, mpq_class(-1, DN1)));

  std::vector<GaussianRational> a(static_cast<std::size_t>(N) + 1);
  std::vector<HenonFactor> factors(static_cast<std::size_t>(N));

  for (long i = N; i >= 2; --i) {
    long Di = D[static_cast<std::size_t>(i)];
    long Dprev = D[static_cast<std::size_t>(i - 1)];
    long Dprev2 = D[static_cast<std::size_t>(i - 2)];
    long di = d[static_cast<std::size_t>(i - 1)];

    LaurentSeries psi = comp_inverse(psi_inv);
    Series w = pow_rational(psi.unit(), mpq_class(-Di));  // order D_i + D_{i-1} - 1

    std::vector<GaussianRational> beta(static_cast<std::size_t>(di) + 1);
    for (long l = 0; l <= di; ++l) beta[static_cast<std::size_t>(l)] = w[l * Dprev];
    if (!beta[0].is_one()) throw InconsistentNormalForm("constant term of U is not 1", i);
    if (!beta[1].is_zero()) throw InconsistentNormalForm("recovered polynomial is not centered", i);

    Series rem(w.order());
    for (long k = 0; k <= w.order(); ++k) rem.at(k) = -w[k];
    for (long l = 0; l <= di; ++l) rem.at(l * Dprev) += beta[static_cast<std::size_t>(l)];

    long lead = Di - Dprev2;
    if (lead % Dprev == 0) throw InternalError("peeling exponent collides with the U lattice");
    for (long k = 0; k < lead; ++k)
      if (!rem[k].is_zero())
        throw InconsistentNormalForm("leftover term below a_i's exponent", i);
    GaussianRational ai = rem[lead];
    if (ai.is_zero()) throw InconsistentNormalForm("a_i = 0", i);
    a[static_cast<std::size_t>(i)] = ai;

    std::vector<GaussianRational> low(static_cast<std::size_t>(di - 1));
    for (long l = 2; l <= di; ++l) low[static_cast<std::size_t>(l - 2)] = beta[static_cast<std::size_t>(l)];
    factors[static_cast<std::size_t>(i - 1)] =
        HenonFactor::monic_centered(di, std::move(low), ai);

    GaussianRational ai_inv = ai.inverse();
    Series next(w.order() - lead);  // order D_{i-1} + D_{i-2} - 1
    for (long k = 0; k <= next.order(); ++k) next.at(k) = rem[k + lead] * ai_inv;
    psi_inv = LaurentSeries(1, pow_rational(next, mpq_class(-1, Dprev2)));
  }

  // Innermost factor: U_1 = (x / psi_1)^{d_1}.
  {
    long d1 = d[0];
    LaurentSeries psi1 = comp_inverse(psi_inv);
    Series u1 = pow_rational(psi1.unit(), mpq_class(-d1));  // order d_1
    if (!u1[0].is_one()) throw InconsistentNormalForm("constant term of U_1 is not 1", 1);
    if (!u1[1].is_zero()) throw InconsistentNormalForm("recovered P_1 is not centered", 1);
    std::vector<GaussianRational> low(static_cast<std::size_t>(d1 - 1));
    for (long l = 2; l <= d1; ++l) low[static_cast<std::size_t>(l - 2)] = u1[l];
    GaussianRational prod(1);
    for (long i = 2; i <= N; ++i) prod *= a[static_cast<std::size_t>(i)];
    GaussianRational a1 = A / prod;
    factors[0] = HenonFactor::monic_centered(d1, std::move(low), a1);
  }

  HenonMap result{std::move(factors)};
  require_valid(result);
  NormalForm check = normal_form(result);
  if (check != nf) throw InconsistentNormalForm("forward check does not reproduce the input", 0);
  return result;
}

namespace detail {

struct SolveState {
  const TargetParameters* target;
  std::map<std::pair<long, long>, GaussianRational> beta;

  HenonMap build() const {
    const auto& d = target->degrees();
    long N = target->N();
    std::vector<HenonFactor> fs;
    GaussianRational prod(1);
    for (long i = 2; i <= N; ++i) prod *= beta.at({i - 1, 0});
    GaussianRational a1 =
        target->lambda() * mpq_class(target->D().back()) / prod;
    for (long i = 1; i <= N; ++i) {
      long di = d[static_cast<std::size_t>(i - 1)];
      std::vector<GaussianRational> low(static_cast<std::size_t>(di - 1));
      for (long l = 2; l <= di; ++l) low[static_cast<std::size_t>(l - 2)] = beta.at({i, l});
      GaussianRational ai = i == 1 ? a1 : beta.at({i - 1, 0});
      fs.push_back(HenonFactor::monic_centered(di, std::move(low), ai));
    }
    return HenonMap(std::move(fs));
  }

  Series forward() const { return h_hat(build(), 2 * target->D().back()); }
};

}  // namespace detail

// Find the map whose h-hat carries exactly the prescribed slot coefficients.
// Each unknown affects its own slot affinely once all earlier unknowns (in
// the order i = N..1, within i first l = 0 then l = 2..d_i) are fixed, so two
// forward evaluations pin slope and intercept and the unknown solves exactly.
inline HenonMap solve_surjectivity(const TargetParameters& t) {
  long N = t.N();
  const auto& d = t.degrees();
  detail::SolveState state{&t, {}};
  std::vector<std::pair<long, long>> unknowns;
  for (long i = N; i >= 1; --i) {
    if (i != N) unknowns.push_back({i, 0});
    for (long l = 2; l <= d[static_cast<std::size_t>(i - 1)]; ++l) unknowns.push_back({i, l});
  }
  // Placeholders keep the pipeline defined: 1 on Jacobian slots, 0 elsewhere.
  for (auto [i, l] : unknowns) state.beta[{i, l}] = GaussianRational(l == 0 ? 1 : 0);

  Series h_cur = state.forward();
  for (auto [i, l] : unknowns) {
    long n = slot_exponent(t.D(), i, l);
    GaussianRational v1 = state.beta.at({i, l});
    GaussianRational v2(l == 0 ? 2 : 1);
    GaussianRational c1 = h_cur[n];
    state.beta[{i, l}] = v2;
    GaussianRational c2 = state.forward()[n];
    GaussianRational slope = (c2 - c1) / (v2 - v1);
    if (slope.is_zero())
      throw InternalError("slot (" + std::to_string(i) + "," + std::to_string(l) +
                          ") does not respond to its coefficient");
    GaussianRational solved = (t.alpha_at(i, l) - c1) / slope + v1;
    if (l == 0 && solved.is_zero())
      throw TargetNotRealizable("target not realizable: a_" + std::to_string(i + 1) +
                                " would vanish");
    state.beta[{i, l}] = solved;
    h_cur = state.forward();
  }

  for (const auto& [key, value] : t.alpha()) {
    if (h_cur[slot_exponent(t.D(), key.first, key.second)] != value)
      throw InternalError("surjectivity solve failed to reproduce slot (" +
                          std::to_string(key.first) + "," + std::to_string(key.second) + ")");
  }
  return state.build();
}

// Reindex the blow-up-side coefficients alpha (indexed (i, l), i = 1..N,
// l = 0..d_{N-i+1}-1, alpha(1,0) = 1) into slot coefficients:
//   slot(i, l)   = alpha(N-i+1, l)      for l != 1, d_i,
//   slot(i, d_i) = alpha(N-i+2, 1)      for i != 1,
//   slot(1, d_1) = lambda * alpha(1, 1).
inline TargetParameters convert_parametrization(
    const GaussianRational& lambda, const std::vector<long>& degrees,
    const std::map<std::pair<long, long>, GaussianRational>& alpha) {
  check_degrees(degrees);
  if (lambda.is_zero()) throw ValidationError("lambda must be nonzero");
  long N = static_cast<long>(degrees.size());
  auto deg_of_block = [&](long i) { return degrees[static_cast<std::size_t>(N - i)]; };
  for (const auto& [key, value] : alpha) {
    auto [i, l] = key;
    (void)value;
    if (i < 1 || i > N || l < 0 || l >= deg_of_block(i))
      throw ValidationError("alpha index (" + std::to_string(i) + "," + std::to_string(l) +
                            ") out of range");
  }
  auto alpha_at = [&](long i, long l) {
    auto it = alpha.find({i, l});
    return it == alpha.end() ? GaussianRational() : it->second;
  };
  for (long i = 1; i <= N; ++i)
    if (alpha_at(i, 0).is_zero())
      throw ValidationError("alpha(" + std::to_string(i) + ",0) must be nonzero");
  if (!alpha_at(1, 0).is_one()) throw ValidationError("alpha(1,0) must equal 1");

  std::map<std::pair<long, long>, GaussianRational> tilde;
  for (long i = 1; i <= N; ++i) {
    long di = degrees[static_cast<std::size_t>(i - 1)];
    for (long l = 0; l <= di; ++l) {
      if (l == 1) continue;
      if (l == di)
        tilde[{i, l}] = i == 1 ? lambda * alpha_at(1, 1) : alpha_at(N - i + 2, 1);
      else
        tilde[{i, l}] = alpha_at(N - i + 1, l);
    }
  }
  return TargetParameters(lambda, degrees, std::move(tilde));
}

}  // namespace henkato
