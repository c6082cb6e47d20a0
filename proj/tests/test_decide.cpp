#include "henkato/decide.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "henkato/sampling.hpp"

using namespace henkato;

namespace {

GaussianRational gq(const std::string& s) { return GaussianRational::from_string(s); }

HenonMap cubic(const std::string& c, const std::string& a) {
  return HenonMap({HenonFactor::monic_centered(3, {gq("0"), gq(c)}, gq(a))});
}

HenonMap quadratic(const std::string& c, const std::string& a) {
  return HenonMap({HenonFactor::monic_centered(2, {gq(c)}, gq(a))});
}

}  // namespace

TEST(RatioToResidue, FourUnits) {
  EXPECT_EQ(ratio_to_residue(gq("1"), 5), 0);
  EXPECT_EQ(ratio_to_residue(gq("-1"), 2), 1);
  EXPECT_EQ(ratio_to_residue(gq("-1"), 3), std::nullopt);
  EXPECT_EQ(ratio_to_residue(gq("i"), 4), 1);
  EXPECT_EQ(ratio_to_residue(gq("-i"), 8), 6);
  EXPECT_EQ(ratio_to_residue(gq("i"), 6), std::nullopt);
  EXPECT_EQ(ratio_to_residue(gq("2"), 4), std::nullopt);
  EXPECT_EQ(ratio_to_residue(gq("(3+4i)/5"), 20), std::nullopt);  // modulus 1 but not a root of unity
}

TEST(SolveCongruences, SingleConstraint) {
  CongruenceSystem sys{2, {}};
  sys.add(3, 1);
  auto sol = solve_congruences(sys);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->r, 1);
  EXPECT_EQ(sol->mod, 2);
}

TEST(SolveCongruences, TrivialModulus) {
  CongruenceSystem sys{1, {}};
  sys.add(7, 0);
  auto sol = solve_congruences(sys);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->r, 0);
  EXPECT_EQ(sol->mod, 1);
}

TEST(SolveCongruences, UnsolvableByGcd) {
  CongruenceSystem sys{6, {}};
  sys.add(2, 1);
  EXPECT_FALSE(solve_congruences(sys));
}

TEST(SolveCongruences, IntersectionOfProgressions) {
  CongruenceSystem sys{12, {}};
  sys.add(2, 2);  // e = 1 (mod 6)
  sys.add(3, 3);  // e = 1 (mod 4)
  auto sol = solve_congruences(sys);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->r, 1);
  EXPECT_EQ(sol->mod, 12);
}

TEST(SolveCongruences, ConflictingProgressions) {
  CongruenceSystem sys{12, {}};
  sys.add(4, 4);  // e = 1 (mod 3)
  sys.add(6, 0);  // e = 0 (mod 2)
  auto sol = solve_congruences(sys);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->r, 4);
  EXPECT_EQ(sol->mod, 6);
  sys.add(6, 3);  // 6e = 3 (mod 12) has no solution at all
  EXPECT_FALSE(solve_congruences(sys));
}

TEST(ZetaFromExponent, RepresentableCases) {
  EXPECT_EQ(*zeta_from_exponent(0, 5), gq("1"));
  EXPECT_EQ(*zeta_from_exponent(1, 2), gq("-1"));
  EXPECT_EQ(*zeta_from_exponent(2, 8), gq("i"));
  EXPECT_EQ(*zeta_from_exponent(6, 8), gq("-i"));
  EXPECT_FALSE(zeta_from_exponent(1, 5));
}

TEST(ConjugateNearInfinity, QuadraticIsStructuralEquality) {
  HenonMap f = quadratic("(1+i)/2", "3");
  auto w = conjugate_near_infinity(f, f);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->e, 0);
  EXPECT_EQ(w->modulus, 1);
  EXPECT_FALSE(conjugate_near_infinity(f, quadratic("(1+i)/2", "4")));
  EXPECT_FALSE(conjugate_near_infinity(f, quadratic("1/2", "3")));
}

TEST(ConjugateNearInfinity, CubicSignPair) {
  auto w = conjugate_near_infinity(cubic("2/3", "5"), cubic("-2/3", "5"));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->modulus, 2);
  EXPECT_EQ(w->e, 1);  // zeta = -1
  EXPECT_EQ(*zeta_from_exponent(w->e, w->modulus), gq("-1"));
  EXPECT_EQ(theta_conjugate(cubic("2/3", "5"), gq("-1")), cubic("-2/3", "5"));
}

TEST(ConjugateNearInfinity, CubicJacobianSignIsObstructed) {
  EXPECT_FALSE(conjugate_near_infinity(cubic("2/3", "5"), cubic("2/3", "-5")));
}

TEST(ConjugateNearInfinity, DegreeMismatchFailsFast) {
  EXPECT_FALSE(conjugate_near_infinity(quadratic("1", "1"), cubic("1", "1")));
}

TEST(ConjugateViaNormalForms, SelfIsZeroExponent) {
  HenonMap f = cubic("1/2", "-3");
  auto w = conjugate_via_normal_forms(f, f);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->e, 0);
}

TEST(ConjugateViaNormalForms, QuadraticDistinctConstants) {
  EXPECT_FALSE(conjugate_via_normal_forms(quadratic("1", "3"), quadratic("-1", "3")));
  ASSERT_TRUE(conjugate_via_normal_forms(quadratic("0", "3"), quadratic("0", "3")));
}

TEST(ConjugateViaNormalForms, CubicPairAgreesWithFactorPath) {
  HenonMap f = cubic("2/3", "5");
  HenonMap g = cubic("-2/3", "5");
  auto w1 = conjugate_near_infinity(f, g);
  auto w2 = conjugate_via_normal_forms(f, g);
  ASSERT_TRUE(w1);
  ASSERT_TRUE(w2);
  EXPECT_EQ(w1->e, w2->e);
  EXPECT_EQ(w1->modulus, w2->modulus);
}

TEST(ConjugateViaNormalForms, DistinctJacobianProductsDiffer) {
  HenonMap f({HenonFactor::monic_centered(2, {gq("1")}, gq("1")),
              HenonFactor::monic_centered(2, {gq("1")}, gq("1"))});
  HenonMap g({HenonFactor::monic_centered(2, {gq("1")}, gq("2")),
              HenonFactor::monic_centered(2, {gq("1")}, gq("1"))});
  EXPECT_FALSE(conjugate_via_normal_forms(f, g));
  EXPECT_FALSE(conjugate_near_infinity(f, g));
}

TEST(PathAgreement, RandomizedPairs) {
  Sampler s(51);
  for (int rep = 0; rep < 30; ++rep) {
    HenonMap f = s.map(2, 3);
    HenonMap g = f;
    switch (rep % 4) {
      case 0: break;
      case 1: {
        long M = degrees(f).total() - 1;
        GaussianRational zeta = M % 2 == 0 ? gq("-1") : gq("1");
        if (M % 4 == 0) zeta = gq("i");
        g = theta_conjugate(f, zeta);
        break;
      }
      case 2: {
        auto fs = f.factors();
        fs[0].p_coeffs[0] += gq("1");
        g = HenonMap(fs);
        break;
      }
      default: {
        auto fs = f.factors();
        fs.back().a *= gq("2");
        g = HenonMap(fs);
        break;
      }
    }
    auto w1 = conjugate_near_infinity(f, g);
    auto w2 = conjugate_via_normal_forms(f, g);
    EXPECT_EQ(w1.has_value(), w2.has_value());
    if (rep % 4 == 0 || rep % 4 == 1) EXPECT_TRUE(w1.has_value());
    if (rep % 4 == 3) EXPECT_FALSE(w1.has_value());
  }
}

TEST(ThetaSoundness, WitnessMapsBackToConjugator) {
  Sampler s(52);
  int exercised = 0;
  for (int rep = 0; rep < 30 && exercised < 8; ++rep) {
    HenonMap f = s.map(3, 3);
    long M = degrees(f).total() - 1;
    for (const char* zs : {"-1", "i", "-i"}) {
      GaussianRational zeta = gq(zs);
      if (GaussianRational::pow(zeta, M) != gq("1")) continue;
      HenonMap g = theta_conjugate(f, zeta);
      auto w = conjugate_near_infinity(f, g);
      ASSERT_TRUE(w);
      // some zeta' = omega^e with e in the solution class must reproduce g
      bool found = false;
      for (long e = w->all.r; e < M && !found; e += w->all.mod) {
        auto z = zeta_from_exponent(e, M);
        if (z && theta_conjugate(f, *z) == g) found = true;
      }
      EXPECT_TRUE(found);
      ++exercised;
    }
  }
  EXPECT_GT(exercised, 0);
}

TEST(KatoBiholomorphic, RotationsAreBiholomorphic) {
  Sampler s(53);
  for (int rep = 0; rep < 8; ++rep) {
    HenonMap f = s.map(3, 3);
    for (long k = 1; k <= f.size(); ++k) {
      auto w = kato_biholomorphic(f, rotate(f, k));
      ASSERT_TRUE(w);
      EXPECT_TRUE(conjugate_near_infinity(rotate(f, w->k), rotate(f, k)).has_value());
    }
  }
}

TEST(KatoBiholomorphic, DifferentDegreeProfiles) {
  EXPECT_FALSE(kato_biholomorphic(quadratic("0", "1"), cubic("0", "1")));
}

TEST(KatoBiholomorphic, CubicSignPairThroughFullRotation) {
  auto w = kato_biholomorphic(cubic("2/3", "5"), cubic("-2/3", "5"));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->k, 1);  // N = 1, full rotation
  EXPECT_EQ(w->e, 1);
}

TEST(KatoBiholomorphic, VerdictIsSymmetric) {
  Sampler s(54);
  for (int rep = 0; rep < 10; ++rep) {
    HenonMap f = s.map(2, 3);
    HenonMap g = rep % 2 == 0 ? rotate(f, 1 + rep % f.size()) : s.map(2, 3);
    EXPECT_EQ(kato_biholomorphic(f, g).has_value(), kato_biholomorphic(g, f).has_value());
  }
}
