#include "henkato/henon.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "henkato/sampling.hpp"

using namespace henkato;

namespace {

GaussianRational gq(const std::string& s) { return GaussianRational::from_string(s); }

HenonFactor factor(long d, const std::vector<std::string>& low, const std::string& a) {
  std::vector<GaussianRational> lows;
  for (const auto& s : low) lows.push_back(gq(s));
  return HenonFactor::monic_centered(d, lows, gq(a));
}

}  // namespace

TEST(Validate, AcceptsPureSquare) {
  HenonMap m({factor(2, {"0"}, "1")});
  EXPECT_TRUE(validate(m).empty());
}

TEST(Validate, RejectsUncentered) {
  HenonFactor f;
  f.d = 2;
  f.p_coeffs = {gq("0"), gq("1"), gq("1")};  // z^2 + z
  f.a = gq("1");
  auto bad = validate(HenonMap({f}));
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0], "not centered, factor 1");
}

TEST(Validate, RejectsZeroJacobianFactor) {
  HenonFactor f;
  f.d = 3;
  f.p_coeffs = {gq("1"), gq("0"), gq("0"), gq("1")};  // z^3 + 1
  f.a = gq("0");
  auto bad = validate(HenonMap({f}));
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0], "a = 0, factor 1");
}

TEST(DegreesOp, PartialProducts) {
  HenonMap m({factor(2, {"1"}, "1"), factor(3, {"0", "1"}, "1")});
  Degrees deg = degrees(m);
  EXPECT_EQ(deg.d, (std::vector<long>{2, 3}));
  EXPECT_EQ(deg.D, (std::vector<long>{1, 2, 6}));
}

TEST(DegreesOp, SingleFactor) {
  Degrees deg = degrees(HenonMap({factor(2, {"0"}, "5")}));
  EXPECT_EQ(deg.D, (std::vector<long>{1, 2}));
}

TEST(DegreesOp, JacobianProduct) {
  HenonMap m({factor(2, {"0"}, "2"), factor(2, {"0"}, "3i")});
  EXPECT_EQ(degrees(m).A, gq("6i"));
}

TEST(QRestriction, FirstIsP1) {
  HenonMap m({factor(2, {"0"}, "1")});
  poly::Poly q = q_restriction(m, 1);
  EXPECT_EQ(q, (poly::Poly{gq("0"), gq("0"), gq("1")}));
}

TEST(QRestriction, TwoSquares) {
  HenonMap m({factor(2, {"0"}, "1"), factor(2, {"0"}, "1")});
  poly::Poly q = q_restriction(m, 2);  // z^4 - z
  poly::Poly expected{gq("0"), gq("-1"), gq("0"), gq("0"), gq("1")};
  EXPECT_EQ(q, expected);
}

TEST(QRestriction, BaseCaseIsZ) {
  HenonMap m({factor(3, {"1", "2"}, "1")});
  EXPECT_EQ(q_restriction(m, 0), (poly::Poly{gq("0"), gq("1")}));
}

TEST(QRestriction, DegreeIsPartialProduct) {
  Sampler s(21);
  for (int rep = 0; rep < 10; ++rep) {
    HenonMap m = s.map(3, 4);
    Degrees deg = degrees(m);
    for (long i = 0; i <= deg.N(); ++i) {
      poly::Poly q = q_restriction(m, i);
      EXPECT_EQ(static_cast<long>(q.size()) - 1, deg.D[static_cast<std::size_t>(i)]);
      EXPECT_TRUE(q.back().is_one());
    }
  }
}

TEST(QRestriction, MatchesPointwiseIteration) {
  Sampler s(22);
  for (int rep = 0; rep < 10; ++rep) {
    HenonMap m = s.map(3, 4);
    poly::Poly qn = q_restriction(m, m.size());
    poly::Poly qn1 = q_restriction(m, m.size() - 1);
    for (int pt = 0; pt < 3; ++pt) {
      GaussianRational z = s.gaussian(5, 3);
      auto [a, b] = eval_map(m, z, GaussianRational(0));
      EXPECT_EQ(a, poly::eval(qn, z));
      EXPECT_EQ(b, poly::eval(qn1, z));
    }
  }
}

TEST(USeries, QuadraticReversal) {
  HenonMap m({factor(2, {"1/3"}, "1")});  // z^2 + 1/3
  Series u = u_series(m, 1, 4);
  Series expected(4);
  expected.at(0) = gq("1");
  expected.at(2) = gq("1/3");
  EXPECT_EQ(u, expected);
}

TEST(USeries, CubicReversal) {
  HenonMap m({factor(3, {"2", "-i"}, "1")});  // z^3 + 2z - i
  Series u = u_series(m, 1, 3);
  Series expected(3);
  expected.at(0) = gq("1");
  expected.at(2) = gq("2");
  expected.at(3) = gq("-i");
  EXPECT_EQ(u, expected);
}

TEST(VSeries, TwoSquaresReversal) {
  HenonMap m({factor(2, {"0"}, "1"), factor(2, {"0"}, "1")});
  Series v = v_series(m, 2, 5);  // reversal of z^4 - z
  Series expected(5);
  expected.at(0) = gq("1");
  expected.at(3) = gq("-1");
  EXPECT_EQ(v, expected);
}

TEST(Rotate, SwapsTwoFactors) {
  HenonFactor f1 = factor(2, {"1"}, "1");
  HenonFactor f2 = factor(3, {"0", "2"}, "2");
  HenonMap m({f1, f2});
  EXPECT_EQ(rotate(m, 1), HenonMap({f2, f1}));
}

TEST(Rotate, FullRotationIsIdentity) {
  HenonMap m({factor(2, {"1"}, "1")});
  EXPECT_EQ(rotate(m, 1), m);
}

TEST(Rotate, ThreeFactorsByTwo) {
  HenonFactor f1 = factor(2, {"1"}, "1");
  HenonFactor f2 = factor(2, {"2"}, "1");
  HenonFactor f3 = factor(2, {"3"}, "1");
  HenonMap m({f1, f2, f3});
  EXPECT_EQ(rotate(m, 2), HenonMap({f3, f1, f2}));
}

TEST(Rotate, ComposedRotationsClose) {
  Sampler s(23);
  for (int rep = 0; rep < 8; ++rep) {
    HenonMap m = s.map(3, 3);
    long n = m.size();
    for (long k = 1; k < n; ++k) EXPECT_EQ(rotate(rotate(m, k), n - k), m);
  }
}

TEST(Theta, IdentityRoot) {
  HenonMap m({factor(3, {"1", "2i"}, "-1")});
  EXPECT_EQ(theta_conjugate(m, gq("1")), m);
}

TEST(Theta, CubicSignFlip) {
  GaussianRational c = gq("(1+2i)/3");
  HenonMap m({HenonFactor::monic_centered(3, {GaussianRational(0), c}, gq("5/2"))});
  HenonMap t = theta_conjugate(m, gq("-1"));
  HenonMap expected({HenonFactor::monic_centered(3, {GaussianRational(0), -c}, gq("5/2"))});
  EXPECT_EQ(t, expected);
}

TEST(Theta, CubicSignFlipPointwise) {
  // theta(z, w) = (zeta z, zeta^{D_{N-1}} w); check H = theta o F o theta^{-1}
  // at sample points.
  GaussianRational zeta = gq("-1");
  HenonMap m({factor(3, {"0", "2"}, "7")});
  HenonMap t = theta_conjugate(m, zeta);
  Degrees deg = degrees(m);
  long dn1 = deg.D[static_cast<std::size_t>(deg.N() - 1)];
  Sampler s(24);
  for (int pt = 0; pt < 3; ++pt) {
    GaussianRational z = s.gaussian(4, 3), w = s.gaussian(4, 3);
    GaussianRational zin = z / zeta;
    GaussianRational win = w / GaussianRational::pow(zeta, dn1);
    auto [fz, fw] = eval_map(m, zin, win);
    auto [hz, hw] = eval_map(t, z, w);
    EXPECT_EQ(hz, zeta * fz);
    EXPECT_EQ(hw, GaussianRational::pow(zeta, dn1) * fw);
  }
}

TEST(Theta, RejectsNonRoot) {
  HenonMap m({factor(2, {"1"}, "1")});  // deg 2, so zeta^1 = 1 forces zeta = 1
  EXPECT_THROW(theta_conjugate(m, gq("-1")), ValidationError);
}

TEST(Theta, PreservesValidityAndJacobian) {
  Sampler s(25);
  int done = 0;
  for (int rep = 0; rep < 40 && done < 10; ++rep) {
    HenonMap m = s.map(3, 4);
    Degrees deg = degrees(m);
    long M = deg.total() - 1;
    for (const char* zs : {"-1", "i", "-i"}) {
      GaussianRational zeta = gq(zs);
      if (GaussianRational::pow(zeta, M) != GaussianRational(1)) continue;
      HenonMap t = theta_conjugate(m, zeta);
      EXPECT_TRUE(validate(t).empty());
      EXPECT_EQ(degrees(t).A, deg.A);
      EXPECT_EQ(theta_conjugate(t, zeta.conjugate()), m);
      ++done;
    }
  }
  EXPECT_GT(done, 0);
}
