#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "fatpt/fatpt.hpp"

using namespace fatpt;

namespace {

std::string detailOf(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return v;
  return "";
}

FatPointScheme twoDoublePoints() { return FatPointScheme(2, {ProjectivePoint{1, 0, 0}, ProjectivePoint{0, 1, 0}}, {2, 2}); }

}  // namespace

TEST(Report, Formatting) {
  VerificationReport r{"prop-2.6b", {"W"}};
  EXPECT_EQ(formatReport(r), "claim prop-2.6b status holds");
  r.status = Status::HoldsFromDegree;
  r.fromDegree = 8;
  r.witness = Witness{7, 27, 28};
  EXPECT_EQ(formatReport(r), "claim prop-2.6b status holds-from-degree(8) witness d=7 lhs=27 rhs=28");
  EXPECT_TRUE(r.holds());
  r.status = Status::Fails;
  EXPECT_FALSE(r.holds());
  EXPECT_FALSE(r.asExpected());
  r.expectFailure = true;
  EXPECT_TRUE(r.asExpected());
}

TEST(MainTheorem, EightPoints) {
  auto r = verifyMainTheorem(builtin::ex27());
  EXPECT_EQ(r.status, Status::Holds);
  EXPECT_EQ(detailOf(r, "hp"), "13");
}

TEST(MainTheorem, TwoDoublePointsAndReduced) {
  auto r = verifyMainTheorem(twoDoublePoints());
  EXPECT_EQ(r.status, Status::Holds);
  EXPECT_EQ(detailOf(r, "hp"), "2");
  auto x = verifyMainTheorem(builtin::threePoints());
  EXPECT_EQ(x.status, Status::Holds);
  EXPECT_EQ(detailOf(x, "hp"), "0");
}

TEST(HPBounds, EightPointsTwoForms) {
  auto r = verifyHPBounds(builtin::ex27(), 2);
  EXPECT_EQ(r.status, Status::Holds);
  EXPECT_EQ(detailOf(r, "lower"), "39");
  EXPECT_EQ(detailOf(r, "hp"), "46");
  EXPECT_EQ(detailOf(r, "upper"), "84");
  EXPECT_THROW(verifyHPBounds(builtin::ex27(), 4), Error);
}

TEST(HPBounds, EquimultipleTopFormIsTight) {
  // 3X in P^2 for three points: HP(Omega^3) = s * C(nu + n - 1, n) with nu = 2.
  FatPointScheme W = fattening(builtin::threePoints(), 2);
  auto r = verifyHPBounds(W, 3);
  EXPECT_EQ(r.status, Status::Holds);
  EXPECT_EQ(detailOf(r, "hp"), std::to_string(3 * binom(3, 2)));
  EXPECT_EQ(detailOf(r, "hp"), detailOf(r, "lower"));
}

TEST(HPBounds, ThreePointsRegularity) {
  auto r = verifyHPBounds(builtin::threePoints(), 1);
  EXPECT_EQ(r.status, Status::Holds);
  EXPECT_EQ(detailOf(r, "ri"), "3");
}

TEST(ProductIntersection, Examples) {
  auto a = verifyProductIntersection(builtin::ex27());
  EXPECT_EQ(formatReport(a), "claim prop-2.6b status holds-from-degree(8) witness d=7 lhs=27 rhs=28");
  auto b = verifyProductIntersection(builtin::ex28());
  ASSERT_TRUE(b.witness.has_value());
  EXPECT_EQ(b.witness->degree, 7);
  EXPECT_EQ(b.witness->lhs, 21);
  EXPECT_EQ(b.witness->rhs, 22);
}

TEST(ProductIntersection, CompleteIntersectionSupport) {
  // Four points cut out by X2(X2 - X0) and X1(X1 - X0), doubled.
  FatPointScheme W(2, {ProjectivePoint{1, 0, 0}, ProjectivePoint{1, 1, 0}, ProjectivePoint{1, 0, 1}, ProjectivePoint{1, 1, 1}},
                   {2, 2, 2, 2});
  auto r = verifyProductIntersection(W);
  EXPECT_EQ(r.status, Status::HoldsFromDegree);
  EXPECT_EQ(r.fromDegree, 0);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(ColonIdentity, Examples) {
  EXPECT_EQ(verifyColonIdentity(builtin::ex27()).status, Status::Holds);
  FatPointScheme W(2, {ProjectivePoint{1, 2, 3}}, {2});
  EXPECT_EQ(verifyColonIdentity(W).status, Status::Holds);
  Ideal IP = pointVanishingIdeal(ProjectivePoint{1, 2, 3});
  EXPECT_EQ(idealColon(idealPower(IP, 2), IP), IP);
}

TEST(DerivativeInclusion, NegativeControl) {
  auto r = verifyDerivativeInclusion(builtin::ex34X(), builtin::ex34Y(), 1, 1, 5);
  EXPECT_EQ(r.claimId, "lem-3.3");
  EXPECT_EQ(r.status, Status::Fails);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->degree, 4);
  EXPECT_EQ(r.witness->lhs, 11);
  EXPECT_EQ(r.witness->rhs, 15);
  EXPECT_EQ(detailOf(r, "chain"), "no");
}

TEST(DerivativeInclusion, SubsetHolds) {
  FatPointScheme X = builtin::ex34X();
  FatPointScheme Y(2, {X.points()[0], X.points()[1]}, {1, 1});
  auto r = verifyDerivativeInclusion(X, Y, 1, 1, 5);
  EXPECT_EQ(r.status, Status::HoldsFromDegree);
  EXPECT_TRUE(r.heuristic);
}

TEST(DerivativeInclusion, MultiplicityChainOfEightPoints) {
  FatPointScheme W = builtin::ex27();
  auto chain = multiplicityChain(W);
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain[0].points.size(), 8u);
  EXPECT_EQ(chain[0].exponent, 0u);
  EXPECT_EQ(chain[1].points.size(), 4u);
  EXPECT_EQ(chain[1].exponent, 1u);
  EXPECT_EQ(chain[2].points.size(), 1u);
  EXPECT_EQ(chain[2].exponent, 3u);
  EXPECT_TRUE(isDescendingChain(chain));
  // The product of the chain is I_Y up to saturation.
  EXPECT_EQ(saturation(chainProduct(2, chain, 0), Ideal::maximal(3)), slimming(W).ideal());
  auto r = verifyDerivativeInclusion(2, chain, 5);
  EXPECT_EQ(r.claimId, "prop-3.5");
  EXPECT_EQ(r.status, Status::HoldsFromDegree);
}

TEST(Jacobian, StabilityAndTopForm) {
  FatPointScheme W = twoDoublePoints();
  EXPECT_TRUE(verifyJacobianStability(W, 5).holds());
  EXPECT_EQ(verifyTopFormPaths(W).status, Status::Holds);
}

TEST(Separators, Contracts) {
  EXPECT_EQ(verifySeparators(twoDoublePoints()).status, Status::Holds);
  FatPointScheme W(2, {ProjectivePoint{1, 0, 0}, ProjectivePoint{1, 1, 1}, ProjectivePoint{0, 1, 2}}, {1, 3, 2});
  EXPECT_EQ(verifySeparators(W).status, Status::Holds);
}

TEST(P2Formulas, Examples) {
  EXPECT_EQ(p2KaehlerHPFormulas(builtin::threePoints()), (std::array<long long, 3>{3, 0, 0}));
  FatPointScheme P2(2, {ProjectivePoint{1, 0, 0}}, {2});
  EXPECT_EQ(p2KaehlerHPFormulas(P2), (std::array<long long, 3>{6, 4, 1}));
  EXPECT_EQ(verifyP2Formulas(P2).status, Status::Holds);
  auto r = verifyP2Formulas(builtin::ex27());
  EXPECT_EQ(r.status, Status::Holds);
  EXPECT_EQ(detailOf(r, "hp2"), "46");
  EXPECT_THROW(verifyP2Formulas(FatPointScheme(3, {ProjectivePoint{1, 0, 0, 0}}, {1})), Error);
}

TEST(P2Regularity, ThreePoints) {
  auto r = verifyP2RegularityBounds(builtin::threePoints());
  EXPECT_EQ(r.status, Status::Holds);
  EXPECT_EQ(detailOf(r, "t"), "3");
  EXPECT_EQ(detailOf(r, "ri1"), "3");
  EXPECT_EQ(detailOf(r, "ri2"), "4");
  EXPECT_EQ(detailOf(r, "ri3"), "4");
}

TEST(ComplexExactness, SimplePoint) {
  FatPointScheme W(2, {ProjectivePoint{1, 0, 0}}, {1});
  auto rows = complexRows(W);
  auto r = verifyComplexExactness(W);
  EXPECT_TRUE(r.holds());
  EXPECT_LE(r.fromDegree, rows.t);
  for (long i = 0; i <= rows.t + 2; ++i)
    EXPECT_EQ(rows.a(i) - rows.b(i) + rows.c(i) - rows.d(i), complexHomologyAt(W, i).kerAlpha - complexHomologyAt(W, i).middle);
}

TEST(ComplexExactness, StableValuesOfEightPoints) {
  auto rows = complexRows(builtin::ex27());
  EXPECT_EQ(*rows.a.stableValue(), 31);
  EXPECT_EQ(*rows.b.stableValue(), 69);
  EXPECT_EQ(*rows.c.stableValue(), 84);
  EXPECT_EQ(*rows.d.stableValue(), 46);
  EXPECT_EQ(rows.t, 16);
}

TEST(RandomSchemes, Reproducible) {
  auto a = randomSweep(7, 10), b = randomSweep(7, 10);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_TRUE(a[i].dimension() == 2 || a[i].dimension() == 3);
    EXPECT_LE(a[i].size(), 4u);
    for (unsigned m : a[i].multiplicities()) EXPECT_LE(m, 3u);
  }
}

TEST(Examples, Registry) {
  auto names = exampleNames();
  EXPECT_EQ(names, (std::vector<std::string>{"ex-2.7", "ex-2.8", "ex-3.4", "ex-4.4", "rem-4.2"}));
  EXPECT_THROW(builtinExample("ex-9.9"), Error);
  auto e = builtinExample("ex-3.4");
  EXPECT_TRUE(e.ok());
  ASSERT_EQ(e.rows.size(), 2u);
  EXPECT_EQ(e.rows[0].computed, "1 3 6 10 11 10 10 ...");
  EXPECT_EQ(e.rows[1].computed, "1 3 6 10 15 8 8 ...");
}
