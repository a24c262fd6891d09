#include <gtest/gtest.h>

#include <vector>

#include "fatpt/fatpt.hpp"

using namespace fatpt;

namespace {

Ideal I(std::vector<const char*> gens, std::size_t v = 3) {
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(parsePolynomial(s, v));
  return Ideal(v, g);
}

}  // namespace

TEST(Hilbert, PointIsConstantOne) {
  HilbertFunction hf = hilbertFunction(I({"X1", "X2"}));
  EXPECT_TRUE(hf.certified());
  EXPECT_EQ(formatHilbertFunction(hf), "1 1 ...");
  EXPECT_EQ(regularityIndex(hf), 0);
  EXPECT_EQ(*hf.stableValue(), 1);
}

TEST(Hilbert, DoublePoint) {
  HilbertFunction hf = hilbertFunction(I({"X0^2", "X0*X1", "X1^2"}));
  EXPECT_EQ(formatHilbertFunction(hf), "1 3 3 ...");
  EXPECT_EQ(regularityIndex(hf), 1);
}

TEST(Hilbert, HypersurfaceIsNotStable) {
  HilbertFunction hf = hilbertFunction(I({"X0*X1 - X2^2"}));
  EXPECT_FALSE(hf.stableValue().has_value());
  std::vector<long long> expected{1, 3, 5, 7, 9, 11};
  EXPECT_EQ(hf.values(5), expected);
  EXPECT_EQ(hf.polynomialAt(10), 21);
}

TEST(Hilbert, WholeRingAndZeroQuotient) {
  HilbertFunction full = hilbertFunction(Ideal::zero(3));
  EXPECT_EQ(full(4), 15);
  HilbertFunction none = hilbertFunction(Ideal::unit(3));
  EXPECT_EQ(none(0), 0);
  EXPECT_EQ(*none.stableValue(), 0);
}

TEST(Hilbert, SeriesArithmetic) {
  HilbertFunction p = hilbertFunction(I({"X1", "X2"}));
  HilbertFunction q = hilbertFunction(I({"X0^2", "X0*X1", "X1^2"}));
  HilbertFunction diff = q - p;
  EXPECT_EQ(formatHilbertFunction(diff), "0 2 2 ...");
  EXPECT_EQ(formatHilbertFunction(p.shifted(2)), "0 0 1 1 ...");
  EXPECT_EQ(formatHilbertFunction(q.scaled(3)), "3 9 9 ...");
}

TEST(Hilbert, UncertifiedValues) {
  HilbertFunction hf = HilbertFunction::fromValues({1, 3, 4, 4});
  EXPECT_FALSE(hf.certified());
  EXPECT_EQ(hf.stableFrom(), 2);
  EXPECT_THROW(regularityIndex(hf), Error);
  EXPECT_THROW(hf(9), Error);
  EXPECT_THROW(hf.shifted(1), Error);
}

TEST(Hilbert, RankPathMatchesLeadingTermPath) {
  Ideal J = I({"X0^2 - X1*X2", "X1^3", "X0*X2^2"});
  HilbertFunction a = hilbertFunction(J), b = hilbertFunctionByRank(J, 8);
  for (long d = 0; d <= 8; ++d) EXPECT_EQ(a(d), b(d)) << d;
}

TEST(Hilbert, MonomialSeriesNumerator) {
  // <X0^2, X0*X1> in two variables: numerator 1 - 2t^2 + t^3.
  std::vector<Monomial> lt{Monomial::variable(2, 0, 2), Monomial::variable(2, 0) * Monomial::variable(2, 1)};
  std::vector<long long> expected{1, 0, -2, 1};
  EXPECT_EQ(hilbertSeriesNumerator(lt), expected);
}
