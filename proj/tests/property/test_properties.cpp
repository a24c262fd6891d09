#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "../support.hpp"
#include "fatpt/fatpt.hpp"

using namespace fatpt;
using fatpt::testkit::interpolationHF;
using fatpt::testkit::randomForm;
using fatpt::testkit::randomIdeal;
using fatpt::testkit::randomPolynomial;
using fatpt::testkit::smallScheme;

namespace {

constexpr int kCases = 100;

// Distinct stream per suite, reproducible per case.
std::mt19937_64 rngFor(const char* suite, int i) {
  std::seed_seq seq(suite, suite + std::char_traits<char>::length(suite));
  std::vector<std::uint32_t> s(1);
  seq.generate(s.begin(), s.end());
  return std::mt19937_64(static_cast<std::uint64_t>(s[0]) * 1000003u + static_cast<std::uint64_t>(i));
}

std::size_t dimOf(std::mt19937_64& rng) { return 2 + rng() % 2; }

}  // namespace

TEST(Property, EulerRelation) {
  for (int i = 0; i < 2 * kCases; ++i) {
    auto rng = rngFor("euler", i);
    std::size_t v = 3 + rng() % 2;
    unsigned d = static_cast<unsigned>(rng() % 6);
    Polynomial F = randomForm(rng, v, d, 5);
    Polynomial sum = Polynomial::constant(v, 0);
    for (std::size_t j = 0; j < v; ++j) sum = sum + Polynomial::variable(v, j) * partialDerivative(F, j);
    ASSERT_EQ(sum, F * Rational(d)) << "case " << i << ": " << toString(F);
  }
}

TEST(Property, RingAxioms) {
  for (int i = 0; i < 2 * kCases; ++i) {
    auto rng = rngFor("ring", i);
    std::size_t v = 2 + rng() % 3;
    Polynomial a = randomPolynomial(rng, v, 3), b = randomPolynomial(rng, v, 3), c = randomPolynomial(rng, v, 2);
    SCOPED_TRACE(i);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).isZero());
    ASSERT_EQ(a * Polynomial::constant(v, 1), a);
    // Leibniz rule.
    std::size_t x = rng() % v;
    ASSERT_EQ(partialDerivative(a * b, x), partialDerivative(a, x) * b + a * partialDerivative(b, x));
  }
}

TEST(Property, ParsePrintRoundTrip) {
  for (int i = 0; i < 2 * kCases; ++i) {
    auto rng = rngFor("parse", i);
    std::size_t v = 1 + rng() % 5;
    Polynomial p = randomPolynomial(rng, v, 4);
    std::string s = toString(p);
    ASSERT_EQ(parsePolynomial(s, v), p) << s;
    ASSERT_EQ(toString(parsePolynomial(s, v)), s);
  }
}

TEST(Property, GroebnerIdempotenceAndMembership) {
  for (int i = 0; i < kCases; ++i) {
    auto rng = rngFor("groebner", i);
    std::size_t v = 3;
    Ideal I = randomIdeal(rng, v);
    const auto& gb = I.groebnerBasis();
    SCOPED_TRACE(toString(I));
    ASSERT_EQ(reducedGroebnerBasis(gb), gb);
    ASSERT_EQ(Ideal(v, gb), I);
    for (const auto& g : I.generators()) ASSERT_TRUE(normalForm(g, gb).isZero());
    // Combinations of generators are members.
    Polynomial comb = Polynomial::constant(v, 0);
    unsigned top = 4;
    for (const auto& g : I.generators())
      if (g.degree() <= top) comb = comb + g * randomForm(rng, v, top - g.degree(), 3);
    ASSERT_TRUE(I.contains(comb));
    // Remainders are reduced and differ from f by a member.
    Polynomial f = randomForm(rng, v, 3, 6);
    Polynomial r = normalForm(f, gb);
    ASSERT_TRUE(I.contains(f - r));
    for (const auto& [m, c] : r.terms())
      for (const auto& g : gb) ASSERT_FALSE(g.leadMonomial().divides(m));
  }
}

TEST(Property, DimensionIdentity) {
  for (int i = 0; i < kCases; ++i) {
    auto rng = rngFor("dims", i);
    Ideal I = randomIdeal(rng, 3), J = randomIdeal(rng, 3);
    Ideal cap = idealIntersection(I, J), sum = idealSum(I, J);
    SCOPED_TRACE(toString(I) + " and " + toString(J));
    ASSERT_TRUE(I.contains(cap));
    ASSERT_TRUE(J.contains(cap));
    for (unsigned d = 0; d <= 5; ++d)
      ASSERT_EQ(gradedDimension(cap, d) + gradedDimension(sum, d), gradedDimension(I, d) + gradedDimension(J, d))
          << "d=" << d;
  }
}

TEST(Property, HilbertPathsAgree) {
  for (int i = 0; i < kCases; ++i) {
    auto rng = rngFor("hfpaths", i);
    Ideal I = randomIdeal(rng, 3);
    HilbertFunction a = hilbertFunction(I), b = hilbertFunctionByRank(I, 6);
    for (long d = 0; d <= 6; ++d) ASSERT_EQ(a(d), b(d)) << toString(I) << " d=" << d;
  }
}

TEST(Property, ModuleHilbertPathsAgree) {
  for (int i = 0; i < kCases; ++i) {
    auto rng = rngFor("modpaths", i);
    std::size_t v = 3, rank = 2 + rng() % 2;
    std::vector<int> shifts;
    for (std::size_t j = 0; j < rank; ++j) shifts.push_back(static_cast<int>(rng() % 2));
    std::vector<FreeModuleElement> gens;
    std::size_t count = 1 + rng() % 4;
    for (std::size_t g = 0; g < count; ++g) {
      int deg = 2 + static_cast<int>(rng() % 2);
      std::vector<Polynomial> c;
      for (std::size_t j = 0; j < rank; ++j)
        c.push_back(rng() % 3 == 0 ? Polynomial::constant(v, 0)
                                   : randomForm(rng, v, static_cast<unsigned>(deg - shifts[j]), 2));
      gens.emplace_back(std::move(c), shifts);
    }
    Submodule m(v, shifts, gens);
    HilbertFunction a = moduleHilbertFunction(rank, shifts, m);
    HilbertFunction b = moduleHilbertFunctionByRank(rank, shifts, m, 6);
    for (long d = 0; d <= 6; ++d) ASSERT_EQ(a(d), b(d)) << "case " << i << " d=" << d;
  }
}

TEST(Property, FatSchemeIdealIsSaturated) {
  for (int i = 0; i < kCases; ++i) {
    auto rng = rngFor("saturated", i);
    FatPointScheme W = smallScheme(rng, dimOf(rng));
    const Ideal& I = fatSchemeIdeal(W);
    ASSERT_EQ(saturation(I, Ideal::maximal(W.ambient())), I) << describe(W);
  }
}

TEST(Property, SchemeDegreeIsStableValue) {
  for (int i = 0; i < kCases; ++i) {
    auto rng = rngFor("degree", i);
    FatPointScheme W = smallScheme(rng, dimOf(rng));
    HilbertFunction hf = hilbertFunction(W.ideal());
    SCOPED_TRACE(describe(W));
    ASSERT_EQ(*hf.stableValue(), schemeDegree(W));
    long long closed = 0;
    for (unsigned m : W.multiplicities()) closed += binom(m + W.dimension() - 1, W.dimension());
    ASSERT_EQ(closed, schemeDegree(W));
    // Independent check against interpolation, through the regularity index.
    for (long d = 0; d <= regularityIndex(hf) + 1; ++d)
      ASSERT_EQ(hf(d), interpolationHF(W, static_cast<unsigned>(d))) << "d=" << d;
  }
}

TEST(Property, IdealInsideJacobianIdeal) {
  for (int i = 0; i < kCases; ++i) {
    auto rng = rngFor("jacobian", i);
    Ideal I = i % 2 ? randomIdeal(rng, 3) : smallScheme(rng, dimOf(rng)).ideal();
    Ideal J = jacobianIdeal(I);
    for (unsigned d = 0; d <= 6; ++d) ASSERT_TRUE(gradedContained(I, J, d)) << toString(I) << " d=" << d;
  }
}

TEST(Property, SeparatorContracts) {
  for (int i = 0; i < kCases; ++i) {
    auto rng = rngFor("separators", i);
    FatPointScheme W = smallScheme(rng, 2);
    auto r = verifySeparators(W);
    ASSERT_EQ(r.status, Status::Holds) << describe(W) << " " << formatReport(r);
  }
}

TEST(Property, TopFormFastPathMatchesPresentation) {
  for (int i = 0; i < kCases; ++i) {
    auto rng = rngFor("topform", i);
    FatPointScheme W = smallScheme(rng, dimOf(rng));
    auto r = verifyTopFormPaths(W);
    ASSERT_EQ(r.status, Status::Holds) << describe(W) << " " << formatReport(r);
  }
}

TEST(Property, KaehlerFunctionsConsistent) {
  for (int i = 0; i < kCases; ++i) {
    auto rng = rngFor("kaehler", i);
    FatPointScheme W = smallScheme(rng, 2);
    std::size_t k = 1 + rng() % 3;
    HilbertFunction a = kaehlerHilbertFunction(W, k);
    HilbertFunction b = kaehlerHilbertFunctionByRank(W, k, static_cast<unsigned>(a.stableFrom() + 1));
    SCOPED_TRACE(describe(W) + " k=" + std::to_string(k));
    for (long d = 0; d <= a.stableFrom() + 1; ++d) {
      ASSERT_GE(a(d), 0);
      ASSERT_EQ(a(d), b(d)) << "d=" << d;
    }
    ASSERT_LE(regularityIndex(a), kaehlerRiBound(W, k));
  }
}

TEST(Property, ColonIdentityAndBounds) {
  for (int i = 0; i < kCases; ++i) {
    auto rng = rngFor("colon", i);
    FatPointScheme W = smallScheme(rng, dimOf(rng));
    ASSERT_TRUE(verifyColonIdentity(W).holds()) << describe(W);
    std::size_t k = 1 + rng() % (W.dimension() + 1);
    auto b = verifyHPBounds(W, k);
    ASSERT_TRUE(b.holds()) << describe(W) << " " << formatReport(b);
  }
}

TEST(Property, MainTheoremOnSeededSweep) {
  auto schemes = randomSweep(20261018, 2 * kCases);
  for (const auto& W : schemes) {
    auto r = verifyMainTheorem(W);
    ASSERT_EQ(r.status, Status::Holds) << describe(W) << " " << formatReport(r);
  }
}
