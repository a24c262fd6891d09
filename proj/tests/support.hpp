#pragma once

#include <random>
#include <vector>

#include "fatpt/fatpt.hpp"

namespace fatpt::testkit {

inline Rational smallRational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 7) - 3;
  long den = 1 + static_cast<long>(rng() % 2);
  return makeRational(Integer(num), Integer(den));
}

/// Random homogeneous form of degree d with up to `terms` terms.
inline Polynomial randomForm(std::mt19937_64& rng, std::size_t v, unsigned d, std::size_t terms = 4) {
  auto mons = monomialsOfDegree(v, d);
  Polynomial p = Polynomial::constant(v, 0);
  for (std::size_t t = 0; t < terms; ++t) p = p + Polynomial::monomial(mons[rng() % mons.size()], smallRational(rng));
  return p;
}

/// Random inhomogeneous polynomial of degree <= maxDeg.
inline Polynomial randomPolynomial(std::mt19937_64& rng, std::size_t v, unsigned maxDeg) {
  Polynomial p = Polynomial::constant(v, 0);
  for (unsigned d = 0; d <= maxDeg; ++d) p = p + randomForm(rng, v, d, 2);
  return p;
}

/// Ideal generated by 1..3 random nonzero forms of degree 1..3.
inline Ideal randomIdeal(std::mt19937_64& rng, std::size_t v) {
  std::vector<Polynomial> g;
  std::size_t count = 1 + rng() % 3;
  while (g.size() < count) {
    Polynomial f = randomForm(rng, v, 1 + static_cast<unsigned>(rng() % 3), 3);
    if (!f.isZero()) g.push_back(f);
  }
  return Ideal(v, std::move(g));
}

/// Smaller random schemes than the sweep: keeps 100-case suites quick.
inline FatPointScheme smallScheme(std::mt19937_64& rng, std::size_t n) {
  return randomScheme(rng, n, 3, n == 2 ? 3 : 2);
}

/// HF_W(d) by interpolation: rank of the conditions "every derivative of
/// order < m_i vanishes at P_i" on the forms of degree d.
inline long long interpolationHF(const FatPointScheme& W, unsigned d) {
  std::size_t v = W.ambient();
  auto mons = monomialsOfDegree(v, d);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < W.size(); ++i) {
    const auto& P = W.points()[i].coordinates();
    for (unsigned o = 0; o < W.multiplicities()[i] && o <= d; ++o)
      for (const auto& D : monomialsOfDegree(v, o)) {
        std::vector<Rational> row;
        for (const auto& m : mons) {
          Polynomial f = Polynomial::monomial(m, 1);
          for (std::size_t x = 0; x < v; ++x)
            for (unsigned e = 0; e < D[x]; ++e) f = partialDerivative(f, x);
          row.push_back(evaluate(f, P));
        }
        rows.push_back(std::move(row));
      }
  }
  // Plain Gaussian elimination.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < mons.size() && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < mons.size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

}  // namespace fatpt::testkit
