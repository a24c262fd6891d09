#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fatpt/groebner.hpp"
#include "fatpt/linalg.hpp"

namespace fatpt {

/// Homogeneous ideal of K[X_0..X_{v-1}] given by generators. The reduced
/// degrevlex Groebner basis is computed lazily, exactly once, and shared by
/// all copies of the value.
class Ideal {
 public:
  Ideal(std::size_t ambient, std::vector<Polynomial> generators)
      : ambient_(ambient), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (g.ambient() != ambient) throw AmbientMismatch();
      if (!g.isHomogeneous()) throw Error("ideal generators must be homogeneous: " + toString(g));
      if (!g.isZero()) generators_.push_back(std::move(g));
    }
  }

  static Ideal zero(std::size_t ambient) { return Ideal(ambient, {}); }
  static Ideal unit(std::size_t ambient) { return Ideal(ambient, {Polynomial::constant(ambient, 1)}); }

  /// The homogeneous maximal ideal <X_0, ..., X_{v-1}>.
  static Ideal maximal(std::size_t ambient) {
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < ambient; ++i) g.push_back(Polynomial::variable(ambient, i));
    return Ideal(ambient, std::move(g));
  }

  std::size_t ambient() const { return ambient_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  const std::vector<Polynomial>& groebnerBasis() const {
    std::call_once(cache_->once, [&] { cache_->gb = reducedGroebnerBasis(generators_); });
    return cache_->gb;
  }

  std::vector<Monomial> leadingMonomials() const {
    std::vector<Monomial> out;
    for (const auto& g : groebnerBasis()) out.push_back(g.leadMonomial());
    return out;
  }

  bool isZero() const { return generators_.empty(); }
  bool isUnit() const {
    const auto& gb = groebnerBasis();
    return gb.size() == 1 && gb.front().isConstant();
  }

  bool contains(const Polynomial& p) const { return normalForm(p, groebnerBasis()).isZero(); }

  bool contains(const Ideal& other) const {
    for (const auto& g : other.generators_)
      if (!contains(g)) return false;
    return true;
  }

  unsigned maxGeneratorDegree() const {
    unsigned d = 0;
    for (const auto& g : generators_) d = std::max(d, g.degree());
    return d;
  }

  /// Equality of ideals: equal reduced Groebner bases.
  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ambient_ == b.ambient_ && a.groebnerBasis() == b.groebnerBasis();
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> gb;
  };

  std::size_t ambient_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

inline std::string toString(const Ideal& I) {
  std::string s = "<";
  for (std::size_t i = 0; i < I.generators().size(); ++i) {
    if (i) s += ", ";
    s += toString(I.generators()[i]);
  }
  return s + ">";
}

inline std::ostream& operator<<(std::ostream& os, const Ideal& I) { return os << toString(I); }

inline void requireSameAmbient(const Ideal& I, const Ideal& J) {
  if (I.ambient() != J.ambient()) throw AmbientMismatch();
}

inline Ideal idealSum(const Ideal& I, const Ideal& J) {
  requireSameAmbient(I, J);
  std::vector<Polynomial> g = I.generators();
  g.insert(g.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ambient(), std::move(g));
}

inline Ideal idealProduct(const Ideal& I, const Ideal& J) {
  requireSameAmbient(I, J);
  std::vector<Polynomial> g;
  for (const auto& f : I.generators())
    for (const auto& h : J.generators()) {
      Polynomial p = f * h;
      if (std::find(g.begin(), g.end(), p) == g.end()) g.push_back(std::move(p));
    }
  return Ideal(I.ambient(), std::move(g));
}

inline Ideal idealPower(const Ideal& I, unsigned k) {
  Ideal r = Ideal::unit(I.ambient());
  for (unsigned i = 0; i < k; ++i) r = i == 0 ? I : idealProduct(r, I);
  return r;
}

/// I ∩ J by eliminating t from t*I + (1-t)*J. t is appended as the last
/// variable, has weight zero in the grading and sits in the elimination block.
inline Ideal idealIntersection(const Ideal& I, const Ideal& J) {
  requireSameAmbient(I, J);
  std::size_t n = I.ambient();
  if (I.isZero() || J.isZero()) return Ideal::zero(n);
  std::size_t aux = n + 1;
  if (aux > Monomial::kMaxVariables) throw Error("no room for the elimination variable");
  Polynomial t = Polynomial::variable(aux, n);
  Polynomial oneMinusT = Polynomial::constant(aux, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.groebnerBasis()) gens.push_back(t * f.withAmbient(aux));
  for (const auto& g : J.groebnerBasis()) gens.push_back(oneMinusT * g.withAmbient(aux));
  auto gb = reducedGroebnerBasis(gens, MonomialOrder::eliminating(n));
  std::vector<Polynomial> out;
  for (const auto& g : gb)
    if (g.leadMonomial()[n] == 0) out.push_back(g.withAmbient(n));
  return Ideal(n, std::move(out));
}

/// Exact quotient f/g. Throws if g does not divide f.
inline Polynomial divideExact(const Polynomial& f, const Polynomial& g) {
  if (g.isZero()) throw Error("division by zero polynomial");
  Polynomial rest = f;
  std::vector<Polynomial::Term> q;
  while (!rest.isZero()) {
    if (!g.leadMonomial().divides(rest.leadMonomial())) throw Error("inexact polynomial division");
    Monomial m = rest.leadMonomial() / g.leadMonomial();
    Rational c = rest.leadCoefficient() / g.leadCoefficient();
    q.emplace_back(m, c);
    rest = rest - g.timesMonomial(m) * c;
  }
  return Polynomial::fromTerms(f.ambient(), std::move(q));
}

/// I : <g> = (I ∩ <g>) / g.
inline Ideal idealQuotient(const Ideal& I, const Polynomial& g) {
  if (g.isZero()) throw Error("colon by the zero polynomial");
  if (g.isConstant()) return I;
  Ideal inter = idealIntersection(I, Ideal(I.ambient(), {g}));
  std::vector<Polynomial> out;
  for (const auto& h : inter.generators()) out.push_back(divideExact(h, g));
  return Ideal(I.ambient(), std::move(out));
}

/// I : J as the intersection of I : g over the generators g of J.
inline Ideal idealColon(const Ideal& I, const Ideal& J) {
  requireSameAmbient(I, J);
  if (J.isZero()) throw Error("colon by the zero ideal");
  std::optional<Ideal> r;
  for (const auto& g : J.groebnerBasis()) {
    Ideal q = idealQuotient(I, g);
    r = r ? idealIntersection(*r, q) : q;
  }
  return *r;
}

/// I : J^∞, iterating the colon until the chain becomes stationary.
inline Ideal saturation(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (;;) {
    if (cur.isUnit()) return cur;
    Ideal next = idealColon(cur, J);
    if (next == cur) return cur;
    cur = next;
  }
}

namespace detail {

inline Polynomial rowToPolynomial(const std::vector<std::pair<Monomial, Rational>>& row, std::size_t ambient) {
  return Polynomial::fromSortedTerms(ambient, row);
}

using PolyEchelon = EchelonBasis<Monomial, DescendingDegRevLex>;

}  // namespace detail

/// Reduced row echelon basis of the degree-d piece I_d, one multiple m*g of a
/// Groebner basis element per leading monomial of degree d.
inline std::vector<Polynomial> gradedPiece(const Ideal& I, unsigned d) {
  const auto& gb = I.groebnerBasis();
  detail::PolyEchelon ech;
  for (const auto& m : monomialsOfDegree(I.ambient(), d)) {
    for (const auto& g : gb) {
      if (g.degree() > d || !g.leadMonomial().divides(m)) continue;
      ech.insert(g.timesMonomial(m / g.leadMonomial()).terms());
      break;
    }
  }
  std::vector<Polynomial> out;
  for (const auto& row : ech.reducedRows()) out.push_back(detail::rowToPolynomial(row, I.ambient()));
  return out;
}

/// dim_K I_d, counted from the leading-term ideal.
inline long long gradedDimension(const Ideal& I, unsigned d) {
  const auto& gb = I.groebnerBasis();
  long long count = 0;
  for (const auto& m : monomialsOfDegree(I.ambient(), d))
    for (const auto& g : gb)
      if (g.leadMonomial().divides(m)) {
        ++count;
        break;
      }
  return count;
}

/// Whether I_d ⊆ J, testing a basis of I_d against J's Groebner basis.
inline bool gradedContained(const Ideal& I, const Ideal& J, unsigned d) {
  requireSameAmbient(I, J);
  for (const auto& f : gradedPiece(I, d))
    if (!J.contains(f)) return false;
  return true;
}

/// dim_K of the span of {m*g : g in gens, deg m = d - deg g}, by exact row
/// reduction. Independent of any Groebner basis computation.
inline long long spanDimension(std::span<const Polynomial> gens, unsigned d) {
  detail::PolyEchelon ech;
  for (const auto& g : gens) {
    if (g.isZero() || g.degree() > d) continue;
    for (const auto& m : monomialsOfDegree(g.ambient(), d - g.degree())) ech.insert(g.timesMonomial(m).terms());
  }
  return static_cast<long long>(ech.rank());
}

}  // namespace fatpt
