#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fatpt/monomial.hpp"
#include "fatpt/rational.hpp"

namespace fatpt {

class AmbientMismatch : public Error {
 public:
  AmbientMismatch() : Error("polynomials live in rings with different variable counts") {}
};

/// Sparse polynomial over Q in X_0..X_{v-1}. Terms are kept sorted by
/// descending degrevlex with no zero coefficients, so structural equality is
/// polynomial equality.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t ambient) : ambient_(ambient) {}

  static Polynomial constant(std::size_t ambient, const Rational& c) {
    Polynomial p(ambient);
    if (c != 0) p.terms_.emplace_back(Monomial(ambient), c);
    return p;
  }

  static Polynomial variable(std::size_t ambient, std::size_t index) {
    return monomial(Monomial::variable(ambient, index), 1);
  }

  static Polynomial monomial(const Monomial& m, const Rational& c) {
    Polynomial p(m.variables());
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
  }

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial fromTerms(std::size_t ambient, std::vector<Term> terms) {
    std::map<Monomial, Rational, DescendingDegRevLex> acc;
    for (auto& [m, c] : terms) {
      if (m.variables() != ambient) throw AmbientMismatch();
      acc[m] += c;
    }
    Polynomial p(ambient);
    for (auto& [m, c] : acc)
      if (c != 0) p.terms_.emplace_back(m, c);
    return p;
  }

  /// Adopts terms already sorted descending with nonzero distinct monomials.
  static Polynomial fromSortedTerms(std::size_t ambient, std::vector<Term> terms) {
    Polynomial p(ambient);
    p.terms_ = std::move(terms);
    return p;
  }

  std::size_t ambient() const { return ambient_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }

  const Monomial& leadMonomial() const { return terms_.front().first; }
  const Rational& leadCoefficient() const { return terms_.front().second; }

  /// Total degree of the leading term; all terms share it when homogeneous.
  unsigned degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

  bool isHomogeneous() const {
    for (const auto& t : terms_)
      if (t.first.degree() != terms_.front().first.degree()) return false;
    return true;
  }

  Rational coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.first == m) return t.second;
    return 0;
  }

  Polynomial monic() const {
    if (isZero()) return *this;
    return *this * (1 / leadCoefficient());
  }

  /// Embeds into (or projects onto) a ring with a different variable count.
  /// Projection requires the dropped variables not to occur.
  Polynomial withAmbient(std::size_t ambient) const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      for (std::size_t i = ambient; i < m.variables(); ++i)
        if (m[i] != 0) throw Error("cannot drop a variable that occurs in the polynomial");
      t.emplace_back(m.resized(ambient), c);
    }
    if (ambient >= ambient_) return fromSortedTerms(ambient, std::move(t));
    return fromTerms(ambient, std::move(t));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    checkAmbient(p, q);
    Polynomial r(p.ambient_);
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto i = p.terms_.begin(), j = q.terms_.begin();
    auto order = MonomialOrder::degRevLex();
    while (i != p.terms_.end() && j != q.terms_.end()) {
      int c = order.compare(i->first, j->first);
      if (c > 0) {
        r.terms_.push_back(*i++);
      } else if (c < 0) {
        r.terms_.push_back(*j++);
      } else {
        Rational s = i->second + j->second;
        if (s != 0) r.terms_.emplace_back(i->first, std::move(s));
        ++i;
        ++j;
      }
    }
    r.terms_.insert(r.terms_.end(), i, p.terms_.end());
    r.terms_.insert(r.terms_.end(), j, q.terms_.end());
    return r;
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    checkAmbient(p, q);
    if (p.isZero() || q.isZero()) return Polynomial(p.ambient_);
    std::map<Monomial, Rational, DescendingDegRevLex> acc;
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) acc[mp * mq] += cp * cq;
    Polynomial r(p.ambient_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.emplace_back(m, std::move(c));
    return r;
  }

  friend Polynomial operator*(const Polynomial& p, const Rational& c) {
    if (c == 0) return Polynomial(p.ambient_);
    Polynomial r = p;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

  /// Multiplication by a monomial keeps the term order, so no re-sort.
  Polynomial timesMonomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.first = t.first * m;
    return r;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.ambient_ == q.ambient_ && p.terms_ == q.terms_;
  }

 private:
  static void checkAmbient(const Polynomial& p, const Polynomial& q) {
    if (p.ambient_ != q.ambient_) throw AmbientMismatch();
  }

  std::size_t ambient_ = 0;
  std::vector<Term> terms_;
};

inline Polynomial partialDerivative(const Polynomial& p, std::size_t var) {
  if (var >= p.ambient()) throw Error("variable index out of range");
  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d.set(var, m[var] - 1);
    out.emplace_back(d, c * m[var]);
  }
  // Lowering one exponent of every term can reorder terms of mixed degree.
  return Polynomial::fromTerms(p.ambient(), std::move(out));
}

inline Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.ambient()) throw AmbientMismatch();
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (std::size_t i = 0; i < m.variables(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

inline std::string toString(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.variables(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'X' + std::to_string(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

/// Canonical printing, e.g. `6*X0^3*X1 - 11*X0^2*X1^2`; parsePolynomial reads it back.
inline std::string toString(const Polynomial& p) {
  if (p.isZero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = toString(m);
    if (mono.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + '*';
      s += mono;
    }
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << toString(p); }

}  // namespace fatpt
