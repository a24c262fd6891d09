#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "fatpt/monomial.hpp"
#include "fatpt/polynomial.hpp"

namespace fatpt {

/// A monomial tagged with a free-module basis index. Ideals use component 0.
struct ModuleTerm {
  Monomial mono;
  std::uint32_t comp = 0;

  friend bool operator==(const ModuleTerm& a, const ModuleTerm& b) { return a.comp == b.comp && a.mono == b.mono; }
};

/// Position-over-term refinement of a monomial order on a graded free module:
/// e_0 > e_1 > ..., then the monomial order. Generator degrees only enter the
/// grading used for pair selection.
class ModuleOrder {
 public:
  ModuleOrder(MonomialOrder order, std::vector<int> shifts) : order_(order), shifts_(std::move(shifts)) {}

  static ModuleOrder forIdeals(MonomialOrder order = MonomialOrder::degRevLex()) { return ModuleOrder(order, {0}); }

  const MonomialOrder& monomialOrder() const { return order_; }
  const std::vector<int>& shifts() const { return shifts_; }

  int degree(const ModuleTerm& t) const { return static_cast<int>(order_.grading(t.mono)) + shifts_[t.comp]; }

  bool greater(const ModuleTerm& a, const ModuleTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp;
    return order_.greater(a.mono, b.mono);
  }

  struct Greater {
    const ModuleOrder* self;
    bool operator()(const ModuleTerm& a, const ModuleTerm& b) const { return self->greater(a, b); }
  };

 private:
  MonomialOrder order_;
  std::vector<int> shifts_;
};

namespace detail {

using VecTerm = std::pair<ModuleTerm, Rational>;
/// Sparse module element, terms sorted descending by the active ModuleOrder.
using Vec = std::vector<VecTerm>;

inline Vec toVec(const Polynomial& p, const ModuleOrder& order, std::uint32_t comp = 0) {
  Vec v;
  v.reserve(p.size());
  for (const auto& [m, c] : p.terms()) v.push_back({ModuleTerm{m, comp}, c});
  if (!order.monomialOrder().isDegRevLex())
    std::sort(v.begin(), v.end(), [&](const VecTerm& a, const VecTerm& b) { return order.greater(a.first, b.first); });
  return v;
}

inline Polynomial toPolynomial(const Vec& v, std::size_t ambient) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(v.size());
  for (const auto& [t, c] : v) terms.emplace_back(t.mono, c);
  return Polynomial::fromTerms(ambient, std::move(terms));
}

inline void makeMonic(Vec& v) {
  if (v.empty() || v.front().second == 1) return;
  Rational inv = 1 / v.front().second;
  for (auto& t : v) t.second *= inv;
}

/// Division of sparse module elements by a list of divisors. A sorted map
/// serves as the accumulator so the current lead is always its first entry.
class Reducer {
 public:
  explicit Reducer(const ModuleOrder& order) : order_(order) {}

  void add(const Vec* divisor) {
    divisors_.push_back(divisor);
    masks_.push_back(divisor->front().first.mono.support());
  }

  std::size_t size() const { return divisors_.size(); }

  /// Index of a divisor whose lead divides t, or -1.
  int findDivisor(const ModuleTerm& t) const {
    std::uint32_t mask = t.mono.support();
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
      const ModuleTerm& lead = divisors_[i]->front().first;
      if (lead.comp != t.comp || (masks_[i] & ~mask) != 0) continue;
      if (lead.mono.divides(t.mono)) return static_cast<int>(i);
    }
    return -1;
  }

  /// Full normal form: no term of the result is divisible by a divisor lead.
  Vec normalForm(const Vec& f) const {
    Acc acc{ModuleOrder::Greater{&order_}};
    for (const auto& [t, c] : f) acc.emplace(t, c);
    Vec out;
    Rational q;
    while (!acc.empty()) {
      auto top = acc.begin();
      int i = findDivisor(top->first);
      if (i < 0) {
        out.emplace_back(top->first, std::move(top->second));
        acc.erase(top);
        continue;
      }
      const Vec& g = *divisors_[i];
      Monomial shift = top->first.mono / g.front().first.mono;
      q = top->second / g.front().second;
      acc.erase(top);
      for (std::size_t k = 1; k < g.size(); ++k) {
        ModuleTerm key{g[k].first.mono * shift, g[k].first.comp};
        auto [it, inserted] = acc.try_emplace(key);
        it->second -= q * g[k].second;
        if (it->second == 0) acc.erase(it);
      }
    }
    return out;
  }

 private:
  using Acc = std::map<ModuleTerm, Rational, ModuleOrder::Greater>;
  const ModuleOrder& order_;
  std::vector<const Vec*> divisors_;
  std::vector<std::uint32_t> masks_;
};

/// Homogeneous Buchberger algorithm with the normal selection strategy
/// (smallest lcm degree first), the coprime criterion (ideals only) and the chain
/// criterion. Input elements are queued by degree next to the S-pairs.
class Buchberger {
 public:
  explicit Buchberger(const ModuleOrder& order) : order_(order), reducer_(order) {}

  /// Returns the reduced Groebner basis sorted ascending by lead term.
  std::vector<Vec> run(std::vector<Vec> input) {
    for (auto& v : input) {
      if (v.empty()) continue;
      int d = order_.degree(v.front().first);
      inputs_.emplace(d, pendingInputs_.size());
      pendingInputs_.push_back(std::move(v));
    }
    while (!pairs_.empty() || !inputs_.empty()) {
      int d = nextDegree();
      // Inputs of degree d first: they are cheap and often make pairs redundant.
      while (!inputs_.empty() && inputs_.begin()->first == d) {
        std::size_t idx = inputs_.begin()->second;
        inputs_.erase(inputs_.begin());
        consider(reducer_.normalForm(pendingInputs_[idx]));
        pendingInputs_[idx].clear();
      }
      while (!pairs_.empty() && pairs_.begin()->degree == d) {
        Pair p = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        pending_[key(p.i, p.j)] = false;
        if (chainCriterion(p)) continue;
        consider(reducer_.normalForm(sPolynomial(p)));
      }
    }
    return reduce();
  }

 private:
  struct Pair {
    int degree;
    ModuleTerm lcm;
    std::size_t i, j;
  };

  struct PairLess {
    const ModuleOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (order->greater(b.lcm, a.lcm)) return true;
      if (order->greater(a.lcm, b.lcm)) return false;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  static std::uint64_t key(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(j) << 32) | i;
  }

  int nextDegree() const {
    int d = std::numeric_limits<int>::max();
    if (!inputs_.empty()) d = inputs_.begin()->first;
    if (!pairs_.empty()) d = std::min(d, pairs_.begin()->degree);
    return d;
  }

  void consider(Vec h) {
    if (h.empty()) return;
    makeMonic(h);
    basis_.push_back(std::make_unique<Vec>(std::move(h)));
    std::size_t j = basis_.size() - 1;
    const ModuleTerm& lj = basis_[j]->front().first;
    for (std::size_t i = 0; i < j; ++i) {
      const ModuleTerm& li = basis_[i]->front().first;
      if (li.comp != lj.comp) continue;
      // The product criterion only holds in rank one.
      if (order_.shifts().size() == 1 && li.mono.coprime(lj.mono)) continue;
      ModuleTerm l{li.mono.lcm(lj.mono), lj.comp};
      pairs_.insert(Pair{order_.degree(l), l, i, j});
      pending_[key(i, j)] = true;
    }
    reducer_.add(basis_[j].get());
  }

  bool isPending(std::size_t i, std::size_t j) const {
    auto it = pending_.find(key(i, j));
    return it != pending_.end() && it->second;
  }

  /// Skip (i,j) when some lead k divides lcm(i,j) and both (i,k), (j,k)
  /// are no longer waiting.
  bool chainCriterion(const Pair& p) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const ModuleTerm& lk = basis_[k]->front().first;
      if (lk.comp != p.lcm.comp || !lk.mono.divides(p.lcm.mono)) continue;
      if (isPending(p.i, k) || isPending(p.j, k)) continue;
      return true;
    }
    return false;
  }

  Vec sPolynomial(const Pair& p) const {
    const Vec& f = *basis_[p.i];
    const Vec& g = *basis_[p.j];
    Monomial mf = p.lcm.mono / f.front().first.mono;
    Monomial mg = p.lcm.mono / g.front().first.mono;
    // Both are monic, so the leads cancel; merge the tails.
    Vec out;
    out.reserve(f.size() + g.size());
    auto i = f.begin() + 1, j = g.begin() + 1;
    auto shifted = [](const VecTerm& t, const Monomial& m) { return ModuleTerm{t.first.mono * m, t.first.comp}; };
    while (i != f.end() && j != g.end()) {
      ModuleTerm a = shifted(*i, mf), b = shifted(*j, mg);
      if (order_.greater(a, b)) {
        out.emplace_back(a, i->second);
        ++i;
      } else if (order_.greater(b, a)) {
        out.emplace_back(b, -j->second);
        ++j;
      } else {
        Rational c = i->second - j->second;
        if (c != 0) out.emplace_back(a, std::move(c));
        ++i;
        ++j;
      }
    }
    for (; i != f.end(); ++i) out.emplace_back(shifted(*i, mf), i->second);
    for (; j != g.end(); ++j) out.emplace_back(shifted(*j, mg), -j->second);
    return out;
  }

  std::vector<Vec> reduce() const {
    std::vector<const Vec*> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const ModuleTerm& li = basis_[i]->front().first;
      bool redundant = false;
      for (std::size_t k = 0; k < basis_.size() && !redundant; ++k) {
        if (k == i) continue;
        const ModuleTerm& lk = basis_[k]->front().first;
        if (lk.comp != li.comp || !lk.mono.divides(li.mono)) continue;
        // Equal leads: keep the earliest.
        redundant = !(lk.mono == li.mono) || k < i;
      }
      if (!redundant) minimal.push_back(basis_[i].get());
    }
    std::vector<Vec> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Reducer others(order_);
      for (std::size_t k = 0; k < minimal.size(); ++k)
        if (k != i) others.add(minimal[k]);
      Vec tail(minimal[i]->begin() + 1, minimal[i]->end());
      Vec v;
      v.push_back(minimal[i]->front());
      Vec t = others.normalForm(tail);
      v.insert(v.end(), t.begin(), t.end());
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(),
              [&](const Vec& a, const Vec& b) { return order_.greater(b.front().first, a.front().first); });
    return out;
  }

  const ModuleOrder& order_;
  Reducer reducer_;
  std::vector<std::unique_ptr<Vec>> basis_;
  std::set<Pair, PairLess> pairs_{PairLess{&order_}};
  std::map<std::uint64_t, bool> pending_;
  std::multimap<int, std::size_t> inputs_;
  std::vector<Vec> pendingInputs_;
};

}  // namespace detail

/// Multivariate division remainder of p by `basis` under `order`.
inline Polynomial normalForm(const Polynomial& p, std::span<const Polynomial> basis,
                             const MonomialOrder& order = MonomialOrder::degRevLex()) {
  ModuleOrder mo = ModuleOrder::forIdeals(order);
  std::vector<detail::Vec> vecs;
  vecs.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.ambient() != p.ambient()) throw AmbientMismatch();
    if (!g.isZero()) vecs.push_back(detail::toVec(g, mo));
  }
  detail::Reducer r(mo);
  for (const auto& v : vecs) r.add(&v);
  return detail::toPolynomial(r.normalForm(detail::toVec(p, mo)), p.ambient());
}

/// Reduced Groebner basis (monic, autoreduced), sorted ascending by lead term.
inline std::vector<Polynomial> reducedGroebnerBasis(std::span<const Polynomial> generators,
                                                    const MonomialOrder& order = MonomialOrder::degRevLex()) {
  if (generators.empty()) return {};
  std::size_t ambient = generators.front().ambient();
  ModuleOrder mo = ModuleOrder::forIdeals(order);
  std::vector<detail::Vec> input;
  for (const auto& g : generators) {
    if (g.ambient() != ambient) throw AmbientMismatch();
    input.push_back(detail::toVec(g, mo));
  }
  detail::Buchberger engine(mo);
  std::vector<Polynomial> out;
  for (const auto& v : engine.run(std::move(input))) out.push_back(detail::toPolynomial(v, ambient));
  return out;
}

}  // namespace fatpt
