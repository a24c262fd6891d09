#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fatpt/groebner.hpp"

namespace fatpt {

/// Element of the graded free module S(-shift_0) + ... + S(-shift_{r-1}).
class FreeModuleElement {
 public:
  FreeModuleElement(std::vector<Polynomial> components, std::vector<int> shifts)
      : components_(std::move(components)), shifts_(std::move(shifts)) {
    if (components_.size() != shifts_.size()) throw Error("component count differs from the number of shifts");
    if (components_.empty()) throw Error("free module of rank zero");
    for (const auto& c : components_)
      if (c.ambient() != components_.front().ambient()) throw AmbientMismatch();
  }

  std::size_t rank() const { return components_.size(); }
  std::size_t ambient() const { return components_.front().ambient(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<int>& shifts() const { return shifts_; }

  bool isZero() const {
    for (const auto& c : components_)
      if (!c.isZero()) return false;
    return true;
  }

  /// True iff deg(component_j) + shift_j is the same over nonzero components
  /// and every component is itself homogeneous.
  bool isHomogeneous() const {
    std::optional<int> d;
    for (std::size_t j = 0; j < components_.size(); ++j) {
      const auto& c = components_[j];
      if (c.isZero()) continue;
      if (!c.isHomogeneous()) return false;
      int dj = static_cast<int>(c.degree()) + shifts_[j];
      if (d && *d != dj) return false;
      d = dj;
    }
    return true;
  }

  /// Degree in the shifted grading; meaningless for the zero element.
  int degree() const {
    for (std::size_t j = 0; j < components_.size(); ++j)
      if (!components_[j].isZero()) return static_cast<int>(components_[j].degree()) + shifts_[j];
    return 0;
  }

  friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
    return a.components_ == b.components_ && a.shifts_ == b.shifts_;
  }

 private:
  std::vector<Polynomial> components_;
  std::vector<int> shifts_;
};

namespace detail {

inline Vec toVec(const FreeModuleElement& e, const ModuleOrder& order) {
  Vec v;
  for (std::uint32_t j = 0; j < e.rank(); ++j) {
    Vec c = toVec(e[j], order, j);
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

inline FreeModuleElement toElement(const Vec& v, std::size_t ambient, const std::vector<int>& shifts) {
  std::vector<std::vector<Polynomial::Term>> parts(shifts.size());
  for (const auto& [t, c] : v) parts[t.comp].emplace_back(t.mono, c);
  std::vector<Polynomial> comps;
  for (auto& p : parts) comps.push_back(Polynomial::fromTerms(ambient, std::move(p)));
  return FreeModuleElement(std::move(comps), shifts);
}

}  // namespace detail

/// Homogeneous submodule of a graded free module, given by generators. The
/// reduced Groebner basis (position over degrevlex) is computed on first use
/// and shared between copies.
class Submodule {
 public:
  Submodule(std::size_t ambient, std::vector<int> shifts, std::vector<FreeModuleElement> generators)
      : ambient_(ambient), shifts_(std::move(shifts)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (g.shifts() != shifts_ || g.ambient() != ambient_) throw Error("generator does not live in the free module");
      if (!g.isHomogeneous()) throw Error("submodule generators must be homogeneous");
      if (!g.isZero()) generators_.push_back(std::move(g));
    }
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<int>& shifts() const { return shifts_; }
  const std::vector<FreeModuleElement>& generators() const { return generators_; }

  ModuleOrder order() const { return ModuleOrder(MonomialOrder::degRevLex(), shifts_); }

  const std::vector<FreeModuleElement>& groebnerBasis() const {
    std::call_once(cache_->once, [&] {
      ModuleOrder mo = order();
      std::vector<detail::Vec> input;
      for (const auto& g : generators_) input.push_back(detail::toVec(g, mo));
      detail::Buchberger engine(mo);
      for (const auto& v : engine.run(std::move(input)))
        cache_->gb.push_back(detail::toElement(v, ambient_, shifts_));
    });
    return cache_->gb;
  }

  /// Leading monomials of the Groebner basis grouped by component.
  std::vector<std::vector<Monomial>> leadingMonomials() const {
    std::vector<std::vector<Monomial>> out(rank());
    ModuleOrder mo = order();
    for (const auto& g : groebnerBasis()) {
      detail::Vec v = detail::toVec(g, mo);
      out[v.front().first.comp].push_back(v.front().first.mono);
    }
    return out;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<FreeModuleElement> gb;
  };

  std::size_t ambient_;
  std::vector<int> shifts_;
  std::vector<FreeModuleElement> generators_;
  std::shared_ptr<Cache> cache_;
};

inline const std::vector<FreeModuleElement>& moduleGroebnerBasis(const Submodule& m) { return m.groebnerBasis(); }

}  // namespace fatpt
