#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fatpt/hilbert.hpp"
#include "fatpt/scheme.hpp"

namespace fatpt {

/// ∂I: generated by the partials of the given generators. The unit ideal is
/// its own Jacobian ideal (by convention; a constant has no partials).
inline Ideal jacobianIdeal(const Ideal& I) {
  if (I.isZero()) throw Error("Jacobian ideal of the zero ideal");
  std::size_t v = I.ambient();
  if (I.isUnit()) return Ideal::unit(v);
  std::vector<Polynomial> gens;
  for (const auto& F : I.generators())
    for (std::size_t i = 0; i < v; ++i) gens.push_back(partialDerivative(F, i));
  Ideal J(v, std::move(gens));
  // Euler: deg(F) * F = Σ X_i ∂F/∂X_i.
  if (!J.contains(I)) throw Error("Euler containment I ⊆ ∂I failed");
  return J;
}

/// Strictly increasing k-subsets of {0..v-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> indexSubsets(std::size_t v, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > v) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == v - k + i - 1) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

/// Ω^k_{S/K} / (I Ω^k + dI ∧ Ω^{k-1}): free module on dX_T, |T| = k, every
/// basis element in degree k.
struct KaehlerPresentation {
  std::size_t k = 0;
  std::size_t ambient = 0;
  std::vector<std::vector<std::size_t>> basis;
  std::vector<int> shifts;
  /// All generators as built, zero ones included.
  std::vector<FreeModuleElement> relationGenerators;
  Submodule relations;

  std::size_t rank() const { return basis.size(); }
};

inline KaehlerPresentation kaehlerPresentation(const Ideal& I, std::size_t k) {
  std::size_t v = I.ambient();
  if (k < 1 || k > v) throw Error("form degree k must lie in 1.." + std::to_string(v));
  auto basis = indexSubsets(v, k);
  auto lower = indexSubsets(v, k - 1);
  std::vector<int> shifts(basis.size(), static_cast<int>(k));
  auto position = [&](const std::vector<std::size_t>& T) {
    return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), T) - basis.begin());
  };
  auto zeroComponents = [&] { return std::vector<Polynomial>(basis.size(), Polynomial::constant(v, 0)); };

  std::vector<FreeModuleElement> rels;
  for (const auto& F : I.generators()) {
    for (std::size_t t = 0; t < basis.size(); ++t) {
      auto c = zeroComponents();
      c[t] = F;
      rels.emplace_back(std::move(c), shifts);
    }
    for (const auto& U : lower) {
      // dF ∧ dX_U = Σ_i ∂F/∂X_i dX_i ∧ dX_U; moving dX_i into place past the
      // smaller indices of U costs one sign each.
      auto c = zeroComponents();
      for (std::size_t i = 0; i < v; ++i) {
        if (std::find(U.begin(), U.end(), i) != U.end()) continue;
        std::vector<std::size_t> T = U;
        auto at = std::lower_bound(T.begin(), T.end(), i);
        std::size_t before = static_cast<std::size_t>(at - T.begin());
        T.insert(at, i);
        Polynomial d = partialDerivative(F, i);
        c[position(T)] = c[position(T)] + (before % 2 ? d * Rational(-1) : d);
      }
      rels.emplace_back(std::move(c), shifts);
    }
  }
  Submodule sub(v, shifts, rels);
  return KaehlerPresentation{k, v, std::move(basis), std::move(shifts), std::move(rels), std::move(sub)};
}

inline KaehlerPresentation kaehlerPresentation(const FatPointScheme& W, std::size_t k) {
  if (k < 1 || k > W.dimension() + 1) throw Error("form degree k must lie in 1.." + std::to_string(W.dimension() + 1));
  return kaehlerPresentation(W.ideal(), k);
}

inline std::string toString(const KaehlerPresentation& p) {
  std::ostringstream os;
  os << "rank " << p.rank() << " shifts";
  for (int s : p.shifts) os << ' ' << s;
  os << "\nbasis";
  for (const auto& T : p.basis) {
    os << ' ';
    for (std::size_t i : T) os << "dX" << i;
  }
  os << '\n';
  for (const auto& r : p.relationGenerators) {
    os << '(';
    for (std::size_t j = 0; j < r.rank(); ++j) os << (j ? ", " : "") << toString(r[j]);
    os << ")\n";
  }
  return os.str();
}

/// Certified HF of Ω^k_{R_W/K} from the module Groebner basis of the presentation.
inline HilbertFunction kaehlerHilbertFunction(const FatPointScheme& W, std::size_t k) {
  KaehlerPresentation p = kaehlerPresentation(W, k);
  return moduleHilbertFunction(p.rank(), p.shifts, p.relations);
}

/// Ω^{n+1}_{R_W/K} ≅ (S/∂I_W)(-n-1).
inline HilbertFunction topFormHilbertFunction(const FatPointScheme& W) {
  return hilbertFunction(jacobianIdeal(W.ideal())).shifted(static_cast<unsigned>(W.dimension() + 1));
}

/// The same HF recomputed degree by degree by exact row reduction, up to maxDegree.
inline HilbertFunction kaehlerHilbertFunctionByRank(const FatPointScheme& W, std::size_t k, unsigned maxDegree) {
  KaehlerPresentation p = kaehlerPresentation(W, k);
  return moduleHilbertFunctionByRank(p.rank(), p.shifts, p.relations, maxDegree);
}

/// min{max{r_W + k, r_V + k - 1}, max{r_W + n, r_V + n - 1}} with V = W^(1).
inline long kaehlerRiBound(const FatPointScheme& W, std::size_t k) {
  long rW = regularityIndex(hilbertFunction(W.ideal()));
  long rV = regularityIndex(hilbertFunction(fattening(W, 1).ideal()));
  long kk = static_cast<long>(k), n = static_cast<long>(W.dimension());
  return std::min(std::max(rW + kk, rV + kk - 1), std::max(rW + n, rV + n - 1));
}

inline long long kaehlerHP(const FatPointScheme& W, std::size_t k) {
  return *kaehlerHilbertFunction(W, k).stableValue();
}

/// Exact regularity index; throws if it exceeds the known upper bound.
inline long kaehlerRi(const FatPointScheme& W, std::size_t k) {
  long ri = regularityIndex(kaehlerHilbertFunction(W, k));
  long bound = kaehlerRiBound(W, k);
  if (ri > bound)
    throw Error("regularity index " + std::to_string(ri) + " exceeds the bound " + std::to_string(bound));
  return ri;
}

}  // namespace fatpt
