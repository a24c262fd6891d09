#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fatpt/ideal.hpp"
#include "fatpt/linalg.hpp"
#include "fatpt/module.hpp"

namespace fatpt {

/// Rational generating function numerator(t) / (1-t)^dimension with integer
/// coefficients. reduced() cancels common factors (1-t).
struct HilbertSeries {
  std::vector<long long> numerator;
  unsigned dimension = 0;

  bool isZero() const {
    return std::all_of(numerator.begin(), numerator.end(), [](long long c) { return c == 0; });
  }

  HilbertSeries reduced() const {
    HilbertSeries s = *this;
    s.trim();
    while (s.dimension > 0 && !s.isZero() && s.evaluateAtOne() == 0) {
      // Synthetic division by (1 - t): q_i = sum_{j <= i} a_j.
      std::vector<long long> q(s.numerator.size() - 1);
      long long acc = 0;
      for (std::size_t i = 0; i + 1 < s.numerator.size(); ++i) q[i] = acc += s.numerator[i];
      s.numerator = std::move(q);
      --s.dimension;
      s.trim();
    }
    if (s.isZero()) {
      s.numerator.clear();
      s.dimension = 0;
    }
    return s;
  }

  /// Multiplication by t^k.
  HilbertSeries shifted(unsigned k) const {
    HilbertSeries s = *this;
    s.numerator.insert(s.numerator.begin(), k, 0);
    return s;
  }

  HilbertSeries scaled(long long c) const {
    HilbertSeries s = *this;
    for (auto& a : s.numerator) a *= c;
    return s;
  }

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
    unsigned d = std::max(a.dimension, b.dimension);
    auto na = a.lifted(d), nb = b.lifted(d);
    if (na.size() < nb.size()) na.resize(nb.size(), 0);
    for (std::size_t i = 0; i < nb.size(); ++i) na[i] += nb[i];
    return HilbertSeries{std::move(na), d}.reduced();
  }

  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) { return a + b.scaled(-1); }

  long long evaluateAtOne() const {
    long long s = 0;
    for (long long c : numerator) s += c;
    return s;
  }

  /// Coefficient of t^d in the expansion.
  long long coefficient(long d) const {
    if (d < 0) return 0;
    long long v = 0;
    for (std::size_t k = 0; k < numerator.size() && static_cast<long>(k) <= d; ++k) {
      if (numerator[k] == 0) continue;
      v += numerator[k] * (dimension == 0 ? (static_cast<long>(k) == d ? 1 : 0)
                                          : binom(d - static_cast<long>(k) + dimension - 1, dimension - 1));
    }
    return v;
  }

  /// Value at d of the polynomial that eventually agrees with the coefficients.
  long long polynomialAt(long d) const {
    if (dimension == 0) return 0;
    long long v = 0;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
      if (numerator[k] == 0) continue;
      // C(x + r, r) = (x+1)...(x+r)/r! as a polynomial in x = d - k.
      long x = d - static_cast<long>(k);
      long r = dimension - 1;
      Integer num = 1, den = 1;
      for (long i = 1; i <= r; ++i) {
        num *= x + i;
        den *= i;
      }
      v += numerator[k] * Integer(num / den).get_si();
    }
    return v;
  }

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    auto ra = a.reduced(), rb = b.reduced();
    return ra.numerator == rb.numerator && ra.dimension == rb.dimension;
  }

 private:
  void trim() {
    while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
  }

  /// Numerator over (1-t)^d for d >= dimension.
  std::vector<long long> lifted(unsigned d) const {
    std::vector<long long> n = numerator;
    for (unsigned i = dimension; i < d; ++i) {
      std::vector<long long> m(n.size() + 1, 0);
      for (std::size_t k = 0; k < n.size(); ++k) {
        m[k] += n[k];
        m[k + 1] -= n[k];
      }
      n = std::move(m);
    }
    return n;
  }
};

namespace detail {

inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

inline std::vector<long long> polyMul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline void polyAddInto(std::vector<long long>& a, const std::vector<long long>& b, unsigned shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

/// Numerator of the Hilbert series of S/<gens> over (1-t)^v. Pivots on the
/// variable occurring in the most generators, with power equal to its
/// smallest positive exponent; pairwise coprime generators are the base case.
inline std::vector<long long> seriesNumerator(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens.front().degree() == 0) return {0};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  if (coprime) {
    std::vector<long long> r{1};
    for (const auto& g : gens) {
      std::vector<long long> f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      r = polyMul(r, f);
    }
    return r;
  }
  std::size_t v = gens.front().variables();
  std::size_t best = 0;
  int bestCount = -1;
  for (std::size_t i = 0; i < v; ++i) {
    int c = 0;
    for (const auto& g : gens) c += g[i] > 0;
    if (c > bestCount) {
      bestCount = c;
      best = i;
    }
  }
  unsigned e = 0;
  for (const auto& g : gens)
    if (g[best] > 0 && (e == 0 || g[best] < e)) e = g[best];
  Monomial pivot = Monomial::variable(v, best, e);

  std::vector<Monomial> plus;
  for (const auto& g : gens)
    if (!pivot.divides(g)) plus.push_back(g);
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial h = g;
    h.set(best, g[best] > e ? g[best] - e : 0);
    colon.push_back(h);
  }
  std::vector<long long> r = seriesNumerator(std::move(plus));
  polyAddInto(r, seriesNumerator(std::move(colon)), e);
  return r;
}

}  // namespace detail

/// Hilbert series of S/<lt> for a monomial ideal in `variables` variables.
inline HilbertSeries hilbertSeriesOfMonomialIdeal(std::vector<Monomial> lt, std::size_t variables) {
  return HilbertSeries{detail::seriesNumerator(std::move(lt)), static_cast<unsigned>(variables)};
}

/// Unreduced numerator of HS_{S/LT}(t) over (1-t)^(n+1).
inline std::vector<long long> hilbertSeriesNumerator(std::vector<Monomial> lt) {
  return detail::seriesNumerator(std::move(lt));
}

/// Hilbert function of a graded module. Certified values come from a Hilbert
/// series and are exact in every degree; uncertified ones come from a finite
/// per-degree scan and only know the scanned degrees.
class HilbertFunction {
 public:
  static HilbertFunction fromSeries(const HilbertSeries& series) {
    HilbertFunction hf;
    hf.series_ = series.reduced();
    hf.certified_ = true;
    const HilbertSeries& s = *hf.series_;
    if (s.dimension <= 1) hf.stableValue_ = s.dimension == 0 ? 0 : s.evaluateAtOne();
    // HF and HP agree from deg(numerator) - dimension + 1 on; walk down.
    long top = static_cast<long>(s.numerator.size()) - static_cast<long>(s.dimension);
    long ri = std::max(top, 0L);
    while (ri > 0 && s.coefficient(ri - 1) == s.polynomialAt(ri - 1)) --ri;
    hf.stableFrom_ = ri;
    for (long d = 0; d <= ri + 2; ++d) hf.values_.push_back(s.coefficient(d));
    return hf;
  }

  /// Values for degrees 0..values.size()-1; stabilization is only a guess.
  static HilbertFunction fromValues(std::vector<long long> values) {
    HilbertFunction hf;
    hf.values_ = std::move(values);
    hf.certified_ = false;
    long i = static_cast<long>(hf.values_.size());
    while (i > 0 && hf.values_[i - 1] == hf.values_.back()) --i;
    hf.stableFrom_ = hf.values_.empty() ? 0 : i;
    if (!hf.values_.empty()) hf.stableValue_ = hf.values_.back();
    return hf;
  }

  bool certified() const { return certified_; }
  long stableFrom() const { return stableFrom_; }
  std::optional<long long> stableValue() const { return stableValue_; }
  const std::optional<HilbertSeries>& series() const { return series_; }

  /// Number of degrees an uncertified function knows about.
  long knownDegrees() const { return certified_ ? std::numeric_limits<long>::max() : static_cast<long>(values_.size()); }

  long long operator()(long d) const {
    if (d < 0) return 0;
    if (d < static_cast<long>(values_.size())) return values_[d];
    if (series_) return series_->coefficient(d);
    throw Error("degree " + std::to_string(d) + " lies outside the scanned range");
  }

  /// Hilbert polynomial evaluated at d (certified functions only).
  long long polynomialAt(long d) const {
    if (!series_) throw Error("Hilbert polynomial needs a certified Hilbert function");
    return series_->polynomialAt(d);
  }

  std::vector<long long> values(long upTo) const {
    std::vector<long long> v;
    for (long d = 0; d <= upTo; ++d) v.push_back((*this)(d));
    return v;
  }

  friend HilbertFunction operator+(const HilbertFunction& a, const HilbertFunction& b) {
    return fromSeries(a.requireSeries() + b.requireSeries());
  }
  friend HilbertFunction operator-(const HilbertFunction& a, const HilbertFunction& b) {
    return fromSeries(a.requireSeries() - b.requireSeries());
  }
  HilbertFunction shifted(unsigned k) const { return fromSeries(requireSeries().shifted(k)); }
  HilbertFunction scaled(long long c) const { return fromSeries(requireSeries().scaled(c)); }

 private:
  const HilbertSeries& requireSeries() const {
    if (!series_) throw Error("operation needs a certified Hilbert function");
    return *series_;
  }

  std::vector<long long> values_;
  long stableFrom_ = 0;
  std::optional<long long> stableValue_;
  bool certified_ = false;
  std::optional<HilbertSeries> series_;
};

/// Least degree from which HF agrees with its Hilbert polynomial (never
/// below 0). Uncertified functions are rejected.
inline long regularityIndex(const HilbertFunction& hf) {
  if (!hf.certified()) throw Error("regularity index requires a certified Hilbert function");
  return hf.stableFrom();
}

/// `v_0 v_1 ... v_{r+1} ...` where r is the stabilization degree.
inline std::string formatHilbertFunction(const HilbertFunction& hf) {
  std::ostringstream os;
  for (long d = 0; d <= hf.stableFrom() + 1; ++d) os << hf(d) << ' ';
  os << "...";
  return os.str();
}

/// HF of S/I from the leading-term ideal of the reduced Groebner basis.
inline HilbertFunction hilbertFunction(const Ideal& I) {
  return HilbertFunction::fromSeries(hilbertSeriesOfMonomialIdeal(I.leadingMonomials(), I.ambient()));
}

/// HF of S/I by row reduction of the generators' multiples, degrees 0..maxDegree.
inline HilbertFunction hilbertFunctionByRank(const Ideal& I, unsigned maxDegree) {
  std::vector<long long> v;
  long n = static_cast<long>(I.ambient());
  for (unsigned d = 0; d <= maxDegree; ++d)
    v.push_back(binom(d + n - 1, n - 1) - spanDimension(I.generators(), d));
  return HilbertFunction::fromValues(std::move(v));
}

inline void checkModuleShape(std::size_t rank, std::span<const int> shifts, const Submodule& relations) {
  if (rank != shifts.size() || relations.rank() != rank ||
      !std::equal(shifts.begin(), shifts.end(), relations.shifts().begin()))
    throw Error("rank and shifts do not match the relation module");
}

/// HF of F/M for F = ⊕ S(-shift_j), from the leading terms of M's reduced
/// Groebner basis, one monomial ideal per component.
inline HilbertFunction moduleHilbertFunction(std::size_t rank, std::span<const int> shifts,
                                             const Submodule& relations) {
  checkModuleShape(rank, shifts, relations);
  auto lts = relations.leadingMonomials();
  HilbertSeries total{{}, static_cast<unsigned>(relations.ambient())};
  for (std::size_t j = 0; j < rank; ++j) {
    HilbertSeries s = hilbertSeriesOfMonomialIdeal(lts[j], relations.ambient());
    if (shifts[j] < 0) throw Error("negative generator degrees are not supported");
    total = total + s.shifted(static_cast<unsigned>(shifts[j]));
  }
  return HilbertFunction::fromSeries(total);
}

namespace detail {

struct PotGreater {
  bool operator()(const ModuleTerm& a, const ModuleTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp;
    return MonomialOrder::degRevLex().greater(a.mono, b.mono);
  }
};

using ModuleEchelon = EchelonBasis<ModuleTerm, PotGreater>;

inline ModuleEchelon::Row toRow(const FreeModuleElement& e, const Monomial& m) {
  ModuleEchelon::Row row;
  for (std::uint32_t j = 0; j < e.rank(); ++j)
    for (const auto& [mono, c] : e[j].terms()) row.emplace_back(ModuleTerm{mono * m, j}, c);
  return row;
}

}  // namespace detail

/// dim_K of the degree-d piece of the submodule spanned by `gens`.
inline long long moduleSpanDimension(std::span<const FreeModuleElement> gens, int d) {
  detail::ModuleEchelon ech;
  for (const auto& g : gens) {
    if (g.isZero() || g.degree() > d) continue;
    for (const auto& m : monomialsOfDegree(g.ambient(), static_cast<unsigned>(d - g.degree())))
      ech.insert(detail::toRow(g, m));
  }
  return static_cast<long long>(ech.rank());
}

/// Cross-check path for moduleHilbertFunction: per-degree exact row reduction
/// of the relation span, degrees 0..maxDegree. Not certified.
inline HilbertFunction moduleHilbertFunctionByRank(std::size_t rank, std::span<const int> shifts,
                                                   const Submodule& relations, unsigned maxDegree) {
  checkModuleShape(rank, shifts, relations);
  long n = static_cast<long>(relations.ambient());
  std::vector<long long> v;
  for (unsigned d = 0; d <= maxDegree; ++d) {
    long long free = 0;
    for (int s : shifts) free += binom(static_cast<long>(d) - s + n - 1, n - 1);
    v.push_back(free - moduleSpanDimension(relations.generators(), static_cast<int>(d)));
  }
  return HilbertFunction::fromValues(std::move(v));
}

}  // namespace fatpt
