#pragma once

#include <algorithm>
#include <istream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "fatpt/hilbert.hpp"
#include "fatpt/ideal.hpp"

namespace fatpt {

/// K-rational point of P^n, scaled so that its first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw Error("a projective point needs at least two coordinates");
    auto it = std::find_if(coords_.begin(), coords_.end(), [](const Rational& c) { return c != 0; });
    if (it == coords_.end()) throw Error("all coordinates of a projective point are zero");
    pivot_ = static_cast<std::size_t>(it - coords_.begin());
    Rational inv = 1 / coords_[pivot_];
    for (auto& c : coords_) c *= inv;
  }

  ProjectivePoint(std::initializer_list<long> coords)
      : ProjectivePoint(std::vector<Rational>(coords.begin(), coords.end())) {}

  std::size_t ambient() const { return coords_.size(); }
  std::size_t dimension() const { return coords_.size() - 1; }
  std::size_t pivot() const { return pivot_; }
  const std::vector<Rational>& coordinates() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rational> coords_;
  std::size_t pivot_ = 0;
};

inline std::string toString(const ProjectivePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.ambient(); ++i) {
    if (i) s += ':';
    s += p[i].get_str();
  }
  return s + ")";
}

/// The n linear forms X_j - a_j X_p (j != p, p the pivot) cutting out P.
inline Ideal pointVanishingIdeal(const ProjectivePoint& P) {
  std::size_t v = P.ambient();
  std::size_t p = P.pivot();
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < v; ++j) {
    if (j == p) continue;
    gens.push_back(Polynomial::variable(v, j) - Polynomial::variable(v, p) * P[j]);
  }
  return Ideal(v, std::move(gens));
}

/// W = m_1 P_1 + ... + m_s P_s in P^n. The vanishing ideal is computed on
/// first request and shared between copies.
class FatPointScheme {
 public:
  explicit FatPointScheme(std::size_t n) : n_(n), cache_(std::make_shared<Cache>()) {
    if (n == 0) throw Error("ambient projective space must have dimension >= 1");
    if (n + 2 > Monomial::kMaxVariables) throw Error("ambient dimension too large");
  }

  FatPointScheme(std::size_t n, std::vector<ProjectivePoint> points, std::vector<unsigned> multiplicities)
      : FatPointScheme(n) {
    if (points.size() != multiplicities.size()) throw Error("points and multiplicities differ in length");
    for (std::size_t i = 0; i < points.size(); ++i) add(std::move(points[i]), multiplicities[i]);
  }

  std::size_t dimension() const { return n_; }
  std::size_t ambient() const { return n_ + 1; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const std::vector<unsigned>& multiplicities() const { return mults_; }

  /// Vanishing ideal ∩ I_{P_i}^{m_i}; the unit ideal for the empty scheme.
  const Ideal& ideal() const {
    std::call_once(cache_->once, [&] { cache_->ideal = std::make_unique<Ideal>(computeIdeal()); });
    return *cache_->ideal;
  }

  friend bool operator==(const FatPointScheme& a, const FatPointScheme& b) {
    return a.n_ == b.n_ && a.points_ == b.points_ && a.mults_ == b.mults_;
  }

 private:
  void add(ProjectivePoint p, unsigned m) {
    if (p.dimension() != n_) throw Error("point " + toString(p) + " does not lie in P^" + std::to_string(n_));
    if (m == 0) throw Error("multiplicities must be positive");
    if (std::find(points_.begin(), points_.end(), p) != points_.end())
      throw Error("point " + toString(p) + " listed twice");
    points_.push_back(std::move(p));
    mults_.push_back(m);
  }

  Ideal computeIdeal() const {
    if (points_.empty()) return Ideal::unit(ambient());
    // Intersect the larger powers first: their ideals are the expensive ones.
    std::vector<std::size_t> idx(points_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return mults_[a] > mults_[b]; });
    std::optional<Ideal> acc;
    for (std::size_t i : idx) {
      Ideal q = idealPower(pointVanishingIdeal(points_[i]), mults_[i]);
      acc = acc ? idealIntersection(*acc, q) : q;
    }
    return *acc;
  }

  struct Cache {
    std::once_flag once;
    std::unique_ptr<Ideal> ideal;
  };

  std::size_t n_;
  std::vector<ProjectivePoint> points_;
  std::vector<unsigned> mults_;
  std::shared_ptr<Cache> cache_;
};

inline const Ideal& fatSchemeIdeal(const FatPointScheme& W) { return W.ideal(); }

/// deg(W) = Σ C(m_i + n - 1, n).
inline long long schemeDegree(const FatPointScheme& W) {
  long long d = 0;
  long n = static_cast<long>(W.dimension());
  for (unsigned m : W.multiplicities()) d += binom(m + n - 1, n);
  return d;
}

/// Every multiplicity shifted by `delta`; points reaching zero are dropped.
inline FatPointScheme shiftMultiplicities(const FatPointScheme& W, int delta) {
  std::vector<ProjectivePoint> pts;
  std::vector<unsigned> ms;
  for (std::size_t i = 0; i < W.size(); ++i) {
    int m = static_cast<int>(W.multiplicities()[i]) + delta;
    if (m <= 0) continue;
    pts.push_back(W.points()[i]);
    ms.push_back(static_cast<unsigned>(m));
  }
  return FatPointScheme(W.dimension(), std::move(pts), std::move(ms));
}

inline FatPointScheme slimming(const FatPointScheme& W) { return shiftMultiplicities(W, -1); }

inline FatPointScheme fattening(const FatPointScheme& W, unsigned j) {
  if (j == 0) throw Error("fattening order must be at least 1");
  return shiftMultiplicities(W, static_cast<int>(j));
}

/// Supp(W) with all multiplicities 1.
inline FatPointScheme support(const FatPointScheme& W) {
  return FatPointScheme(W.dimension(), W.points(), std::vector<unsigned>(W.size(), 1));
}

/// W_j: the multiplicity of point j (0-based) lowered by one.
inline FatPointScheme lowerMultiplicityAt(const FatPointScheme& W, std::size_t j) {
  if (j >= W.size()) throw Error("point index out of range");
  std::vector<ProjectivePoint> pts;
  std::vector<unsigned> ms;
  for (std::size_t i = 0; i < W.size(); ++i) {
    unsigned m = W.multiplicities()[i] - (i == j ? 1 : 0);
    if (m == 0) continue;
    pts.push_back(W.points()[i]);
    ms.push_back(m);
  }
  return FatPointScheme(W.dimension(), std::move(pts), std::move(ms));
}

/// A minimal set of separators of W_j in W (j is 0-based), of size
/// deg(W) - deg(W_j), sorted by degree: chosen greedily from the lowest
/// degree on, each new F lying in (I_{W_j})_d but outside the ideal
/// generated so far.
inline std::vector<Polynomial> separators(const FatPointScheme& W, std::size_t j) {
  FatPointScheme Wj = lowerMultiplicityAt(W, j);
  const Ideal& big = Wj.ideal();
  const Ideal& small = W.ideal();
  long long needed = schemeDegree(W) - schemeDegree(Wj);
  std::vector<Polynomial> seps;
  std::vector<Polynomial> gens = small.generators();
  Ideal current = small;
  for (unsigned d = 0; static_cast<long long>(seps.size()) < needed; ++d) {
    if (d > 1000) throw Error("separator search did not terminate");
    for (const auto& f : gradedPiece(big, d)) {
      if (static_cast<long long>(seps.size()) == needed) break;
      if (current.contains(f)) continue;
      Polynomial F = normalForm(f, current.groebnerBasis()).monic();
      seps.push_back(F);
      gens.push_back(F);
      current = Ideal(W.ambient(), gens);
    }
  }
  return seps;
}

class SchemeFormatError : public Error {
 public:
  SchemeFormatError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads `n <dim>` followed by `point <c0> ... <cn> mult <m>` lines. `#`
/// starts a comment.
inline FatPointScheme parseScheme(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<ProjectivePoint> pts;
  std::vector<unsigned> ms;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "n") {
      if (n) throw SchemeFormatError("duplicate 'n' line", lineNo);
      if (tok.size() != 2) throw SchemeFormatError("expected 'n <dimension>'", lineNo);
      Rational v;
      if (!parseRational(tok[1], v) || v.get_den() != 1 || v < 1 || v > 6)
        throw SchemeFormatError("bad ambient dimension '" + tok[1] + "'", lineNo);
      n = static_cast<std::size_t>(v.get_num().get_ui());
    } else if (tok[0] == "point") {
      if (!n) throw SchemeFormatError("'point' before 'n'", lineNo);
      if (tok.size() != *n + 4 || tok[*n + 2] != "mult")
        throw SchemeFormatError("expected 'point' with " + std::to_string(*n + 1) + " coordinates and 'mult <m>'",
                                lineNo);
      std::vector<Rational> coords;
      for (std::size_t i = 1; i <= *n + 1; ++i) {
        Rational c;
        if (!parseRational(tok[i], c)) throw SchemeFormatError("bad coordinate '" + tok[i] + "'", lineNo);
        coords.push_back(c);
      }
      Rational m;
      if (!parseRational(tok[*n + 3], m) || m.get_den() != 1 || m < 1 || m > 1000)
        throw SchemeFormatError("bad multiplicity '" + tok[*n + 3] + "'", lineNo);
      try {
        pts.emplace_back(std::move(coords));
      } catch (const Error& e) {
        throw SchemeFormatError(e.what(), lineNo);
      }
      ms.push_back(static_cast<unsigned>(m.get_num().get_ui()));
    } else {
      throw SchemeFormatError("unknown keyword '" + tok[0] + "'", lineNo);
    }
  }
  if (!n) throw SchemeFormatError("missing 'n' line", lineNo);
  try {
    return FatPointScheme(*n, std::move(pts), std::move(ms));
  } catch (const SchemeFormatError&) {
    throw;
  } catch (const Error& e) {
    throw SchemeFormatError(e.what(), lineNo);
  }
}

inline FatPointScheme parseScheme(const std::string& text) {
  std::istringstream in(text);
  return parseScheme(in);
}

inline std::string formatScheme(const FatPointScheme& W) {
  std::string s = "n " + std::to_string(W.dimension()) + "\n";
  for (std::size_t i = 0; i < W.size(); ++i) {
    s += "point";
    for (const auto& c : W.points()[i].coordinates()) s += ' ' + c.get_str();
    s += " mult " + std::to_string(W.multiplicities()[i]) + "\n";
  }
  return s;
}

/// Short human-readable form, e.g. `2(1:0:0) + (1:1:1)`.
inline std::string describe(const FatPointScheme& W) {
  if (W.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < W.size(); ++i) {
    if (i) s += " + ";
    if (W.multiplicities()[i] != 1) s += std::to_string(W.multiplicities()[i]);
    s += toString(W.points()[i]);
  }
  return s;
}

}  // namespace fatpt
