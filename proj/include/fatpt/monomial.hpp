#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>

#include "fatpt/rational.hpp"

namespace fatpt {

/// Power product X_0^e_0 ... X_{v-1}^e_{v-1} over a fixed number of variables.
/// Exponents live inline; at most kMaxVariables variables are supported, which
/// covers P^n for n <= 6 plus one auxiliary elimination variable.
class Monomial {
 public:
  static constexpr std::size_t kMaxVariables = 8;

  Monomial() = default;

  explicit Monomial(std::size_t variables) : nvars_(static_cast<std::uint8_t>(variables)) {
    if (variables > kMaxVariables) throw Error("too many variables for Monomial");
  }

  Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  static Monomial variable(std::size_t variables, std::size_t index, unsigned power = 1) {
    Monomial m(variables);
    m.set(index, power);
    return m;
  }

  std::size_t variables() const { return nvars_; }
  unsigned degree() const { return deg_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }

  void set(std::size_t i, unsigned e) {
    deg_ = static_cast<std::uint16_t>(deg_ - exps_[i] + e);
    exps_[i] = static_cast<std::uint16_t>(e);
  }

  /// Bit i is set iff X_i occurs; used to reject divisibility tests quickly.
  std::uint32_t support() const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] != 0) mask |= 1u << i;
    return mask;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  Monomial lcm(const Monomial& other) const {
    Monomial r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) r.set(i, std::max(exps_[i], other.exps_[i]));
    return r;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<std::uint16_t>(r.exps_[i] + other.exps_[i]);
    r.deg_ = static_cast<std::uint16_t>(deg_ + other.deg_);
    return r;
  }

  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<std::uint16_t>(r.exps_[i] - other.exps_[i]);
    r.deg_ = static_cast<std::uint16_t>(deg_ - other.deg_);
    return r;
  }

  /// Same exponents on the first min(variables) slots, zero elsewhere.
  Monomial resized(std::size_t variables) const {
    Monomial r(variables);
    for (std::size_t i = 0; i < std::min<std::size_t>(variables, nvars_); ++i) r.set(i, exps_[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 131 + exps_[i];
    return h;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic order with X_0 > X_1 > ... , optionally
/// preceded by an elimination block made of all variables with index >= the
/// block start. Eliminated variables carry weight zero in the grading, so
/// t*F and (1-t)*G stay homogeneous when t is the only eliminated variable.
class MonomialOrder {
 public:
  static MonomialOrder degRevLex() { return MonomialOrder(Monomial::kMaxVariables); }

  static MonomialOrder eliminating(std::size_t blockStart) { return MonomialOrder(blockStart); }

  bool isDegRevLex() const { return blockStart_ == Monomial::kMaxVariables; }
  std::size_t blockStart() const { return blockStart_; }

  /// Degree with the eliminated block weighted zero.
  unsigned grading(const Monomial& m) const {
    if (isDegRevLex()) return m.degree();
    unsigned d = 0;
    for (std::size_t i = 0; i < std::min(blockStart_, m.variables()); ++i) d += m[i];
    return d;
  }

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    std::size_t n = a.variables();
    if (isDegRevLex() || blockStart_ >= n) return revlexRange(a, b, 0, n, a.degree(), b.degree());
    unsigned ea = 0, eb = 0;
    for (std::size_t i = blockStart_; i < n; ++i) {
      ea += a[i];
      eb += b[i];
    }
    if (int c = revlexRange(a, b, blockStart_, n, ea, eb)) return c;
    return revlexRange(a, b, 0, blockStart_, a.degree() - ea, b.degree() - eb);
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.blockStart_ == b.blockStart_; }

 private:
  explicit MonomialOrder(std::size_t blockStart) : blockStart_(blockStart) {}

  static int revlexRange(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi, unsigned da,
                         unsigned db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  std::size_t blockStart_;
};

/// Strict-weak "greater first" comparator for sorted containers.
struct DescendingDegRevLex {
  bool operator()(const Monomial& a, const Monomial& b) const { return MonomialOrder::degRevLex().greater(a, b); }
};

/// All monomials of the given total degree in `variables` variables, in
/// descending degrevlex order.
inline std::vector<Monomial> monomialsOfDegree(std::size_t variables, unsigned degree) {
  std::vector<Monomial> out;
  if (variables == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(variables);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == variables) {
      m.set(i, left);
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(i, e);
      rec(i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), DescendingDegRevLex{});
  return out;
}

}  // namespace fatpt
