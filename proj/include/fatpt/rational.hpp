#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fatpt {

/// Exact rational number. GMP keeps it in lowest terms with a positive
/// denominator as long as every constructed value is canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational makeRational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses `p`, `-p` or `p/q` (decimal integers). Returns false on malformed input.
inline bool parseRational(std::string_view text, Rational& out) {
  if (text.empty()) return false;
  auto isDigits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view sign;
  if (text.front() == '-' || text.front() == '+') {
    sign = text.substr(0, 1);
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!isDigits(num) || !isDigits(den)) return false;
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) return false;
  if (sign == "-") n = -n;
  out = makeRational(n, d);
  return true;
}

inline std::string toString(const Rational& r) { return r.get_str(); }

inline Integer binomial(long n, long k) {
  if (k < 0 || n < k || n < 0) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Binomial coefficient that fits a machine word; the callers only use it for
/// dimension counts of desk-scale graded pieces.
inline long long binom(long n, long k) {
  if (k < 0 || n < k || n < 0) return 0;
  long long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace fatpt
