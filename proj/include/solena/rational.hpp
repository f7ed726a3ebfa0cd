#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "solena/errors.hpp"

namespace solena {

using Int = mpz_class;
using Rational = mpq_class;

// Group element indices are natural numbers with no a-priori bound: the
// canonical bijection onto Q assigns the integer value M an index of
// bit-length about M, so fixed-width indices are not an option.
using Nat = mpz_class;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rational>;

inline Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw Error("ParseError", "not a decimal integer: '" + s + "'");
  }
}

// Accepts "a/b" and plain "a"; result is canonical with positive denominator.
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw Error("ParseError", "not a rational: '" + s + "'");
  if (r.get_den() == 0) throw Error("ParseError", "zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw Error("ParseError", "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Int floor_q(const Rational& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Canonical representative in [0, 1).
inline Rational mod1(const Rational& r) { return r - Rational(floor_q(r)); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline QVec operator+(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline QVec operator-(const QVec& a) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline QVec operator*(const Rational& c, const QVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace solena
