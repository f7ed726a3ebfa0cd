#pragma once

// Fixed computable bijections between N and Z, Q, Z^d.  These pin down the
// canonical group tables; every serialized index in the project refers to
// them, so the conventions here must never change.
//
// Positive rationals are enumerated by breadth-first position in the
// Calkin-Wilf tree: position 1 holds 1/1 and position t has children 2t
// (a/(a+b)) and 2t+1 ((a+b)/b).  Reading the binary digits of the position
// after the leading 1 walks the tree (0 = left, 1 = right); maximal runs of
// equal digits are continued-fraction coefficients, which lets both
// directions run in O(#coefficients) bignum operations instead of one step
// per tree level.  That matters: the position of the integer M is 2^M - 1,
// so a digit-at-a-time walk would be exponential in the value's bit-length.

#include <cstddef>
#include <optional>
#include <vector>

#include "solena/rational.hpp"

namespace solena {

// Position n >= 1 in the Calkin-Wilf breadth-first enumeration of Q^+.
inline Rational cw_value(const Nat& n) {
  if (n < 1) throw Error("ParseError", "Calkin-Wilf positions start at 1");
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Int a = 1, b = 1;
  // Scan runs of equal bits below the leading 1, most significant first.
  std::size_t i = bits - 1;
  while (i > 0) {
    const int bit = mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i - 1));
    std::size_t run = 0;
    while (i > 0 &&
           mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i - 1)) == bit) {
      ++run;
      --i;
    }
    if (bit)
      a += Int(static_cast<unsigned long>(run)) * b;
    else
      b += Int(static_cast<unsigned long>(run)) * a;
  }
  return make_rational(a, b);
}

// Inverse of cw_value on positive rationals.
inline Nat cw_index(const Rational& r) {
  if (r <= 0) throw Error("ParseError", "Calkin-Wilf enumerates positives only");
  Int a = r.get_num(), b = r.get_den();
  // Undo the walk from the leaf up, emitting runs least significant first.
  std::vector<std::pair<bool, Int>> runs;
  while (a != 1 || b != 1) {
    if (a > b) {
      Int len = (a - 1) / b;
      a -= len * b;
      runs.emplace_back(true, len);
    } else {
      Int len = (b - 1) / a;
      b -= len * a;
      runs.emplace_back(false, len);
    }
  }
  Nat n = 0;
  mp_bitcnt_t pos = 0;
  for (const auto& [bit, len] : runs) {
    const auto l = static_cast<mp_bitcnt_t>(len.get_ui());
    if (!len.fits_ulong_p())
      throw Error("Overflow", "Calkin-Wilf index does not fit in memory");
    if (bit) {
      Nat ones = (Nat(1) << l) - 1;
      n |= ones << pos;
    }
    pos += l;
  }
  n |= Nat(1) << pos;
  return n;
}

// q(0) = 0, q(2t-1) = r_t, q(2t) = -r_t with r the Calkin-Wilf sequence.
inline Rational q_value(const Nat& n) {
  if (n == 0) return Rational(0);
  if (mpz_odd_p(n.get_mpz_t())) return cw_value((n + 1) / 2);
  return -cw_value(n / 2);
}

inline Nat q_index(const Rational& r) {
  if (r == 0) return 0;
  if (r > 0) return 2 * cw_index(r) - 1;
  return 2 * cw_index(-r);
}

// e(0) = 0, e(2t-1) = t, e(2t) = -t: the canonical enumeration of Z.
inline Int z_value(const Nat& n) {
  if (n == 0) return 0;
  if (mpz_odd_p(n.get_mpz_t())) return (n + 1) / 2;
  return -(n / 2);
}

inline Nat z_index(const Int& v) {
  if (v == 0) return 0;
  if (v > 0) return 2 * v - 1;
  return -2 * v;
}

// Cantor pairing, used to enumerate Z^d coordinatewise.
inline Nat cantor_pair(const Nat& x, const Nat& y) {
  return (x + y) * (x + y + 1) / 2 + y;
}

inline std::pair<Nat, Nat> cantor_unpair(const Nat& n) {
  // w = floor((sqrt(8n+1)-1)/2); exact integer square root.
  Nat s;
  mpz_sqrt(s.get_mpz_t(), Nat(8 * n + 1).get_mpz_t());
  Nat w = (s - 1) / 2;
  Nat t = w * (w + 1) / 2;
  Nat y = n - t;
  return {w - y, y};
}

inline Nat zvec_index(const ZVec& v) {
  if (v.empty()) throw DimensionMismatch("zvec_index of empty vector");
  Nat n = z_index(v.back());
  for (std::size_t i = v.size() - 1; i-- > 0;) n = cantor_pair(z_index(v[i]), n);
  return n;
}

inline ZVec zvec_value(const Nat& n, std::size_t d) {
  if (d == 0) throw DimensionMismatch("zvec_value of dimension 0");
  ZVec out(d);
  Nat rest = n;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    auto [x, y] = cantor_unpair(rest);
    out[i] = z_value(x);
    rest = y;
  }
  out[d - 1] = z_value(rest);
  return out;
}

}  // namespace solena
