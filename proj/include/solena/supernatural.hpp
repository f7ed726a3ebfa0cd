#pragma once

// Supernatural (Steinitz) numbers and the classification of solenoids by
// prime sequences: two solenoids are homeomorphic iff finitely many terms
// can be deleted from the two defining sequences so that every prime occurs
// the same number of times, which for Steinitz numbers is the relation
// a * S1 = b * S2 for positive integers a, b.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "solena/rational.hpp"

namespace solena {

struct Supernatural {
  // Exponent of an absent prime: infinity when default_infinite, else 0.
  // Stored entries always differ from the default; nullopt means infinity.
  bool default_infinite = false;
  std::map<Int, std::optional<unsigned long>> exponents;

  static Supernatural universal() { return {true, {}}; }

  static Supernatural from_exponents(
      bool default_inf, std::map<Int, std::optional<unsigned long>> exps) {
    for (const auto& [p, e] : exps) {
      if (!is_prime(p))
        throw NonPrimeInput("exponent key " + p.get_str() + " is not prime");
      if (default_inf && !e)
        throw Error("InvalidSupernatural", "entry equals the default (infinity)");
      if (!default_inf && e && *e == 0)
        throw Error("InvalidSupernatural", "entry equals the default (zero)");
    }
    return {default_inf, std::move(exps)};
  }

  // nullopt encodes an infinite exponent.
  std::optional<unsigned long> exponent(const Int& p) const {
    auto it = exponents.find(p);
    if (it != exponents.end()) return it->second;
    if (default_infinite) return std::nullopt;
    return 0;
  }

  bool operator==(const Supernatural& o) const = default;
  bool operator<(const Supernatural& o) const {
    if (default_infinite != o.default_infinite) return default_infinite < o.default_infinite;
    return exponents < o.exponents;
  }
};

// True iff every prime has infinite exponent.
inline bool is_universal(const Supernatural& s) {
  return s.default_infinite && s.exponents.empty();
}

// a * S1 = b * S2 for some positive integers a, b.  Multiplying by a
// positive integer can raise finitely many finite exponents by finite
// amounts, so the relation holds exactly when the sets of primes with
// infinite exponent agree; finite discrepancies are absorbable because this
// representation only ever has finitely many exceptional primes.
inline bool equivalent(const Supernatural& s1, const Supernatural& s2) {
  if (s1.default_infinite != s2.default_infinite) return false;
  if (s1.default_infinite) {
    // Infinite everywhere except the (finite-valued) stored entries.
    auto keys = [](const Supernatural& s) {
      std::vector<Int> k;
      for (const auto& [p, e] : s.exponents) k.push_back(p);
      return k;
    };
    return keys(s1) == keys(s2);
  }
  auto infinite_keys = [](const Supernatural& s) {
    std::vector<Int> k;
    for (const auto& [p, e] : s.exponents)
      if (!e) k.push_back(p);
    return k;
  };
  return infinite_keys(s1) == infinite_keys(s2);
}

// Multiply by the factorization of a positive integer; infinite exponents
// absorb any finite factor.
inline Supernatural times_finite(const Supernatural& s, const Int& n) {
  if (n <= 0) throw Error("ParseError", "factor must be positive");
  Supernatural out = s;
  auto bump = [&out](const Int& p) {
    auto e = out.exponent(p);
    if (e) out.exponents[p] = *e + 1;
  };
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p)
    while (rest % p == 0) {
      rest /= p;
      bump(p);
    }
  if (rest > 1) bump(rest);
  return out;
}

// ---------------------------------------------------------------------------
// Finitely presented prime sequences

struct PrimeSeqSpec {
  std::vector<Int> prefix;
  // The tail is either a cycle repeated forever or "all primes infinitely
  // often" (nullopt); no finite cycle contains every prime.
  std::optional<std::vector<Int>> cycle;

  static PrimeSeqSpec all_primes(std::vector<Int> prefix = {}) {
    return {std::move(prefix), std::nullopt};
  }

  void validate() const {
    for (const auto& p : prefix)
      if (!is_prime(p)) throw NonPrimeInput("prefix entry " + p.get_str());
    if (cycle) {
      if (cycle->empty())
        throw Error("InvalidSequence", "tail cycle must be nonempty");
      for (const auto& p : *cycle)
        if (!is_prime(p)) throw NonPrimeInput("cycle entry " + p.get_str());
    }
  }
};

// The Steinitz number of the sequence: prefix occurrences plus infinity for
// every prime in the tail.
inline Supernatural steinitz(const PrimeSeqSpec& s) {
  s.validate();
  if (!s.cycle) return Supernatural::universal();
  Supernatural out;
  std::map<Int, unsigned long> finite;
  for (const auto& p : s.prefix) ++finite[p];
  for (const auto& p : *s.cycle) out.exponents[p] = std::nullopt;
  for (const auto& [p, e] : finite)
    if (!out.exponents.count(p)) out.exponents[p] = e;
  return out;
}

// Sequence with the first t terms deleted.
inline PrimeSeqSpec drop_prefix(const PrimeSeqSpec& s, unsigned long t) {
  PrimeSeqSpec out = s;
  unsigned long take = std::min<unsigned long>(t, out.prefix.size());
  out.prefix.erase(out.prefix.begin(), out.prefix.begin() + take);
  unsigned long rest = t - take;
  if (rest > 0 && out.cycle) {
    // Deleting into the tail rotates the cycle.
    unsigned long shift = rest % out.cycle->size();
    std::rotate(out.cycle->begin(), out.cycle->begin() + shift, out.cycle->end());
  }
  return out;
}

// Deleting finitely many terms never changes the classification.
inline bool drop_prefix_invariance(const PrimeSeqSpec& s, unsigned long t) {
  return equivalent(steinitz(s), steinitz(drop_prefix(s, t)));
}

}  // namespace solena
