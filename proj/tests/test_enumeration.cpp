#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "solena/enumeration.hpp"

using namespace solena;

namespace {

// Independent oracle: descend the Calkin-Wilf tree one binary digit at a
// time.  Only usable for small positions, which is exactly why the library
// version works with digit runs instead.
Rational cw_value_walk(unsigned long n) {
  REQUIRE(n >= 1);
  std::vector<int> bits;
  for (unsigned long m = n; m > 1; m /= 2) bits.push_back(static_cast<int>(m % 2));
  Int a = 1, b = 1;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    if (*it)
      a += b;
    else
      b += a;
  }
  return make_rational(a, b);
}

}  // namespace

TEST_CASE("Calkin-Wilf run decoding matches the digit walk") {
  for (unsigned long n = 1; n <= 1 << 14; ++n) {
    CAPTURE(n);
    REQUIRE(cw_value(Nat(n)) == cw_value_walk(n));
  }
}

TEST_CASE("Calkin-Wilf enumeration is bijective on small positions") {
  std::set<Rational> seen;
  for (unsigned long n = 1; n <= 4096; ++n) {
    Rational r = cw_value(Nat(n));
    REQUIRE(seen.insert(r).second);
    REQUIRE(cw_index(r) == Nat(n));
  }
}

TEST_CASE("Calkin-Wilf index of every small reduced fraction round-trips") {
  for (int p = 1; p <= 60; ++p)
    for (int q = 1; q <= 60; ++q) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      Rational r = make_rational(p, q);
      REQUIRE(cw_value(cw_index(r)) == r);
    }
}

TEST_CASE("integers sit on the all-ones spine") {
  for (unsigned long m = 1; m <= 40; ++m)
    REQUIRE(cw_index(Rational(static_cast<long>(m))) == (Nat(1) << m) - 1);
}

TEST_CASE("signed rational enumeration q") {
  REQUIRE(q_value(0) == 0);
  REQUIRE(q_value(1) == 1);
  REQUIRE(q_value(2) == -1);
  REQUIRE(q_value(3) == make_rational(1, 2));
  REQUIRE(q_value(4) == make_rational(-1, 2));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    Int num(static_cast<long>(rng() % 2001) - 1000);
    Int den(static_cast<long>(rng() % 999) + 1);
    Rational r = make_rational(num, den);
    REQUIRE(q_value(q_index(r)) == r);
  }
  for (unsigned long n = 0; n < 2000; ++n) REQUIRE(q_index(q_value(n)) == Nat(n));
}

TEST_CASE("canonical Z enumeration") {
  REQUIRE(z_value(0) == 0);
  REQUIRE(z_value(1) == 1);
  REQUIRE(z_value(2) == -1);
  REQUIRE(z_value(3) == 2);
  REQUIRE(z_value(4) == -2);
  for (long v = -50; v <= 50; ++v) REQUIRE(z_value(z_index(Int(v))) == v);
}

TEST_CASE("Cantor pairing round-trips") {
  for (unsigned long x = 0; x < 40; ++x)
    for (unsigned long y = 0; y < 40; ++y) {
      auto [a, b] = cantor_unpair(cantor_pair(x, y));
      REQUIRE(a == Nat(x));
      REQUIRE(b == Nat(y));
    }
}

TEST_CASE("Z^d enumeration is bijective") {
  for (std::size_t d : {1u, 2u, 3u}) {
    std::set<ZVec> seen;
    for (unsigned long n = 0; n < 500; ++n) {
      ZVec v = zvec_value(Nat(n), d);
      REQUIRE(seen.insert(v).second);
      REQUIRE(zvec_index(v) == Nat(n));
    }
  }
  // Fixed basis positions used elsewhere in the tests.
  REQUIRE(zvec_index({Int(1), Int(0)}) == 1);
  REQUIRE(zvec_index({Int(0), Int(1)}) == 2);
}
