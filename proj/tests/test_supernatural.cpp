#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "solena/supernatural.hpp"

using namespace solena;

namespace {

PrimeSeqSpec cycle_spec(std::vector<long> prefix, std::vector<long> cyc) {
  PrimeSeqSpec s;
  for (long p : prefix) s.prefix.emplace_back(p);
  s.cycle = std::vector<Int>{};
  for (long p : cyc) s.cycle->emplace_back(p);
  return s;
}

std::vector<long> small_primes{2, 3, 5, 7, 11, 13};

Supernatural random_supernatural(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1), count(0, 3), expo(1, 6);
  bool dinf = coin(rng) == 1;
  std::map<Int, std::optional<unsigned long>> exps;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Int p(small_primes[rng() % small_primes.size()]);
    if (dinf)
      exps[p] = static_cast<unsigned long>(expo(rng));
    else
      exps[p] = coin(rng) ? std::optional<unsigned long>{}
                          : std::optional<unsigned long>{
                                static_cast<unsigned long>(expo(rng))};
  }
  return Supernatural::from_exponents(dinf, std::move(exps));
}

PrimeSeqSpec random_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 4), clen(1, 3), coin(0, 4);
  PrimeSeqSpec s;
  int np = len(rng);
  for (int i = 0; i < np; ++i)
    s.prefix.emplace_back(small_primes[rng() % small_primes.size()]);
  if (coin(rng) == 0) {
    s.cycle = std::nullopt;  // all-primes marker
  } else {
    s.cycle = std::vector<Int>{};
    int nc = clen(rng);
    for (int i = 0; i < nc; ++i)
      s.cycle->emplace_back(small_primes[rng() % small_primes.size()]);
  }
  return s;
}

}  // namespace

TEST_CASE("steinitz: pinned examples") {
  // prefix (2,2,3), cycle (5): exponents {2:2, 3:1, 5:inf}.
  auto s1 = steinitz(cycle_spec({2, 2, 3}, {5}));
  REQUIRE(s1.exponent(2) == 2);
  REQUIRE(s1.exponent(3) == 1);
  REQUIRE_FALSE(s1.exponent(5).has_value());
  REQUIRE(s1.exponent(7) == 0);
  REQUIRE_FALSE(s1.default_infinite);

  REQUIRE(is_universal(steinitz(PrimeSeqSpec::all_primes())));

  // Finite plus infinite occurrences is infinite.
  auto s3 = steinitz(cycle_spec({7}, {7}));
  REQUIRE_FALSE(s3.exponent(7).has_value());
  REQUIRE(s3.exponents.size() == 1);
}

TEST_CASE("steinitz rejects non-prime entries") {
  REQUIRE_THROWS_AS(steinitz(cycle_spec({4}, {5})), NonPrimeInput);
  REQUIRE_THROWS_AS(steinitz(cycle_spec({2}, {6})), NonPrimeInput);
  PrimeSeqSpec empty_cycle;
  empty_cycle.cycle = std::vector<Int>{};
  REQUIRE_THROWS_AS(steinitz(empty_cycle), Error);
}

TEST_CASE("equivalent: pinned examples") {
  // Alternating (2,3,2,3,...) and (3,2,3,2,...): drop one leading term.
  auto a = steinitz(cycle_spec({}, {2, 3}));
  auto b = steinitz(cycle_spec({}, {3, 2}));
  REQUIRE(equivalent(a, b));

  // Dyadic vs triadic solenoids differ.
  auto dyadic = steinitz(cycle_spec({}, {2}));
  auto triadic = steinitz(cycle_spec({}, {3}));
  REQUIRE_FALSE(equivalent(dyadic, triadic));

  // An extra finite factor of 5 is absorbed by multiplying the other side.
  auto s = steinitz(cycle_spec({2, 7}, {3}));
  REQUIRE(equivalent(s, times_finite(s, 5)));
}

TEST_CASE("is_universal: pinned examples") {
  REQUIRE(is_universal(Supernatural::universal()));
  REQUIRE_FALSE(is_universal(steinitz(cycle_spec({}, {2}))));
  auto with_override = Supernatural::from_exponents(true, {{Int(2), 3ul}});
  REQUIRE_FALSE(is_universal(with_override));
}

TEST_CASE("universality transfers through equivalence") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    auto s = random_supernatural(rng);
    REQUIRE(is_universal(s) == equivalent(s, Supernatural::universal()));
  }
}

TEST_CASE("drop_prefix_invariance holds for all specs and t <= 10") {
  REQUIRE(drop_prefix_invariance(cycle_spec({2, 3, 5}, {7}), 0));
  REQUIRE(drop_prefix_invariance(cycle_spec({}, {2, 3}), 1));
  REQUIRE(drop_prefix_invariance(PrimeSeqSpec::all_primes({Int(2)}), 5));

  std::mt19937_64 rng(123);
  for (int t = 0; t < 100; ++t) {
    auto s = random_spec(rng);
    for (unsigned long d = 0; d <= 10; ++d) REQUIRE(drop_prefix_invariance(s, d));
  }
}

TEST_CASE("equivalence is an equivalence relation on a generated corpus") {
  std::mt19937_64 rng(20240202);
  std::vector<Supernatural> corpus;
  for (int t = 0; t < 500; ++t) corpus.push_back(random_supernatural(rng));

  for (const auto& s : corpus) REQUIRE(equivalent(s, s));

  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  for (int t = 0; t < 3000; ++t) {
    const auto& a = corpus[pick(rng)];
    const auto& b = corpus[pick(rng)];
    REQUIRE(equivalent(a, b) == equivalent(b, a));
  }
  for (int t = 0; t < 3000; ++t) {
    const auto& a = corpus[pick(rng)];
    const auto& b = corpus[pick(rng)];
    const auto& c = corpus[pick(rng)];
    if (equivalent(a, b) && equivalent(b, c)) REQUIRE(equivalent(a, c));
  }
}

TEST_CASE("representation invariants are enforced") {
  // Entries equal to the default are rejected in both modes.
  REQUIRE_THROWS_AS(Supernatural::from_exponents(true, {{Int(2), std::nullopt}}),
                    Error);
  REQUIRE_THROWS_AS(Supernatural::from_exponents(false, {{Int(2), 0ul}}), Error);
  REQUIRE_THROWS_AS(Supernatural::from_exponents(false, {{Int(6), 1ul}}),
                    NonPrimeInput);
  // A zero override under an infinite default is a genuine exception.
  auto s = Supernatural::from_exponents(true, {{Int(2), 0ul}});
  REQUIRE(s.exponent(2) == 0);
  REQUIRE_FALSE(is_universal(s));
}

TEST_CASE("equivalence is invariant under finite multiplication") {
  std::mt19937_64 rng(31415);
  std::uniform_int_distribution<long> factor(1, 5000);
  for (int t = 0; t < 300; ++t) {
    auto s1 = random_supernatural(rng);
    auto s2 = random_supernatural(rng);
    bool before = equivalent(s1, s2);
    REQUIRE(equivalent(times_finite(s1, factor(rng)), s2) == before);
    REQUIRE(equivalent(s1, times_finite(s2, factor(rng))) == before);
  }
}
