#include <catch2/catch_amalgamated.hpp>

#include "solena/game.hpp"

using namespace solena;

TEST_CASE("requirement schedule walks the diagonal, alternating types") {
  REQUIRE(schedule(0) ==
          Requirement{Requirement::Type::divisibility, Nat(1), Nat(1)});
  REQUIRE(schedule(1) ==
          Requirement{Requirement::Type::common_multiple, Nat(1), Nat(1)});
  REQUIRE(schedule(2) ==
          Requirement{Requirement::Type::divisibility, Nat(1), Nat(2)});
  REQUIRE(schedule(4) ==
          Requirement{Requirement::Type::divisibility, Nat(2), Nat(1)});
  REQUIRE(schedule(6) ==
          Requirement{Requirement::Type::divisibility, Nat(1), Nat(3)});
}

TEST_CASE("legal: first move with the trivial table and zero certificate") {
  Move m{PartialTable::trivial(), Certificate::trivial(), std::nullopt};
  REQUIRE(legal(m, Transcript{}).legal);
}

TEST_CASE("legal: shrinking or inconsistent moves are rejected with reasons") {
  Transcript t = play(builder_strategy(), builder_strategy(), 2, 0);

  // A move that shrinks the window is not an extension.
  Move shrink{PartialTable::trivial(), Certificate::trivial(), std::nullopt};
  auto lr = legal(shrink, t);
  REQUIRE_FALSE(lr.legal);
  REQUIRE(lr.reason == "not an extension of the last clopen");

  // A certificate that breaks points[0] = 0 is invalid.
  Move bad = t.moves.back();
  bad.certificate.points[Nat(0)] = QVec{Rational(1)};
  auto lr2 = legal(bad, t);
  REQUIRE_FALSE(lr2.legal);
}

TEST_CASE("builder vs builder: two rounds are legal and audit passes") {
  Transcript t = play(builder_strategy(), builder_strategy(), 2, 0);
  REQUIRE(t.moves.size() == 2);
  REQUIRE(t.requirements.size() == 2);
  REQUIRE(audit(t).pass());
}

TEST_CASE("builder requirements are honored in the realized table") {
  Transcript t = play(builder_strategy(), random_adversary(7), 12, 7);
  REQUIRE(audit(t).pass());
  // Divisibility records truly divide under the final oracle.
  for (const auto& rec : t.requirements) {
    if (rec.req.type != Requirement::Type::divisibility) continue;
    Nat acc = 0;
    for (Nat s = 0; s < rec.req.b; ++s)
      acc = t.final_oracle->apply(acc, rec.index_witness);
    REQUIRE(acc == rec.req.a);
  }
}

TEST_CASE("the adversary is deterministic in its seeds") {
  Transcript a = play(builder_strategy(), random_adversary(5), 10, 99);
  Transcript b = play(builder_strategy(), random_adversary(5), 10, 99);
  REQUIRE(a.moves.size() == b.moves.size());
  for (std::size_t i = 0; i < a.moves.size(); ++i) {
    REQUIRE(a.moves[i].clopen == b.moves[i].clopen);
    REQUIRE(a.moves[i].certificate.points == b.moves[i].certificate.points);
  }
  REQUIRE(a.final_permutation.mapping() == b.final_permutation.mapping());

  Transcript c = play(builder_strategy(), random_adversary(6), 10, 99);
  bool same = a.moves.size() == c.moves.size();
  if (same)
    for (std::size_t i = 0; i < a.moves.size(); ++i)
      if (!(a.moves[i].clopen == c.moves[i].clopen)) same = false;
  REQUIRE_FALSE(same);
}

TEST_CASE("adversary moves are always legal across seeds") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Transcript t = play(builder_strategy(), random_adversary(seed), 14, seed);
    REQUIRE(audit(t).pass());
  }
}

TEST_CASE("zero rounds is a precondition violation") {
  REQUIRE_THROWS_AS(play(builder_strategy(), builder_strategy(), 0, 1), Error);
}

TEST_CASE("audit flags forged witnesses") {
  Transcript t = play(builder_strategy(), random_adversary(3), 8, 3);
  REQUIRE(audit(t).pass());
  // Forge: redirect a divisibility witness at a wrong index.
  for (auto& rec : t.requirements)
    if (rec.req.type == Requirement::Type::divisibility && rec.req.b > 1) {
      rec.index_witness = rec.index_witness + 1;
      break;
    }
  auto rep = audit(t);
  REQUIRE_FALSE(rep.pass());
  REQUIRE_FALSE(rep.witnesses_ok);
}

TEST_CASE("audit of the empty transcript passes vacuously") {
  REQUIRE(audit(Transcript{}).pass());
}

TEST_CASE("the builder refuses to move on a broken certificate") {
  Transcript t;
  Move broken{PartialTable::trivial(), Certificate::trivial(), std::nullopt};
  broken.certificate.points[Nat(0)] = QVec{Rational(1)};
  t.moves.push_back(broken);  // bypasses play's legality gate
  REQUIRE_THROWS_AS(builder_move(t, 1), InvalidState);
}

TEST_CASE("builder moves are idempotent under realization") {
  // Realizing the builder's own certificate reproduces the same values:
  // the canonical table is a fixed point of the collapse.
  Transcript t = play(builder_strategy(), builder_strategy(), 4, 0);
  const Certificate& c = t.moves.back().certificate;
  auto first = realize_patch(c);
  auto again = realize_patch(c);
  REQUIRE(first.nu.mapping() == again.nu.mapping());
  for (const auto& [i, v] : c.points) {
    REQUIRE(first.oracle->value(i) == v);  // values survive unchanged
    REQUIRE(first.oracle->value(i) == again.oracle->value(i));
  }
  for (std::size_t i = 0; i <= c.table.k; ++i)
    for (std::size_t j = 0; j <= c.table.k; ++j)
      REQUIRE(first.oracle->apply(i, j) == again.oracle->apply(i, j));
}

TEST_CASE("windows stay at desk scale over thirty rounds") {
  Transcript t = play(builder_strategy(), random_adversary(11), 30, 11);
  REQUIRE(audit(t).pass());
  REQUIRE(t.moves.back().clopen.k < 400);
}

TEST_CASE("the adversary can also open the game") {
  Transcript t = play(random_adversary(2), builder_strategy(), 9, 2);
  REQUIRE(audit(t).pass());
  REQUIRE(t.requirements.size() == 4);  // builder moved on rounds 1,3,5,7
}

TEST_CASE("audit rejects out-of-schedule requirement lists") {
  Transcript t = play(builder_strategy(), random_adversary(9), 6, 9);
  REQUIRE(audit(t).pass());
  std::swap(t.requirements[0], t.requirements[1]);
  REQUIRE_FALSE(audit(t).pass());
}
