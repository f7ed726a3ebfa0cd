#pragma once

// Finite-round Banach-Mazur-style game on the space of group tables.  The
// builder answers a fixed schedule of divisibility and common-multiple
// requirements by extending the current clopen set (moves carry
// certificates, so legality stays decidable); the audit re-verifies every
// witness against the realized final table.  Genericity at finite horizon
// means exactly this: every requirement scheduled within the horizon holds
// in the realized group.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "solena/qembed.hpp"

namespace solena {

// ---------------------------------------------------------------------------
// Requirements and their schedule

struct Requirement {
  enum class Type { divisibility, common_multiple };
  Type type = Type::divisibility;
  // divisibility: exists m with b * m = a;  common multiple: exists nonzero
  // (m, n) with m * a = n * b.  Both a and b are element indices except the
  // divisor b of a divisibility requirement, which is a multiplier.
  Nat a = 1, b = 1;

  bool operator==(const Requirement& o) const = default;
};

// Cantor-style walk over the positive pairs: (1,1),(1,2),(2,1),(1,3),...
inline std::pair<unsigned long, unsigned long> diagonal_pair(std::size_t t) {
  std::size_t s = 2, idx = t;
  while (idx >= s - 1) {
    idx -= s - 1;
    ++s;
  }
  return {static_cast<unsigned long>(idx + 1),
          static_cast<unsigned long>(s - 1 - idx)};
}

// Even requirements are divisibility, odd ones common-multiple; both walk
// the same diagonal enumeration.
inline Requirement schedule(std::size_t r) {
  auto [x, y] = diagonal_pair(r / 2);
  if (r % 2 == 0) return {Requirement::Type::divisibility, Nat(x), Nat(y)};
  return {Requirement::Type::common_multiple, Nat(x), Nat(y)};
}

struct WitnessRecord {
  Requirement req;
  Nat index_witness = 0;                 // divisibility: the index m
  std::pair<Int, Int> pair_witness{0, 0};  // common multiple: (m, n), signed
  std::size_t round = 0;                 // global move number

  bool operator==(const WitnessRecord& o) const = default;
};

// ---------------------------------------------------------------------------
// Moves and transcripts

struct Move {
  PartialTable clopen;
  Certificate certificate;  // realizes exactly the clopen
  std::optional<WitnessRecord> fulfilled;  // present on builder moves
};

struct Transcript {
  std::vector<Move> moves;
  std::vector<WitnessRecord> requirements;
  // Realization of the last requirement-carrying move (or the last move).
  FinitePermutation final_permutation;
  TablePtr final_oracle;

  const Certificate* last_certificate() const {
    return moves.empty() ? nullptr : &moves.back().certificate;
  }
};

struct Legality {
  bool legal = true;
  std::string reason;
};

inline Legality legal(const Move& m, const Transcript& state) {
  const PartialTable& prev =
      state.moves.empty() ? PartialTable::trivial() : state.moves.back().clopen;
  if (!m.clopen.extends(prev)) return {false, "not an extension of the last clopen"};
  if (!(m.certificate.table == m.clopen))
    return {false, "certificate realizes a different clopen"};
  try {
    validate_certificate(m.certificate);
  } catch (const InvalidCertificate& e) {
    return {false, e.what()};
  }
  auto rep = check_axioms(m.clopen);
  if (!rep.all_hold()) return {false, "window violates the group axioms"};
  return {};
}

// ---------------------------------------------------------------------------
// Strategies

// Deterministic functions of (state, round, game seed); randomized
// strategies derive their randomness from the seeds only, so replays are
// byte-identical.
using Strategy = std::function<Move(const Transcript&, std::size_t, std::uint64_t)>;

namespace detail {

// Working form of a one-dimensional certificate: reduced integer values.
struct ValueState {
  std::map<Nat, Int> value;
  std::map<Int, Nat> index;
  std::size_t window = 0;
  Nat next = 0;  // indices are contiguous: every index < next has a value

  void insert(const Nat& idx, const Int& v) {
    value[idx] = v;
    index[v] = idx;
    if (idx >= next) next = idx + 1;
  }

  Int fresh_value() const {
    Int v = 1;
    while (index.count(v)) ++v;
    return v;
  }

  // Multiply every value by s (an isomorphism of the realized group, so
  // table entries and earlier witnesses are preserved).
  void scale(const Int& s) {
    std::map<Nat, Int> nv;
    std::map<Int, Nat> ni;
    for (const auto& [i, v] : value) {
      nv[i] = v * s;
      ni[v * s] = i;
    }
    value = std::move(nv);
    index = std::move(ni);
  }

  // Give every index up to i a value and put i inside the window.
  void cover_index(const Nat& i) {
    while (next <= i) {
      Nat at = next;
      insert(at, fresh_value());
    }
    if (i > static_cast<unsigned long>(window)) window = i.get_ui();
  }
};

// Collapse any certificate to reduced integer values on the same indices:
// the base-K image divided by its content.  Any injective homomorphic image
// realizes the same table, and small integers keep the canonical-table
// indices of the realized group small.
inline ValueState collapse_certificate(const Certificate& c) {
  std::vector<Nat> idxs;
  std::vector<QVec> pts;
  for (const auto& [i, v] : c.points) {
    idxs.push_back(i);
    pts.push_back(v);
  }
  auto [n, scaled] = clear_denominators(pts);
  Int k = choose_K(scaled);
  std::vector<Int> vals(idxs.size());
  Int content = 0;
  for (std::size_t t = 0; t < idxs.size(); ++t) {
    vals[t] = base_K_hom(k, scaled[t]);
    content = gcd(content, vals[t]);
  }
  if (content == 0) content = 1;
  ValueState vs;
  vs.window = c.table.k;
  for (std::size_t t = 0; t < idxs.size(); ++t) vs.insert(idxs[t], vals[t] / content);
  return vs;
}

// Totalize the window; missing sums become extra points, small values first
// so that later witness lookups stay near the window.
inline Certificate close_window(ValueState& vs) {
  std::vector<Int> missing;
  for (std::size_t i = 0; i <= vs.window; ++i)
    for (std::size_t j = 0; j <= vs.window; ++j) {
      Int s = vs.value.at(Nat(static_cast<unsigned long>(i))) +
              vs.value.at(Nat(static_cast<unsigned long>(j)));
      if (!vs.index.count(s)) missing.push_back(s);
    }
  std::sort(missing.begin(), missing.end(), [](const Int& a, const Int& b) {
    if (abs(a) != abs(b)) return abs(a) < abs(b);
    return a > b;
  });
  missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
  for (const auto& s : missing) {
    Nat at = vs.next;
    vs.insert(at, s);
  }

  Certificate out;
  out.d = 1;
  out.table.k = vs.window;
  for (std::size_t i = 0; i <= vs.window; ++i)
    for (std::size_t j = 0; j <= vs.window; ++j) {
      Int s = vs.value.at(Nat(static_cast<unsigned long>(i))) +
              vs.value.at(Nat(static_cast<unsigned long>(j)));
      out.table.entries[{i, j}] = vs.index.at(s);
    }
  for (const auto& [i, v] : vs.value) out.points[i] = QVec{Rational(v)};
  return out;
}

}  // namespace detail

namespace detail {

// Indices are contiguous, so any point inserted after the closure extras
// has a large index, and putting it in the window would drag every extra
// along (the window would square each round).  The schedule is a fixed
// function, so the builder instead pins the requirement indices and the
// divisibility targets of a whole schedule prefix while the window is
// still small; later witnesses are then found at small indices.
constexpr std::size_t kScheduleHorizon = 64;
constexpr unsigned long kScheduleLcm = 840;  // lcm(1..8) covers the prefix

inline void prepin_schedule(ValueState& vs) {
  auto fresh_multiple = [&vs]() {
    Int v = kScheduleLcm;
    while (vs.index.count(v)) v += kScheduleLcm;
    return v;
  };
  for (std::size_t r = 0; r < kScheduleHorizon; ++r) {
    Requirement req = schedule(r);
    std::vector<Nat> needed{req.a};
    if (req.type == Requirement::Type::common_multiple) needed.push_back(req.b);
    for (const auto& i : needed)
      while (vs.next <= i) {
        Nat at = vs.next;
        vs.insert(at, fresh_multiple());
        vs.cover_index(at);
      }
  }
  for (std::size_t r = 0; r < kScheduleHorizon; ++r) {
    Requirement req = schedule(r);
    if (req.type != Requirement::Type::divisibility) continue;
    Int k(req.b.get_ui());
    Int vn = vs.value.at(req.a);
    if (vn % k != 0) continue;  // handled by scaling if it ever fires
    Int target = vn / k;
    if (!vs.index.count(target)) {
      Nat at = vs.next;
      vs.insert(at, target);
      vs.cover_index(at);
    }
  }
}

}  // namespace detail

// The builder: collapse the current certificate into reduced integers,
// extend the window to pin down the scheduled requirement's witness,
// re-close, and hand back the certified move.
inline Move builder_move(const Transcript& state, std::size_t round) {
  Certificate cur =
      state.moves.empty() ? Certificate::trivial() : state.moves.back().certificate;
  try {
    validate_certificate(cur);
  } catch (const InvalidCertificate& e) {
    throw InvalidState(std::string("opponent certificate is broken: ") + e.what());
  }

  detail::ValueState vs = detail::collapse_certificate(cur);

  std::size_t reqnum = 0;
  for (const auto& m : state.moves)
    if (m.fulfilled) ++reqnum;
  Requirement req = schedule(reqnum);
  if (reqnum == 0) detail::prepin_schedule(vs);

  WitnessRecord rec;
  rec.req = req;
  rec.round = round;

  if (req.type == Requirement::Type::divisibility) {
    vs.cover_index(req.a);
    Int k(req.b.get_ui());
    Int vn = vs.value.at(req.a);
    if (vn % k != 0) {
      vs.scale(k);
      vn = vs.value.at(req.a);
    }
    Int target = vn / k;
    auto it = vs.index.find(target);
    Nat witness;
    if (it != vs.index.end()) {
      witness = it->second;
      vs.cover_index(witness);  // the clopen must contain its witness
    } else {
      witness = vs.next;
      vs.insert(witness, target);
      vs.cover_index(witness);
    }
    rec.index_witness = witness;
  } else {
    vs.cover_index(req.a);
    vs.cover_index(req.b);
    Int u = vs.value.at(req.a), w = vs.value.at(req.b);
    Int g = gcd(u, w);
    Int m = w / g, n = u / g;
    if (m < 0) {
      m = -m;
      n = -n;
    }
    rec.pair_witness = {m, n};
  }

  Certificate next = detail::close_window(vs);
  return {next.table, std::move(next), rec};
}

inline Strategy builder_strategy() {
  return [](const Transcript& state, std::size_t round, std::uint64_t) {
    return builder_move(state, round);
  };
}

// Bounded random extensions: a few fresh integer points entering the window
// plus the closure, all derived from (seed, game seed, round) so replays
// coincide.
inline Strategy random_adversary(std::uint64_t seed) {
  return [seed](const Transcript& state, std::size_t round,
                std::uint64_t game_seed) -> Move {
    Certificate cur =
        state.moves.empty() ? Certificate::trivial() : state.moves.back().certificate;
    std::uint64_t mix = seed;
    mix = mix * 0x9E3779B97F4A7C15ull + game_seed;
    mix = mix * 0x9E3779B97F4A7C15ull + round;
    std::mt19937_64 rng(mix);
    const int budget = static_cast<int>(rng() % 3);
    if (budget == 0) return {cur.table, cur, std::nullopt};  // repeat the clopen

    detail::ValueState vs = detail::collapse_certificate(cur);
    // New points stay outside the window (indices are contiguous, so they
    // land after the extras); the window itself is closed a bounded number
    // of indices further instead.  Raw engine arithmetic keeps replays
    // independent of the standard library's distribution algorithms.
    for (int b = 0; b < budget; ++b) {
      Int v;
      do {
        Int top = 0;
        for (const auto& [val, idx] : vs.index)
          top = std::max(top, Int(abs(val)));
        v = top + static_cast<long>(rng() % 9 + 1);
      } while (vs.index.count(v));
      Nat at = vs.next;
      vs.insert(at, v);
    }
    std::size_t promoted = std::min<std::size_t>(vs.window + budget,
                                                 vs.next.get_ui() - 1);
    vs.window = promoted;
    Certificate next = detail::close_window(vs);
    return {next.table, std::move(next), std::nullopt};
  };
}

// ---------------------------------------------------------------------------
// Play and audit

inline Transcript play(const Strategy& a, const Strategy& b, std::size_t rounds,
                       std::uint64_t seed) {
  if (rounds < 1) throw Error("InvalidRounds", "a game needs at least one round");
  Transcript t;
  for (std::size_t g = 0; g < rounds; ++g) {
    const Strategy& mover = (g % 2 == 0) ? a : b;
    Move m = mover(t, g, seed);
    Legality lr = legal(m, t);
    if (!lr.legal) throw IllegalMove(static_cast<int>(g % 2), g, lr.reason);
    if (m.fulfilled) t.requirements.push_back(*m.fulfilled);
    t.moves.push_back(std::move(m));
  }
  // Realize the last builder (requirement-carrying) move; with no builder in
  // the game, the last move stands in.
  const Certificate* final_cert = nullptr;
  for (auto it = t.moves.rbegin(); it != t.moves.rend(); ++it)
    if (it->fulfilled) {
      final_cert = &it->certificate;
      break;
    }
  if (!final_cert && !t.moves.empty()) final_cert = &t.moves.back().certificate;
  RealizedPatch r =
      final_cert ? realize_patch(*final_cert) : realize_patch(Certificate::trivial());
  t.final_permutation = r.nu;
  t.final_oracle = r.oracle;
  return t;
}

struct AuditReport {
  bool nesting_ok = true;
  bool certificates_ok = true;
  bool witnesses_ok = true;
  bool torsion_free_ok = true;
  std::vector<std::string> failures;

  bool pass() const {
    return nesting_ok && certificates_ok && witnesses_ok && torsion_free_ok;
  }
};

inline AuditReport audit(const Transcript& t) {
  AuditReport rep;
  if (t.moves.empty()) return rep;  // vacuous

  PartialTable prev = PartialTable::trivial();
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    const Move& m = t.moves[i];
    if (!m.clopen.extends(prev)) {
      rep.nesting_ok = false;
      rep.failures.push_back("move " + std::to_string(i) + " is not an extension");
    }
    try {
      validate_certificate(m.certificate);
      if (!(m.certificate.table == m.clopen))
        throw InvalidCertificate("certificate realizes a different clopen");
    } catch (const InvalidCertificate& e) {
      rep.certificates_ok = false;
      rep.failures.push_back("move " + std::to_string(i) + ": " + e.what());
    }
    prev = m.clopen;
  }

  const Certificate* final_cert = nullptr;
  for (auto it = t.moves.rbegin(); it != t.moves.rend(); ++it)
    if (it->fulfilled) {
      final_cert = &it->certificate;
      break;
    }
  if (!final_cert) final_cert = &t.moves.back().certificate;
  TablePtr oracle;
  try {
    oracle = realize_patch(*final_cert).oracle;
  } catch (const Error& e) {
    rep.certificates_ok = false;
    rep.failures.push_back(std::string("final realization failed: ") + e.what());
    return rep;
  }

  for (std::size_t i = 0; i < t.requirements.size(); ++i) {
    if (!(t.requirements[i].req == schedule(i))) {
      rep.witnesses_ok = false;
      rep.failures.push_back("requirement " + std::to_string(i) +
                             " does not follow the schedule");
    }
  }

  for (const auto& rec : t.requirements) {
    if (rec.req.type == Requirement::Type::divisibility) {
      // b-fold sum of the witness must reach a, by repeated application.
      Nat acc = 0;
      for (Nat s = 0; s < rec.req.b; ++s) acc = oracle->apply(acc, rec.index_witness);
      if (acc != rec.req.a) {
        rep.witnesses_ok = false;
        rep.failures.push_back("divisibility witness fails at round " +
                               std::to_string(rec.round));
      }
    } else {
      const auto& [m, n] = rec.pair_witness;
      if (m == 0 || n == 0 ||
          oracle->multiple(m, rec.req.a) != oracle->multiple(n, rec.req.b)) {
        rep.witnesses_ok = false;
        rep.failures.push_back("common-multiple witness fails at round " +
                               std::to_string(rec.round));
      }
    }
  }

  if (torsion_witness_search(*oracle, 30)) {
    rep.torsion_free_ok = false;
    rep.failures.push_back("realized table has a torsion witness");
  }
  return rep;
}

}  // namespace solena
