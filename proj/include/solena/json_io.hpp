#pragma once

// JSON wire formats.  Conventions: rationals are strings "num/den" (or
// "num" when integral); integers are JSON numbers while they fit into the
// double-exact range and decimal strings beyond; matrix entries are always
// decimal strings.  Parsers accept both forms everywhere.  nlohmann's
// default object ordering is alphabetical, which keeps every emission
// deterministic.

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solena/duality.hpp"
#include "solena/game.hpp"
#include "solena/qembed.hpp"
#include "solena/supernatural.hpp"
#include "solena/table_space.hpp"
#include "solena/torus.hpp"

namespace solena {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars

inline json int_to_json(const Int& v) {
  static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
  if (v > lo && v < hi) return json(v.get_si());
  return json(v.get_str());
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw Error("ParseError", "expected an integer, got " + j.dump());
}

inline json rational_to_json(const Rational& r) { return json(r.get_str()); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer())
    return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_array() && j.size() == 2)
    return make_rational(int_from_json(j[0]), int_from_json(j[1]));
  throw Error("ParseError", "expected a rational, got " + j.dump());
}

// ---------------------------------------------------------------------------
// Matrices

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline IntMatrix matrix_from_json(const json& j) {
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const json& entries = j.at("entries");
  if (entries.size() != rows) throw Error("ParseError", "matrix row count mismatch");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols)
      throw Error("ParseError", "matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = int_from_json(entries[r][c]);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Tables, permutations, certificates

inline json to_json(const PartialTable& t) {
  json entries = json::array();
  for (const auto& [ij, m] : t.entries)
    entries.push_back(json::array({ij.first, ij.second, int_to_json(m)}));
  return {{"k", t.k}, {"entries", std::move(entries)}};
}

inline PartialTable table_from_json(const json& j) {
  PartialTable t;
  t.k = j.at("k").get<std::size_t>();
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3)
      throw Error("ParseError", "table entries are [i, j, m] triples");
    t.entries[{e[0].get<std::size_t>(), e[1].get<std::size_t>()}] =
        int_from_json(e[2]);
  }
  return t;
}

inline json to_json(const FinitePermutation& nu) {
  json pairs = json::array();
  for (const auto& [a, b] : nu.mapping())
    pairs.push_back(json::array({int_to_json(a), int_to_json(b)}));
  return {{"mapping", std::move(pairs)}};
}

inline FinitePermutation permutation_from_json(const json& j) {
  std::vector<std::pair<Nat, Nat>> pairs;
  for (const auto& e : j.at("mapping"))
    pairs.emplace_back(int_from_json(e.at(0)), int_from_json(e.at(1)));
  return FinitePermutation::from_pairs(pairs);
}

inline json to_json(const Certificate& c) {
  // Points are positional: index i is the i-th entry, so the index set must
  // be contiguous (certificates built here always are).
  json pts = json::array();
  for (Nat i = 0; i < Nat(static_cast<unsigned long>(c.points.size())); ++i) {
    auto it = c.points.find(i);
    if (it == c.points.end())
      throw Error("ParseError", "certificate points must be contiguous");
    json vec = json::array();
    for (const auto& x : it->second)
      vec.push_back(json::array(
          {x.get_num().get_str(), x.get_den().get_str()}));
    pts.push_back(std::move(vec));
  }
  return {{"d", c.d}, {"points", std::move(pts)}, {"table", to_json(c.table)}};
}

inline Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.d = j.at("d").get<std::size_t>();
  unsigned long i = 0;
  for (const auto& vec : j.at("points")) {
    QVec v;
    for (const auto& x : vec) v.push_back(rational_from_json(x));
    c.points[Nat(i++)] = std::move(v);
  }
  c.table = table_from_json(j.at("table"));
  return c;
}

// ---------------------------------------------------------------------------
// Torus types

inline json to_json(const TorusPoint& p) {
  json coords = json::array();
  for (const auto& c : p.coords) coords.push_back(rational_to_json(c));
  return coords;
}

inline TorusPoint torus_point_from_json(const json& j) {
  QVec coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return TorusPoint(std::move(coords));
}

inline json to_json(const ConnectedTorusSubgroup& h) {
  return {{"n", h.ambient()}, {"annihilator", to_json(h.annihilator())}};
}

inline ConnectedTorusSubgroup subgroup_from_json(const json& j) {
  return ConnectedTorusSubgroup(j.at("n").get<std::size_t>(),
                                matrix_from_json(j.at("annihilator")));
}

// ---------------------------------------------------------------------------
// Supernatural numbers and prime sequences

inline json to_json(const Supernatural& s) {
  if (is_universal(s)) return {{"all_primes", true}};
  json exps = json::object();
  for (const auto& [p, e] : s.exponents)
    exps[p.get_str()] = e ? json(*e) : json("inf");
  return {{"default_infinite", s.default_infinite}, {"exponents", std::move(exps)}};
}

inline Supernatural supernatural_from_json(const json& j) {
  if (j.contains("all_primes") && j.at("all_primes").get<bool>())
    return Supernatural::universal();
  std::map<Int, std::optional<unsigned long>> exps;
  if (j.contains("exponents"))
    for (const auto& [key, val] : j.at("exponents").items()) {
      Int p = parse_int(key);
      if (val.is_string() && val.get<std::string>() == "inf")
        exps[p] = std::nullopt;
      else
        exps[p] = val.get<unsigned long>();
    }
  bool dinf = j.value("default_infinite", false);
  return Supernatural::from_exponents(dinf, std::move(exps));
}

inline json to_json(const PrimeSeqSpec& s) {
  json prefix = json::array();
  for (const auto& p : s.prefix) prefix.push_back(int_to_json(p));
  json tail;
  if (s.cycle) {
    json cyc = json::array();
    for (const auto& p : *s.cycle) cyc.push_back(int_to_json(p));
    tail = {{"cycle", std::move(cyc)}};
  } else {
    tail = {{"all_primes", true}};
  }
  return {{"prefix", std::move(prefix)}, {"tail", std::move(tail)}};
}

inline PrimeSeqSpec seq_spec_from_json(const json& j) {
  PrimeSeqSpec s;
  for (const auto& p : j.at("prefix")) s.prefix.push_back(int_from_json(p));
  const json& tail = j.at("tail");
  if (tail.contains("cycle")) {
    s.cycle = std::vector<Int>{};
    for (const auto& p : tail.at("cycle")) s.cycle->push_back(int_from_json(p));
  } else if (tail.value("all_primes", false)) {
    s.cycle = std::nullopt;
  } else {
    throw Error("ParseError", "tail must be a cycle or the all-primes marker");
  }
  s.validate();
  return s;
}

// ---------------------------------------------------------------------------
// Group expressions

inline json to_json(const GroupExpr& e) {
  switch (e.kind) {
    case GKind::Z:
      return json("Z");
    case GKind::T:
      return json("T");
    case GKind::Q:
      return json("Q");
    case GKind::Cyclic:
      return {{"cyclic", int_to_json(e.n)}};
    case GKind::Prufer:
      return {{"prufer", int_to_json(e.n)}};
    case GKind::PadicInt:
      return {{"padic_int", int_to_json(e.n)}};
    case GKind::Solenoid:
      return {{"solenoid", to_json(e.s)}};
    case GKind::QWithDenominators:
      return {{"q_with_denominators", to_json(e.s)}};
    case GKind::DirectSum: {
      json parts = json::array();
      for (const auto& c : e.children) parts.push_back(to_json(c));
      return {{"direct_sum", std::move(parts)}};
    }
    case GKind::Power:
      return {{"power",
               {{"base", to_json(e.children.front())},
                {"kind", e.pk == PowerKind::sum ? "sum" : "product"}}}};
  }
  throw InvalidState("unreachable");
}

inline GroupExpr expr_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "Z") return GroupExpr::z();
    if (s == "T") return GroupExpr::t();
    if (s == "Q") return GroupExpr::q();
    throw Error("ParseError", "unknown group literal '" + s + "'");
  }
  if (!j.is_object()) throw Error("ParseError", "expected a group expression");
  if (j.contains("cyclic")) return GroupExpr::cyclic(int_from_json(j.at("cyclic")));
  if (j.contains("prufer")) return GroupExpr::prufer(int_from_json(j.at("prufer")));
  if (j.contains("padic_int"))
    return GroupExpr::padic_int(int_from_json(j.at("padic_int")));
  if (j.contains("solenoid"))
    return GroupExpr::solenoid(supernatural_from_json(j.at("solenoid")));
  if (j.contains("q_with_denominators"))
    return GroupExpr::q_with_denominators(
        supernatural_from_json(j.at("q_with_denominators")));
  if (j.contains("direct_sum")) {
    std::vector<GroupExpr> parts;
    for (const auto& c : j.at("direct_sum")) parts.push_back(expr_from_json(c));
    return GroupExpr::direct_sum(std::move(parts));
  }
  if (j.contains("power")) {
    const json& p = j.at("power");
    const std::string kind = p.at("kind").get<std::string>();
    if (kind != "sum" && kind != "product")
      throw Error("ParseError", "power kind must be 'sum' or 'product'");
    return GroupExpr::power(expr_from_json(p.at("base")),
                            kind == "sum" ? PowerKind::sum : PowerKind::product);
  }
  throw Error("ParseError", "unknown group expression: " + j.dump());
}

inline json to_json(const PredicateVector& p) {
  return {{"compact", p.compact},       {"discrete", p.discrete},
          {"connected", p.connected},   {"torsion_free", p.torsion_free},
          {"divisible", p.divisible},   {"metrizable", p.metrizable},
          {"countable", p.countable}};
}

inline json to_json(const DualityLawReport& r) {
  auto law = [](const std::optional<bool>& b) {
    return b ? json(*b ? "pass" : "fail") : json("not-applicable");
  };
  return {{"law1_compact_metrizable_vs_discrete_countable",
           r.law1 ? "pass" : "fail"},
          {"law2_connected_vs_torsion_free", law(r.law2)},
          {"law3_torsion_free_vs_divisible", law(r.law3)},
          {"all_pass", r.all_pass()}};
}

inline json to_json(const UniversalSolenoidReport& r) {
  return {{"compact", r.compact},
          {"metrizable", r.metrizable},
          {"connected", r.connected},
          {"torsion_free", r.torsion_free},
          {"indecomposable", r.indecomposable},
          {"is_universal_solenoid", r.is_universal_solenoid()}};
}

// ---------------------------------------------------------------------------
// Axiom reports

inline json to_json(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::holds:
      return json("holds-on-defined-region");
    case AxiomStatus::violated:
      return json("violated");
    case AxiomStatus::undecided:
      return json("undecided");
  }
  throw InvalidState("unreachable");
}

inline json to_json(const AxiomReport& r) {
  json out;
  out["associativity"] = to_json(r.associativity);
  if (r.associativity_witness)
    out["associativity_witness"] = {(*r.associativity_witness)[0],
                                    (*r.associativity_witness)[1],
                                    (*r.associativity_witness)[2]};
  out["identity"] = to_json(r.identity);
  if (r.identity_witness)
    out["identity_witness"] = {r.identity_witness->first, r.identity_witness->second};
  out["commutativity"] = to_json(r.commutativity);
  if (r.commutativity_witness)
    out["commutativity_witness"] = {r.commutativity_witness->first,
                                    r.commutativity_witness->second};
  out["inverses"] = to_json(r.inverses);
  json inv = json::array();
  for (const auto& i : r.inverse_of) inv.push_back(i ? json(*i) : json(nullptr));
  out["inverse_of"] = std::move(inv);
  return out;
}

// ---------------------------------------------------------------------------
// Game records

inline json to_json(const WitnessRecord& w) {
  json out;
  out["round"] = w.round;
  if (w.req.type == Requirement::Type::divisibility) {
    out["type"] = "divisibility";
    out["n"] = int_to_json(w.req.a);
    out["k"] = int_to_json(w.req.b);
    out["witness"] = int_to_json(w.index_witness);
  } else {
    out["type"] = "common-multiple";
    out["k"] = int_to_json(w.req.a);
    out["l"] = int_to_json(w.req.b);
    out["witness"] = {int_to_json(w.pair_witness.first),
                      int_to_json(w.pair_witness.second)};
  }
  return out;
}

inline WitnessRecord witness_from_json(const json& j) {
  WitnessRecord w;
  w.round = j.at("round").get<std::size_t>();
  const std::string type = j.at("type").get<std::string>();
  if (type == "divisibility") {
    w.req.type = Requirement::Type::divisibility;
    w.req.a = int_from_json(j.at("n"));
    w.req.b = int_from_json(j.at("k"));
    w.index_witness = int_from_json(j.at("witness"));
  } else if (type == "common-multiple") {
    w.req.type = Requirement::Type::common_multiple;
    w.req.a = int_from_json(j.at("k"));
    w.req.b = int_from_json(j.at("l"));
    w.pair_witness = {int_from_json(j.at("witness").at(0)),
                      int_from_json(j.at("witness").at(1))};
  } else {
    throw Error("ParseError", "unknown requirement type '" + type + "'");
  }
  return w;
}

inline json to_json(const Transcript& t) {
  json moves = json::array();
  for (const auto& m : t.moves) {
    json mv;
    mv["clopen"] = to_json(m.clopen);
    mv["certificate"] = to_json(m.certificate);
    if (m.fulfilled) mv["fulfilled"] = to_json(*m.fulfilled);
    moves.push_back(std::move(mv));
  }
  json out;
  out["moves"] = std::move(moves);
  json reqs = json::array();
  for (const auto& r : t.requirements) reqs.push_back(to_json(r));
  out["requirements"] = std::move(reqs);
  out["final_permutation"] = to_json(t.final_permutation);
  return out;
}

inline Transcript transcript_from_json(const json& j) {
  Transcript t;
  for (const auto& mv : j.at("moves")) {
    Move m;
    m.clopen = table_from_json(mv.at("clopen"));
    m.certificate = certificate_from_json(mv.at("certificate"));
    if (mv.contains("fulfilled")) m.fulfilled = witness_from_json(mv.at("fulfilled"));
    t.moves.push_back(std::move(m));
  }
  if (j.contains("requirements"))
    for (const auto& r : j.at("requirements"))
      t.requirements.push_back(witness_from_json(r));
  if (j.contains("final_permutation"))
    t.final_permutation = permutation_from_json(j.at("final_permutation"));
  return t;
}

inline json to_json(const AuditReport& r) {
  return {{"nesting_ok", r.nesting_ok},
          {"certificates_ok", r.certificates_ok},
          {"witnesses_ok", r.witnesses_ok},
          {"torsion_free_ok", r.torsion_free_ok},
          {"failures", r.failures},
          {"pass", r.pass()}};
}

}  // namespace solena
