#pragma once

// Pontryagin duality over a grammar of locally compact abelian groups:
// structural dual rules, a predicate table of textbook facts, the duality
// biconditionals as genuine cross-checks, and the grammar-level
// characterization of the universal solenoid.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solena/supernatural.hpp"

namespace solena {

enum class GKind {
  Z,
  T,  // the circle group
  Q,
  Cyclic,
  Prufer,
  PadicInt,
  Solenoid,
  QWithDenominators,
  DirectSum,
  Power,
};

enum class PowerKind { sum, product };

struct GroupExpr {
  GKind kind = GKind::Z;
  Int n = 0;                  // Cyclic order or prime for Prufer/PadicInt
  Supernatural s;             // Solenoid / QWithDenominators
  std::vector<GroupExpr> children;  // DirectSum (>= 1) or Power (exactly 1)
  PowerKind pk = PowerKind::sum;

  static GroupExpr of_kind(GKind k) {
    GroupExpr e;
    e.kind = k;
    return e;
  }
  static GroupExpr z() { return of_kind(GKind::Z); }
  static GroupExpr t() { return of_kind(GKind::T); }
  static GroupExpr q() { return of_kind(GKind::Q); }
  static GroupExpr cyclic(const Int& n) {
    if (n < 1) throw Error("InvalidExpr", "cyclic order must be >= 1");
    GroupExpr e = of_kind(GKind::Cyclic);
    e.n = n;
    return e;
  }
  static GroupExpr prufer(const Int& p) {
    if (!is_prime(p)) throw NonPrimeInput("Prufer parameter " + p.get_str());
    GroupExpr e = of_kind(GKind::Prufer);
    e.n = p;
    return e;
  }
  static GroupExpr padic_int(const Int& p) {
    if (!is_prime(p)) throw NonPrimeInput("p-adic parameter " + p.get_str());
    GroupExpr e = of_kind(GKind::PadicInt);
    e.n = p;
    return e;
  }
  static GroupExpr solenoid(Supernatural s) {
    GroupExpr e = of_kind(GKind::Solenoid);
    e.s = std::move(s);
    return e;
  }
  static GroupExpr q_with_denominators(Supernatural s) {
    GroupExpr e = of_kind(GKind::QWithDenominators);
    e.s = std::move(s);
    return e;
  }
  static GroupExpr direct_sum(std::vector<GroupExpr> parts) {
    if (parts.empty()) throw Error("InvalidExpr", "direct sum of nothing");
    GroupExpr e = of_kind(GKind::DirectSum);
    e.children = std::move(parts);
    return e;
  }
  static GroupExpr power(GroupExpr base, PowerKind pk) {
    GroupExpr e = of_kind(GKind::Power);
    e.children.push_back(std::move(base));
    e.pk = pk;
    return e;
  }

  bool operator==(const GroupExpr& o) const {
    if (kind != o.kind || n != o.n || pk != o.pk) return false;
    if (!(s == o.s)) return false;
    return children == o.children;
  }
};

// Total order on expression trees, used to sort direct summands.
inline int compare(const GroupExpr& a, const GroupExpr& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.n != b.n) return a.n < b.n ? -1 : 1;
  if (!(a.s == b.s)) return a.s < b.s ? -1 : 1;
  if (a.pk != b.pk) return a.pk < b.pk ? -1 : 1;
  if (a.children.size() != b.children.size())
    return a.children.size() < b.children.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (int c = compare(a.children[i], b.children[i])) return c;
  return 0;
}

inline bool is_trivial(const GroupExpr& e) {
  return e.kind == GKind::Cyclic && e.n == 1;
}

// Canonical form standing in for "canonically isomorphic": flatten nested
// sums, drop trivial factors, sort summands, collapse degenerate powers,
// and rewrite Q-with-all-denominators as Q.
inline GroupExpr normalize(const GroupExpr& e) {
  switch (e.kind) {
    case GKind::QWithDenominators:
      if (is_universal(e.s)) return GroupExpr::q();
      return e;
    case GKind::DirectSum: {
      std::vector<GroupExpr> flat;
      for (const auto& c : e.children) {
        GroupExpr nc = normalize(c);
        if (is_trivial(nc)) continue;
        if (nc.kind == GKind::DirectSum)
          for (auto& g : nc.children) flat.push_back(std::move(g));
        else
          flat.push_back(std::move(nc));
      }
      if (flat.empty()) return GroupExpr::cyclic(1);
      if (flat.size() == 1) return flat.front();
      std::sort(flat.begin(), flat.end(),
                [](const GroupExpr& a, const GroupExpr& b) { return compare(a, b) < 0; });
      return GroupExpr::direct_sum(std::move(flat));
    }
    case GKind::Power: {
      GroupExpr base = normalize(e.children.front());
      if (is_trivial(base)) return base;
      return GroupExpr::power(std::move(base), e.pk);
    }
    default:
      return e;
  }
}

// ---------------------------------------------------------------------------
// Predicates

struct PredicateVector {
  bool compact = false;
  bool discrete = false;
  bool connected = false;
  bool torsion_free = false;
  bool divisible = false;
  bool metrizable = false;
  bool countable = false;

  bool operator==(const PredicateVector& o) const = default;
};

// Structural recursion over the fixed rule table of textbook facts.
inline PredicateVector predicates(const GroupExpr& e) {
  switch (e.kind) {
    case GKind::Z:
      return {false, true, false, true, false, true, true};
    case GKind::T:
      return {true, false, true, false, true, true, false};
    case GKind::Q:
      return {false, true, false, true, true, true, true};
    case GKind::Cyclic: {
      bool triv = e.n == 1;
      return {true, true, triv, triv, triv, true, true};
    }
    case GKind::Prufer:
      return {false, true, false, false, true, true, true};
    case GKind::PadicInt:
      return {true, false, false, true, false, true, false};
    case GKind::Solenoid:
      return {true, false, true, is_universal(e.s), true, true, false};
    case GKind::QWithDenominators:
      return {false, true, false, true, is_universal(e.s), true, true};
    case GKind::DirectSum: {
      PredicateVector out{true, true, true, true, true, true, true};
      for (const auto& c : e.children) {
        PredicateVector p = predicates(c);
        out.compact &= p.compact;
        out.discrete &= p.discrete;
        out.connected &= p.connected;
        out.torsion_free &= p.torsion_free;
        out.divisible &= p.divisible;
        out.metrizable &= p.metrizable;
        out.countable &= p.countable;
      }
      return out;
    }
    case GKind::Power: {
      PredicateVector p = predicates(e.children.front());
      bool triv = is_trivial(normalize(e.children.front()));
      PredicateVector out;
      out.torsion_free = p.torsion_free;
      out.divisible = p.divisible;
      if (e.pk == PowerKind::product) {
        out.compact = p.compact;
        out.connected = p.connected;
        out.metrizable = p.metrizable;
        out.discrete = triv;
        out.countable = triv;
      } else {
        // Countable direct sum: discrete iff the base is discrete, and a sum
        // of nontrivial discrete groups is neither compact nor connected.
        out.discrete = p.discrete;
        out.countable = p.countable;
        out.compact = triv;
        out.connected = triv;
        out.metrizable = p.discrete;
      }
      if (triv) return predicates(GroupExpr::cyclic(1));
      return out;
    }
  }
  throw InvalidState("unreachable");
}

// ---------------------------------------------------------------------------
// The dual

inline GroupExpr dual(const GroupExpr& e) {
  switch (e.kind) {
    case GKind::Z:
      return GroupExpr::t();
    case GKind::T:
      return GroupExpr::z();
    case GKind::Q:
      return GroupExpr::solenoid(Supernatural::universal());
    case GKind::Cyclic:
      return GroupExpr::cyclic(e.n);
    case GKind::Prufer:
      return GroupExpr::padic_int(e.n);
    case GKind::PadicInt:
      return GroupExpr::prufer(e.n);
    case GKind::Solenoid:
      return normalize(GroupExpr::q_with_denominators(e.s));
    case GKind::QWithDenominators:
      return GroupExpr::solenoid(e.s);
    case GKind::DirectSum: {
      std::vector<GroupExpr> parts;
      parts.reserve(e.children.size());
      for (const auto& c : e.children) parts.push_back(dual(c));
      return normalize(GroupExpr::direct_sum(std::move(parts)));
    }
    case GKind::Power: {
      const GroupExpr& base = e.children.front();
      PredicateVector p = predicates(base);
      if (e.pk == PowerKind::product) {
        // Dual of a countable product of compact groups is the direct sum
        // of the duals; without compactness the rule's hypothesis fails.
        if (!p.compact) throw NonCompactProduct();
        return GroupExpr::power(dual(base), PowerKind::sum);
      }
      if (!p.discrete)
        throw NonCompactProduct(
            "dual of an infinite direct sum needs a discrete base");
      return GroupExpr::power(dual(base), PowerKind::product);
    }
  }
  throw InvalidState("unreachable");
}

inline bool double_dual_is_identity(const GroupExpr& e) {
  return normalize(dual(dual(e))) == normalize(e);
}

// ---------------------------------------------------------------------------
// Duality laws (the property biconditionals)

struct DualityLawReport {
  // (1) compact & metrizable <=> dual discrete & countable (unconditional);
  // (2) connected <=> dual torsion-free and (3) torsion-free <=> dual
  // divisible both under the compactness hypothesis.
  bool law1 = true;
  std::optional<bool> law2, law3;

  bool all_pass() const {
    return law1 && law2.value_or(true) && law3.value_or(true);
  }
};

inline DualityLawReport check_duality_laws(const GroupExpr& e) {
  DualityLawReport rep;
  PredicateVector p = predicates(e);
  PredicateVector d = predicates(dual(e));
  rep.law1 = (p.compact && p.metrizable) == (d.discrete && d.countable);
  if (p.compact) {
    rep.law2 = p.connected == d.torsion_free;
    rep.law3 = p.torsion_free == d.divisible;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Indecomposability and the universal solenoid

// Grammar-level assignment backed by the composant argument: products of
// two or more nondegenerate continua are decomposable, circles are, and
// solenoids are not.
inline bool is_indecomposable(const GroupExpr& e) {
  PredicateVector p = predicates(e);
  if (!p.compact || !p.connected)
    throw NotAContinuum();
  GroupExpr n = normalize(e);
  switch (n.kind) {
    case GKind::Solenoid:
      return true;
    case GKind::T:
      return false;  // the union of two arcs
    case GKind::Cyclic:
      return false;  // the trivial group is degenerate
    case GKind::DirectSum:
      // Normalization dropped trivial factors; two or more remain.
      return false;
    case GKind::Power:
      // A countable product of nondegenerate continua.
      return false;
    default:
      throw NotAContinuum();
  }
}

struct UniversalSolenoidReport {
  bool compact = false;
  bool metrizable = false;
  bool connected = false;
  bool torsion_free = false;
  bool indecomposable = false;

  bool is_universal_solenoid() const {
    return compact && metrizable && connected && torsion_free && indecomposable;
  }
};

// True exactly on expressions equal, after normalization, to the solenoid
// with every prime infinitely often (abelian is implicit in the grammar).
inline UniversalSolenoidReport characterize_universal_solenoid(const GroupExpr& e) {
  UniversalSolenoidReport rep;
  PredicateVector p = predicates(e);
  rep.compact = p.compact;
  rep.metrizable = p.metrizable;
  rep.connected = p.connected;
  rep.torsion_free = p.torsion_free;
  if (p.compact && p.connected) rep.indecomposable = is_indecomposable(e);
  return rep;
}

}  // namespace solena
