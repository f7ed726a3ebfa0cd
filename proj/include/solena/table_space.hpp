#pragma once

// The space of abelian group operations on N: finite partial tables (the
// basic clopen sets), the group axioms on a window, linear-constraint
// evaluation, the permutation action of S_inf fixing 0, and the canonical
// total tables for Z, Q and Z^d.
//
// Total group operations are points of a Polish space, i.e. infinite
// objects; they are represented as enumerated subgroups of Q^d, which makes
// every operation here exact.  Indices are arbitrary-precision naturals:
// under the fixed bijection N -> Q the table value of a pair of modest
// indices can be astronomically far out in the enumeration.

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "solena/enumeration.hpp"
#include "solena/rational.hpp"

namespace solena {

// ---------------------------------------------------------------------------
// Partial tables (basic clopen sets)

struct PartialTable {
  std::size_t k = 0;
  // Total on {0..k}^2; values are unconstrained naturals.
  std::map<std::pair<std::size_t, std::size_t>, Nat> entries;

  static PartialTable trivial() {
    PartialTable t;
    t.entries[{0, 0}] = 0;
    return t;
  }

  bool is_total() const {
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j)
        if (!entries.count({i, j})) return false;
    return true;
  }

  const Nat& at(std::size_t i, std::size_t j) const {
    auto it = entries.find({i, j});
    if (it == entries.end())
      throw IndexOutOfRange("table entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ") undefined");
    return it->second;
  }

  bool defined(std::size_t i, std::size_t j) const { return entries.count({i, j}); }

  // True when `ext` agrees with *this on the smaller square.
  bool extends(const PartialTable& base) const {
    if (k < base.k) return false;
    for (const auto& [ij, v] : base.entries) {
      auto it = entries.find(ij);
      if (it == entries.end() || it->second != v) return false;
    }
    return true;
  }

  bool operator==(const PartialTable& o) const = default;
};

// supp of the clopen set: {1..k} together with all table values.
inline std::set<Nat> supp(const PartialTable& t) {
  std::set<Nat> s;
  for (std::size_t i = 1; i <= t.k; ++i) s.insert(Nat(static_cast<unsigned long>(i)));
  for (const auto& [ij, v] : t.entries) s.insert(v);
  return s;
}

// ---------------------------------------------------------------------------
// Axioms on a window

enum class AxiomStatus { holds, violated, undecided };

struct AxiomReport {
  // Associativity: checked for triples whose intermediate products land
  // inside the window.
  AxiomStatus associativity = AxiomStatus::holds;
  std::optional<std::array<std::size_t, 3>> associativity_witness;

  AxiomStatus identity = AxiomStatus::holds;
  std::optional<std::pair<std::size_t, std::size_t>> identity_witness;

  // Inverses may live beyond the window, so this axiom is never `violated`.
  AxiomStatus inverses = AxiomStatus::holds;
  std::vector<std::optional<std::size_t>> inverse_of;  // per element 0..k

  AxiomStatus commutativity = AxiomStatus::holds;
  std::optional<std::pair<std::size_t, std::size_t>> commutativity_witness;

  bool all_hold() const {
    return associativity == AxiomStatus::holds && identity == AxiomStatus::holds &&
           commutativity == AxiomStatus::holds;
  }
};

inline AxiomReport check_axioms(const PartialTable& t) {
  AxiomReport rep;
  const std::size_t k = t.k;

  for (std::size_t j = 0; j <= k && rep.identity == AxiomStatus::holds; ++j) {
    if (t.at(0, j) != Nat(static_cast<unsigned long>(j))) {
      rep.identity = AxiomStatus::violated;
      rep.identity_witness = {std::size_t{0}, j};
    } else if (t.at(j, 0) != Nat(static_cast<unsigned long>(j))) {
      rep.identity = AxiomStatus::violated;
      rep.identity_witness = {j, std::size_t{0}};
    }
  }

  for (std::size_t i = 0; i <= k && rep.commutativity == AxiomStatus::holds; ++i)
    for (std::size_t j = i + 1; j <= k; ++j)
      if (t.at(i, j) != t.at(j, i)) {
        rep.commutativity = AxiomStatus::violated;
        rep.commutativity_witness = {i, j};
        break;
      }

  for (std::size_t a = 0; a <= k && rep.associativity == AxiomStatus::holds; ++a)
    for (std::size_t b = 0; b <= k && rep.associativity == AxiomStatus::holds; ++b)
      for (std::size_t c = 0; c <= k; ++c) {
        const Nat& ab = t.at(a, b);
        const Nat& bc = t.at(b, c);
        if (ab > static_cast<unsigned long>(k) || bc > static_cast<unsigned long>(k))
          continue;  // intermediate escapes the window
        if (t.at(ab.get_ui(), c) != t.at(a, bc.get_ui())) {
          rep.associativity = AxiomStatus::violated;
          rep.associativity_witness = {a, b, c};
          break;
        }
      }

  rep.inverse_of.assign(k + 1, std::nullopt);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j)
      if (t.at(i, j) == 0 && t.at(j, i) == 0) {
        rep.inverse_of[i] = j;
        break;
      }
  for (const auto& inv : rep.inverse_of)
    if (!inv) rep.inverses = AxiomStatus::undecided;

  return rep;
}

// ---------------------------------------------------------------------------
// Total tables: enumerated subgroups of Q^d

class GroupTable {
 public:
  virtual ~GroupTable() = default;

  // Dimension of the value space Q^d.
  virtual std::size_t ambient_dim() const = 0;
  // The enumeration e : N -> Q^d (injective group homomorphism image).
  virtual QVec value(const Nat& i) const = 0;
  // Partial inverse of the enumeration: nullopt if v is not a group element.
  virtual std::optional<Nat> index_of(const QVec& v) const = 0;

  // The group operation: index of e(i) + e(j).
  Nat apply(const Nat& i, const Nat& j) const {
    auto idx = index_of(value(i) + value(j));
    if (!idx)
      throw InvalidState("group table is not closed under addition");
    return *idx;
  }

  Nat inverse(const Nat& i) const {
    auto idx = index_of(-value(i));
    if (!idx) throw InvalidState("group table has no inverse for an element");
    return *idx;
  }

  // n-fold multiple of element i, signed: negative n uses the inverse.
  Nat multiple(const Int& n, const Nat& i) const {
    QVec target = Rational(n) * value(i);
    auto idx = index_of(target);
    if (!idx) throw InvalidState("group table is not closed under multiples");
    return *idx;
  }
};

using TablePtr = std::shared_ptr<const GroupTable>;

// (N, +) enumerated as 0, 1, -1, 2, -2, ...  (the canonical copy of Z).
class CanonicalZTable final : public GroupTable {
 public:
  std::size_t ambient_dim() const override { return 1; }
  QVec value(const Nat& i) const override { return {Rational(z_value(i))}; }
  std::optional<Nat> index_of(const QVec& v) const override {
    if (v.size() != 1) throw DimensionMismatch();
    if (v[0].get_den() != 1) return std::nullopt;
    return z_index(v[0].get_num());
  }
};

// (Q, +) under the fixed bijection built on the Calkin-Wilf enumeration.
class CanonicalQTable final : public GroupTable {
 public:
  std::size_t ambient_dim() const override { return 1; }
  QVec value(const Nat& i) const override { return {q_value(i)}; }
  std::optional<Nat> index_of(const QVec& v) const override {
    if (v.size() != 1) throw DimensionMismatch();
    return q_index(v[0]);
  }
};

// Z^d under the coordinatewise enumeration paired with Cantor's function.
class ZVectorTable final : public GroupTable {
 public:
  explicit ZVectorTable(std::size_t d) : d_(d) {
    if (d == 0) throw DimensionMismatch("rank must be >= 1");
  }
  std::size_t ambient_dim() const override { return d_; }
  QVec value(const Nat& i) const override {
    ZVec z = zvec_value(i, d_);
    QVec out(d_);
    for (std::size_t c = 0; c < d_; ++c) out[c] = Rational(z[c]);
    return out;
  }
  std::optional<Nat> index_of(const QVec& v) const override {
    if (v.size() != d_) throw DimensionMismatch();
    ZVec z(d_);
    for (std::size_t c = 0; c < d_; ++c) {
      if (v[c].get_den() != 1) return std::nullopt;
      z[c] = v[c].get_num();
    }
    return zvec_index(z);
  }

 private:
  std::size_t d_;
};

inline TablePtr canonical_z_table() { return std::make_shared<CanonicalZTable>(); }
inline TablePtr canonical_q_table() { return std::make_shared<CanonicalQTable>(); }
inline TablePtr z_vector_table(std::size_t d) {
  return std::make_shared<ZVectorTable>(d);
}

// The canonical group-operation oracle on N isomorphic to (Q, +).
inline Nat canonical_rational_table(const Nat& i, const Nat& j) {
  static const CanonicalQTable table;
  return table.apply(i, j);
}

// Restriction of a total table to the window {0..k}^2.
inline PartialTable window(const GroupTable& t, std::size_t k) {
  PartialTable out;
  out.k = k;
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j)
      out.entries[{i, j}] = t.apply(Nat(static_cast<unsigned long>(i)),
                                    Nat(static_cast<unsigned long>(j)));
  return out;
}

// ---------------------------------------------------------------------------
// The action of permutations of N fixing 0

class FinitePermutation {
 public:
  FinitePermutation() = default;

  static FinitePermutation from_pairs(const std::vector<std::pair<Nat, Nat>>& pairs) {
    FinitePermutation p;
    std::set<Nat> domain, range;
    for (const auto& [a, b] : pairs) {
      if (a == 0 || b == 0)
        throw Error("InvalidPermutation", "permutations must fix 0");
      if (!domain.insert(a).second)
        throw Error("InvalidPermutation", "duplicate domain entry");
      if (!range.insert(b).second)
        throw Error("InvalidPermutation", "duplicate range entry");
      if (a != b) p.fwd_[a] = b;
    }
    for (const auto& [a, b] : p.fwd_) p.bwd_[b] = a;
    if (domain != range)
      throw Error("InvalidPermutation", "mapping is not a permutation of its support");
    return p;
  }

  Nat apply(const Nat& n) const {
    auto it = fwd_.find(n);
    return it == fwd_.end() ? n : it->second;
  }

  Nat apply_inverse(const Nat& n) const {
    auto it = bwd_.find(n);
    return it == bwd_.end() ? n : it->second;
  }

  bool is_identity() const { return fwd_.empty(); }

  // Composition acting left-to-right: (mu . nu)(x) = mu(nu(x)).
  FinitePermutation after(const FinitePermutation& nu) const {
    std::set<Nat> support;
    for (const auto& [a, b] : fwd_) support.insert(a);
    for (const auto& [a, b] : nu.fwd_) support.insert(a);
    FinitePermutation out;
    for (const auto& a : support) {
      Nat b = apply(nu.apply(a));
      if (b != a) out.fwd_[a] = b;
    }
    for (const auto& [a, b] : out.fwd_) out.bwd_[b] = a;
    return out;
  }

  const std::map<Nat, Nat>& mapping() const { return fwd_; }

 private:
  std::map<Nat, Nat> fwd_, bwd_;
};

// The transported operation h_nu(G)(i, j) = nu(G(nu^-1 i, nu^-1 j)); nu is
// an isomorphism between the underlying groups.
class PermutedTable final : public GroupTable {
 public:
  PermutedTable(TablePtr base, FinitePermutation nu)
      : base_(std::move(base)), nu_(std::move(nu)) {}
  std::size_t ambient_dim() const override { return base_->ambient_dim(); }
  QVec value(const Nat& i) const override {
    return base_->value(nu_.apply_inverse(i));
  }
  std::optional<Nat> index_of(const QVec& v) const override {
    auto idx = base_->index_of(v);
    if (!idx) return std::nullopt;
    return nu_.apply(*idx);
  }
  const FinitePermutation& permutation() const { return nu_; }

 private:
  TablePtr base_;
  FinitePermutation nu_;
};

inline TablePtr apply_permutation(TablePtr t, const FinitePermutation& nu) {
  return std::make_shared<PermutedTable>(std::move(t), nu);
}

// ---------------------------------------------------------------------------
// Linear constraints (the clopen basis of Proposition-style conditions)

struct LinearForm {
  std::vector<Int> coeffs;  // over variables x_1..x_n
};

struct LinearConstraint {
  LinearForm form;
  std::vector<Nat> args;  // a_1..a_n, indices
  Nat target;
};

struct LinearConstraintSet {
  std::vector<LinearConstraint> equalities;     // U_i(a) = b_i
  std::vector<LinearConstraint> disequalities;  // V_j(a) != c_j
};

enum class EvalStatus { satisfied, violated, undetermined };

struct EvalOutcome {
  EvalStatus status = EvalStatus::satisfied;
  // On violation: which constraint (index, equality flag) failed.
  std::optional<std::pair<bool, std::size_t>> witness;
};

namespace detail {

// Evaluate a linear form on a partial table by repeated applications.
// Returns nullopt when the evaluation escapes the window.
inline std::optional<Nat> eval_form_partial(const PartialTable& t,
                                            const LinearConstraint& c) {
  if (c.form.coeffs.size() != c.args.size())
    throw DimensionMismatch("constraint arity mismatch");
  auto add = [&](const Nat& x, const Nat& y) -> std::optional<Nat> {
    if (x > static_cast<unsigned long>(t.k) || y > static_cast<unsigned long>(t.k))
      return std::nullopt;
    return t.at(x.get_ui(), y.get_ui());
  };
  auto inverse_in_window = [&](const Nat& x) -> std::optional<Nat> {
    if (x > static_cast<unsigned long>(t.k)) return std::nullopt;
    for (std::size_t j = 0; j <= t.k; ++j)
      if (t.at(x.get_ui(), j) == 0 && t.at(j, x.get_ui()) == 0)
        return Nat(static_cast<unsigned long>(j));
    return std::nullopt;
  };
  Nat acc = 0;
  for (std::size_t u = 0; u < c.args.size(); ++u) {
    Int coeff = c.form.coeffs[u];
    if (coeff == 0) continue;
    Nat term = c.args[u];
    if (coeff < 0) {
      auto inv = inverse_in_window(term);
      if (!inv) return std::nullopt;
      term = *inv;
      coeff = -coeff;
    }
    for (Int s = 0; s < coeff; ++s) {
      auto next = add(acc, term);
      if (!next) return std::nullopt;
      acc = *next;
    }
  }
  return acc;
}

inline Nat eval_form_total(const GroupTable& t, const LinearConstraint& c) {
  if (c.form.coeffs.size() != c.args.size())
    throw DimensionMismatch("constraint arity mismatch");
  QVec acc(t.ambient_dim(), Rational(0));
  for (std::size_t u = 0; u < c.args.size(); ++u)
    acc = acc + Rational(c.form.coeffs[u]) * t.value(c.args[u]);
  auto idx = t.index_of(acc);
  if (!idx) throw InvalidState("linear form escapes the group");
  return *idx;
}

}  // namespace detail

inline EvalOutcome eval_constraints(const PartialTable& t,
                                    const LinearConstraintSet& cs) {
  EvalOutcome out;
  bool undetermined = false;
  for (std::size_t i = 0; i < cs.equalities.size(); ++i) {
    auto v = detail::eval_form_partial(t, cs.equalities[i]);
    if (!v) {
      undetermined = true;
      continue;
    }
    if (*v != cs.equalities[i].target) return {EvalStatus::violated, {{true, i}}};
  }
  for (std::size_t j = 0; j < cs.disequalities.size(); ++j) {
    auto v = detail::eval_form_partial(t, cs.disequalities[j]);
    if (!v) {
      undetermined = true;
      continue;
    }
    if (*v == cs.disequalities[j].target) return {EvalStatus::violated, {{false, j}}};
  }
  if (undetermined) return {EvalStatus::undetermined, {}};
  return out;
}

inline EvalOutcome eval_constraints(const GroupTable& t,
                                    const LinearConstraintSet& cs) {
  for (std::size_t i = 0; i < cs.equalities.size(); ++i)
    if (detail::eval_form_total(t, cs.equalities[i]) != cs.equalities[i].target)
      return {EvalStatus::violated, {{true, i}}};
  for (std::size_t j = 0; j < cs.disequalities.size(); ++j)
    if (detail::eval_form_total(t, cs.disequalities[j]) == cs.disequalities[j].target)
      return {EvalStatus::violated, {{false, j}}};
  return {};
}

// ---------------------------------------------------------------------------
// Torsion witnesses

// First (n, k) in lexicographic order with n, k in [1, bound] and k*n = 0,
// multiples taken by repeated table application inside the window.
inline std::optional<std::pair<Nat, Nat>> torsion_witness_search(
    const PartialTable& t, unsigned long bound) {
  for (unsigned long n = 1; n <= bound && n <= t.k; ++n) {
    Nat acc = n;
    for (unsigned long k = 2; k <= bound; ++k) {
      if (acc > static_cast<unsigned long>(t.k)) break;  // escapes: semi-decision
      acc = t.at(acc.get_ui(), n);
      if (acc == 0) return {{Nat(n), Nat(k)}};
    }
  }
  return std::nullopt;
}

inline std::optional<std::pair<Nat, Nat>> torsion_witness_search(
    const GroupTable& t, unsigned long bound) {
  for (unsigned long n = 1; n <= bound; ++n) {
    Nat acc = n;
    for (unsigned long k = 2; k <= bound; ++k) {
      acc = t.apply(acc, Nat(n));
      if (acc == 0) return {{Nat(n), Nat(k)}};
    }
  }
  return std::nullopt;
}

}  // namespace solena
