#pragma once

// Constructive density machinery: embedding torsion-free fragments into
// rational vector spaces, the base-K collapse of Q^(N) onto Q with
// injectivity on the support of a clopen set, and the divisibility /
// common-multiple witnesses that drive the genericity arguments.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "solena/normal_form.hpp"
#include "solena/table_space.hpp"

namespace solena {

// ---------------------------------------------------------------------------
// Finitely generated presentations into Q^r

struct FGGroupPresentation {
  std::size_t generators = 0;
  IntMatrix relations;  // rows are relators in Z^generators
};

struct FGEmbedding {
  std::size_t rank = 0;
  IntMatrix map;  // generators x rank; generator i maps to row i
};

// Injective homomorphism of Z^g / rowspan(relations) into Q^rank, when the
// quotient is torsion-free; throws TorsionQuotient otherwise.
inline FGEmbedding embed_fg_group(const FGGroupPresentation& p) {
  const std::size_t g = p.generators;
  if (p.relations.rows() > 0 && p.relations.cols() != g)
    throw DimensionMismatch("relations must live in Z^generators");
  if (p.relations.rows() == 0) {
    // Free case: generators map to the standard basis.
    return {g, IntMatrix::identity(g)};
  }
  auto s = smith_normal_form(p.relations);
  const std::size_t steps = std::min(s.d.rows(), s.d.cols());
  std::size_t t = 0;
  for (; t < steps; ++t) {
    const Int& d = s.d.at(t, t);
    if (d == 0) break;
    if (d != 1) throw TorsionQuotient(d.get_str());
  }
  // rowspan(relations) = span of the first t rows of V^-1; the quotient is
  // coordinatized by the last g - t columns of V.
  const std::size_t r = g - t;
  IntMatrix map(g, r);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t c = 0; c < r; ++c) map.at(i, c) = s.v.at(i, t + c);
  return {r, map};
}

// ---------------------------------------------------------------------------
// The base-K collapse Q^d -> Q

// N is the product of the distinct reduced denominators occurring among the
// coordinates; scaling by N makes every vector integral.
inline std::pair<Int, std::vector<ZVec>> clear_denominators(
    const std::vector<QVec>& vs) {
  std::set<Int> dens;
  for (const auto& v : vs)
    for (const auto& x : v)
      if (x != 0 && x.get_den() != 1) dens.insert(x.get_den());
  Int n = 1;
  for (const auto& d : dens) n *= d;
  std::vector<ZVec> scaled;
  scaled.reserve(vs.size());
  for (const auto& v : vs) {
    ZVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rational s = Rational(n) * v[i];
      s.canonicalize();
      if (s.get_den() != 1) throw InvalidState("clear_denominators failed");
      w[i] = s.get_num();
    }
    scaled.push_back(std::move(w));
  }
  return {n, std::move(scaled)};
}

// Smallest K with K > 2 * max |coordinate| (and K >= 2 on degenerate input).
inline Int choose_K(const std::vector<ZVec>& vs) {
  Int m = 0;
  for (const auto& v : vs)
    for (const auto& x : v) m = std::max(m, Int(abs(x)));
  if (m == 0) return 2;
  return 2 * m + 1;
}

// phi(v) = sum_i K^i v_i; an additive map Z^d -> Z.
inline Int base_K_hom(const Int& k, const ZVec& v) {
  if (k < 2) throw Error("ParseError", "base must be >= 2");
  Int acc = 0, power = 1;
  for (const auto& x : v) {
    acc += power * x;
    power *= k;
  }
  return acc;
}

struct InjectivityResult {
  bool injective = true;
  // On failure: a pair of distinct vectors with equal images.
  std::optional<std::pair<ZVec, ZVec>> counterexample;
};

inline InjectivityResult injective_on(const std::vector<ZVec>& vs, const Int& k) {
  std::map<Int, const ZVec*> images;
  for (const auto& v : vs) {
    Int img = base_K_hom(k, v);
    auto [it, inserted] = images.try_emplace(img, &v);
    if (!inserted && *it->second != v) return {false, {{*it->second, v}}};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Certificates: rational realizations of clopen sets

struct Certificate {
  std::size_t d = 1;
  std::map<Nat, QVec> points;  // indices {0..k} plus extras named by the table
  PartialTable table;

  static Certificate trivial() {
    Certificate c;
    c.points[Nat(0)] = QVec{Rational(0)};
    c.table = PartialTable::trivial();
    return c;
  }
};

inline void validate_certificate(const Certificate& c) {
  if (c.d == 0) throw InvalidCertificate("ambient dimension must be >= 1");
  auto it0 = c.points.find(Nat(0));
  if (it0 == c.points.end() || !is_zero(it0->second))
    throw InvalidCertificate("points[0] must be the zero vector");
  for (const auto& [idx, v] : c.points)
    if (v.size() != c.d) throw InvalidCertificate("point dimension mismatch");
  if (!c.table.is_total()) throw InvalidCertificate("table must be total on its square");
  for (std::size_t i = 0; i <= c.table.k; ++i)
    if (!c.points.count(Nat(static_cast<unsigned long>(i))))
      throw InvalidCertificate("window index " + std::to_string(i) + " has no point");
  for (const auto& [ij, m] : c.table.entries) {
    auto mt = c.points.find(m);
    if (mt == c.points.end())
      throw InvalidCertificate("table value " + m.get_str() + " has no point");
    const QVec sum = c.points.at(Nat(static_cast<unsigned long>(ij.first))) +
                     c.points.at(Nat(static_cast<unsigned long>(ij.second)));
    if (sum != mt->second)
      throw InvalidCertificate("additivity fails at (" + std::to_string(ij.first) +
                               "," + std::to_string(ij.second) + ")");
  }
  std::map<QVec, Nat> rev;
  for (const auto& [idx, v] : c.points)
    if (!rev.emplace(v, idx).second)
      throw InvalidCertificate("points are not injective");
}

struct RealizedPatch {
  FinitePermutation nu;
  TablePtr oracle;  // canonical Q table transported by nu
};

// Lands the certificate's clopen set inside the canonical Q table: collapse
// the points to distinct rationals with the N / K / base-K pipeline, then
// transport the canonical table by the finite permutation matching those
// rationals' indices to the certificate's own indices.
inline RealizedPatch realize_patch(const Certificate& c) {
  validate_certificate(c);

  std::vector<Nat> indices;
  std::vector<QVec> pts;
  indices.reserve(c.points.size());
  for (const auto& [idx, v] : c.points) {
    indices.push_back(idx);
    pts.push_back(v);
  }
  auto [n, scaled] = clear_denominators(pts);
  Int k = choose_K(scaled);
  std::vector<std::pair<Nat, Nat>> pairs;  // canonical index -> certificate index
  std::set<Nat> sources;
  for (std::size_t t = 0; t < indices.size(); ++t) {
    Int image = base_K_hom(k, scaled[t]);
    Nat src = q_index(Rational(image));
    if (!sources.insert(src).second)
      throw InvalidState("base-K collapse failed to separate the points");
    pairs.emplace_back(src, indices[t]);
  }

  // Complete the partial injection to a finite permutation of the combined
  // support: domain points still lacking an image are the certificate
  // indices never hit as canonical indices, and the values still to be hit
  // are the canonical indices never used as certificate indices.  Matching
  // the two (equally long, sorted) lists in increasing order is the fixed
  // deterministic completion.
  std::set<Nat> targets;
  for (const auto& [src, dst] : pairs) targets.insert(dst);
  std::vector<Nat> unmatched_domain, unmatched_values;
  for (const auto& t : targets)
    if (!sources.count(t)) unmatched_domain.push_back(t);
  for (const auto& s : sources)
    if (!targets.count(s)) unmatched_values.push_back(s);
  std::vector<std::pair<Nat, Nat>> all = pairs;
  for (std::size_t i = 0; i < unmatched_domain.size(); ++i)
    all.emplace_back(unmatched_domain[i], unmatched_values[i]);

  std::vector<std::pair<Nat, Nat>> nontrivial;
  for (const auto& [a, b] : all)
    if (a != b) nontrivial.emplace_back(a, b);
  auto nu = FinitePermutation::from_pairs(nontrivial);
  return {nu, apply_permutation(canonical_q_table(), nu)};
}

// ---------------------------------------------------------------------------
// Divisibility and common-multiple witnesses

// Smallest m <= bound with k*m = n under the table, if any.  Witnesses are
// unique in a torsion-free group, so the table's rational realization gives
// the answer of the bounded search directly.
inline std::optional<Nat> divisibility_witness(const GroupTable& t, const Nat& n,
                                               const Int& k, const Nat& bound) {
  if (k <= 0) throw Error("ParseError", "divisor must be positive");
  QVec target = Rational(1, k) * t.value(n);
  auto m = t.index_of(target);
  if (!m || *m > bound) return std::nullopt;
  return m;
}

// Nonzero integers (m, n) with |m|, |n| <= bound and m*k = n*l under the
// table; positive pairs are preferred and returned whenever they exist.
inline std::optional<std::pair<Int, Int>> common_multiple_witness(
    const GroupTable& t, const Nat& k, const Nat& l, const Nat& bound) {
  if (k == 0 || l == 0) throw Error("ParseError", "indices must be nonzero");
  if (k == l) return {{Int(1), Int(1)}};
  QVec u = t.value(k), v = t.value(l);
  if (is_zero(u) || is_zero(v)) return std::nullopt;  // not a valid enumeration
  // Need m*u = n*v, i.e. u and v parallel with ratio n/m.
  Rational lambda = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v[i] == 0) {
      if (u[i] != 0) return std::nullopt;
      continue;
    }
    Rational r = u[i] / v[i];
    if (lambda == 0)
      lambda = r;
    else if (r != lambda)
      return std::nullopt;
  }
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != lambda * v[i]) return std::nullopt;
  // u = (p/q) v: minimal solution m = q, n = p (made positive-m).
  Int m = lambda.get_den(), n = lambda.get_num();
  if (m < 0) {
    m = -m;
    n = -n;
  }
  if (abs(m) > bound || abs(n) > bound) return std::nullopt;
  return {{m, n}};
}

}  // namespace solena
