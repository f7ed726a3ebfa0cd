#pragma once

// Exact geometry in finite-dimensional windows of the infinite torus:
// the weighted metric, closed connected subgroups as saturated annihilator
// lattices, certified-approximate Hausdorff distances, the winding-circle
// delta-net construction and finite-level solenoid approximants.
//
// Window distances are simultaneously distances in the infinite torus for
// subgroups padded with zeros, since the tail coordinates then contribute
// nothing.  Only projections of groups with unknown tails need the extra
// 2^-m allowance (the tail weighs at most sum 2^-i * 1/2 = 2^-m), which
// callers fold into their bounds.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "solena/normal_form.hpp"
#include "solena/rational.hpp"

namespace solena {

// ---------------------------------------------------------------------------
// Points and metrics

struct TorusPoint {
  QVec coords;  // each in [0, 1)

  TorusPoint() = default;
  explicit TorusPoint(QVec c) : coords(std::move(c)) {
    for (auto& x : coords) x = mod1(x);
  }
  std::size_t dim() const { return coords.size(); }
  bool is_zero() const {
    for (const auto& x : coords)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const TorusPoint& o) const = default;
};

// Circle metric: min(|a-b|, 1-|a-b|), diameter 1/2.
inline Rational d_circle(const Rational& a, const Rational& b) {
  Rational t = abs(mod1(a) - mod1(b));
  Rational wrap = Rational(1) - t;
  return std::min(t, wrap);
}

// Weighted metric on a torus window: sum of 2^-i d_circle over coordinates.
inline Rational d_T(const TorusPoint& x, const TorusPoint& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("d_T on unequal dimensions");
  Rational acc = 0;
  Rational weight = 1;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    acc += weight * d_circle(x.coords[i], y.coords[i]);
    weight /= 2;
  }
  return acc;
}

// Squared Euclidean distance with per-coordinate wraparound.
inline Rational euclidean_sq(const TorusPoint& x, const TorusPoint& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch();
  Rational acc = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Rational d = d_circle(x.coords[i], y.coords[i]);
    acc += d * d;
  }
  return acc;
}

inline TorusPoint scale_point(const Rational& t, const ZVec& w) {
  QVec c(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) c[i] = mod1(t * Rational(w[i]));
  return TorusPoint(std::move(c));
}

// ---------------------------------------------------------------------------
// Closed connected subgroups of finite tori

struct WindingCircle {
  ZVec w;  // primitive: gcd of entries is 1

  explicit WindingCircle(ZVec v) : w(std::move(v)) {
    Int g = 0;
    for (const auto& x : w) g = gcd(g, x);
    if (g != 1) throw Error("NotPrimitive", "winding vector must be primitive");
  }
  std::size_t dim() const { return w.size(); }
  TorusPoint point_at(const Rational& t) const { return scale_point(t, w); }
};

class ConnectedTorusSubgroup {
 public:
  // Rows of `annihilator` are integer characters vanishing on the subgroup;
  // the stored form is the saturated HNF basis, so connectedness and
  // canonical equality hold by construction.
  ConnectedTorusSubgroup(std::size_t n, const IntMatrix& annihilator_rows)
      : n_(n), ann_(saturate(annihilator_rows)) {
    if (annihilator_rows.rows() > 0 && annihilator_rows.cols() != n)
      throw DimensionMismatch("annihilator characters live in Z^n");
    if (annihilator_rows.rows() == 0) ann_ = IntMatrix(0, n);
    tangent_ = kernel_basis(ann_.rows() ? ann_.transposed() : IntMatrix(n, 0));
  }

  static ConnectedTorusSubgroup full(std::size_t n) {
    return ConnectedTorusSubgroup(n, IntMatrix(0, n));
  }
  static ConnectedTorusSubgroup trivial(std::size_t n) {
    return ConnectedTorusSubgroup(n, IntMatrix::identity(n));
  }
  static ConnectedTorusSubgroup from_circle(const WindingCircle& c) {
    IntMatrix col(c.dim(), 1);
    for (std::size_t i = 0; i < c.dim(); ++i) col.at(i, 0) = c.w[i];
    return ConnectedTorusSubgroup(c.dim(), kernel_basis(col));
  }

  std::size_t ambient() const { return n_; }
  const IntMatrix& annihilator() const { return ann_; }
  // Basis of the parameter lattice: the subgroup is the image of [0,1)^dim
  // under t -> sum t_j b_j (mod 1).
  const IntMatrix& tangent() const { return tangent_; }
  std::size_t dimension() const { return n_ - ann_.rows(); }

  bool operator==(const ConnectedTorusSubgroup& o) const {
    return n_ == o.n_ && ann_ == o.ann_;
  }

 private:
  std::size_t n_;
  IntMatrix ann_;
  IntMatrix tangent_;
};

inline std::size_t dimension(const ConnectedTorusSubgroup& h) {
  return h.dimension();
}

// Exact membership: every annihilator character must pair integrally.
inline bool membership(const TorusPoint& x, const ConnectedTorusSubgroup& h) {
  if (x.dim() != h.ambient()) throw DimensionMismatch("membership dimensions");
  const IntMatrix& a = h.annihilator();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational pairing = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
      pairing += Rational(a.at(r, c)) * x.coords[c];
    if (pairing.get_den() != 1) return false;
  }
  return true;
}

// H x {0}^(m-n): annihilator extended by the standard characters on the new
// coordinates.
inline ConnectedTorusSubgroup project_and_pad(const ConnectedTorusSubgroup& h,
                                              std::size_t m) {
  if (m < h.ambient()) throw DimensionMismatch("cannot pad into fewer coordinates");
  const std::size_t n = h.ambient();
  const IntMatrix& a = h.annihilator();
  IntMatrix rows(a.rows() + (m - n), m);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) rows.at(r, c) = a.at(r, c);
  for (std::size_t t = 0; t < m - n; ++t) rows.at(a.rows() + t, n + t) = 1;
  return ConnectedTorusSubgroup(m, rows);
}

// ---------------------------------------------------------------------------
// Certified-approximate Hausdorff distance

struct HausdorffEstimate {
  Rational estimate;
  Rational error_bound;  // true d_H lies within estimate +/- error_bound
};

namespace detail {

inline std::vector<TorusPoint> sample_subgroup(const ConnectedTorusSubgroup& h,
                                               const Rational& mesh) {
  const IntMatrix& b = h.tangent();
  const std::size_t dim = b.rows(), n = h.ambient();
  if (dim == 0) return {TorusPoint(QVec(n, Rational(0)))};
  // Parameter grid {0, mesh, 2 mesh, ...} in each of the dim directions.
  unsigned long steps = 1;
  {
    Rational inv = 1 / mesh;
    Int ceilinv = floor_q(inv);
    if (Rational(ceilinv) < inv) ceilinv += 1;
    steps = ceilinv.get_ui();
  }
  std::vector<TorusPoint> out;
  std::vector<unsigned long> idx(dim, 0);
  while (true) {
    QVec coords(n, Rational(0));
    for (std::size_t j = 0; j < dim; ++j) {
      Rational t = Rational(static_cast<long>(idx[j])) * mesh;
      for (std::size_t c = 0; c < n; ++c)
        coords[c] += t * Rational(b.at(j, c));
    }
    out.emplace_back(std::move(coords));
    std::size_t j = 0;
    while (j < dim && ++idx[j] == steps) idx[j++] = 0;
    if (j == dim) break;
  }
  return out;
}

// d_T-diameter of one parameter-mesh cell of the sampling above.
inline Rational cell_diameter(const ConnectedTorusSubgroup& h, const Rational& mesh) {
  const IntMatrix& b = h.tangent();
  Rational acc = 0, weight = 1;
  const Rational half(1, 2);
  for (std::size_t c = 0; c < h.ambient(); ++c) {
    Rational span = 0;
    for (std::size_t j = 0; j < b.rows(); ++j) span += Rational(abs(b.at(j, c)));
    Rational cell = mesh * span;
    acc += weight * std::min(cell, half);
    weight /= 2;
  }
  return acc;
}

// max over p in ps of min over q in qs of d_T(p, q), exact.  A strided
// prescan locates a good neighborhood, a ring scan from that anchor does
// the rest, and a p is abandoned as soon as its minimum cannot raise the
// running maximum.  The scan order only affects cost: the returned maximum
// is the exact discrete value.
inline Rational directed_hausdorff(const std::vector<TorusPoint>& ps,
                                   const std::vector<TorusPoint>& qs) {
  Rational best_max = -1;
  const std::size_t n = ps.size(), m = qs.size();
  const std::size_t qstride = std::max<std::size_t>(1, m / 256);
  const std::size_t pstride = std::max<std::size_t>(1, n / 64);
  // Visit the outer points in strided order: the running maximum then
  // reaches its final neighborhood after a few points, and later points
  // abandon their scans almost immediately.
  for (std::size_t phase = 0; phase < pstride; ++phase)
    for (std::size_t pi = phase; pi < n; pi += pstride) {
      const TorusPoint& p = ps[pi];
      Rational best = -1;
      std::size_t anchor = 0;
      bool settled = false;
      for (std::size_t q = 0; q < m; q += qstride) {
        Rational d = d_T(p, qs[q]);
        if (best < 0 || d < best) {
          best = d;
          anchor = q;
        }
        if (best_max >= 0 && best <= best_max) {
          settled = true;
          break;
        }
      }
      for (std::size_t off = 1; off < m && !settled; ++off) {
        // Ring scan: anchor+1, anchor-1, anchor+2, ... modulo m.
        std::size_t q = (off % 2 == 1) ? (anchor + (off + 1) / 2) % m
                                       : (anchor + m - ((off / 2) % m)) % m;
        Rational d = d_T(p, qs[q]);
        if (d < best) best = d;
        // Once this point's minimum is at or below the running maximum it
        // cannot raise it; the maximum stays exact.
        if (best_max >= 0 && best <= best_max) settled = true;
      }
      if (best > best_max) best_max = best;
    }
  return best_max < 0 ? Rational(0) : best_max;
}

}  // namespace detail

// Discrete two-sided Hausdorff estimate from mesh samples of each subgroup,
// plus the certified error (the larger of the two mesh-cell diameters).
inline HausdorffEstimate hausdorff_distance(const ConnectedTorusSubgroup& h1,
                                            const ConnectedTorusSubgroup& h2,
                                            const Rational& mesh) {
  if (h1.ambient() != h2.ambient())
    throw DimensionMismatch("hausdorff_distance dimensions");
  if (mesh <= 0) throw Error("ParseError", "mesh must be positive");
  auto s1 = detail::sample_subgroup(h1, mesh);
  auto s2 = detail::sample_subgroup(h2, mesh);
  Rational est = std::max(detail::directed_hausdorff(s1, s2),
                          detail::directed_hausdorff(s2, s1));
  Rational err = std::max(detail::cell_diameter(h1, mesh),
                          detail::cell_diameter(h2, mesh));
  return {est, err};
}

// ---------------------------------------------------------------------------
// The circle delta-net in S^1^k

struct CircleNet {
  Int n;            // grid refinement: smallest N with N^2 delta^2 > k
  TorusPoint x;     // (1/N, 1/N^2, ..., 1/N^k), a torsion point of order N^k
  WindingCircle circle;  // w = (N^(k-1), ..., N, 1); x = (1/N^k) w
};

inline CircleNet circle_net(std::size_t k, const Rational& delta) {
  if (k == 0) throw DimensionMismatch("net dimension must be >= 1");
  if (delta <= 0) throw Error("ParseError", "delta must be positive");
  // Exact integer comparison N^2 p^2 > k q^2 for delta = p/q avoids square
  // roots; ties cannot occur for k that are not perfect squares, and the
  // strict inequality rules the boundary out otherwise.
  const Int p = delta.get_num(), q = delta.get_den();
  const Int rhs = Int(static_cast<unsigned long>(k)) * q * q;
  Int n = 1;
  while (n * n * p * p <= rhs) ++n;

  QVec coords(k);
  ZVec w(k);
  Int power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    power *= n;
    coords[i] = make_rational(1, power);
  }
  Int wp = 1;
  for (std::size_t i = k; i-- > 0;) {
    w[i] = wp;
    wp *= n;
  }
  return {n, TorusPoint(std::move(coords)), WindingCircle(std::move(w))};
}

struct CubeWitness {
  Int m;  // the multiplier j_1 + j_2 N + ... + j_k N^(k-1)
  TorusPoint point;  // m*x, coordinate i inside [j_i/N, (j_i+1)/N]
};

inline CubeWitness grid_cube_witness(std::size_t k, const Int& n,
                                     const std::vector<Int>& j) {
  if (j.size() != k) throw DimensionMismatch("tuple arity");
  for (const auto& ji : j)
    if (ji < 0 || ji >= n)
      throw IndexOutOfRange("grid indices must satisfy 0 <= j_i < N");
  Int m = 0, power = 1;
  for (std::size_t i = 0; i < k; ++i) {
    m += j[i] * power;
    power *= n;
  }
  QVec coords(k);
  Int np = 1;
  for (std::size_t i = 0; i < k; ++i) {
    np *= n;
    coords[i] = mod1(make_rational(m, np));
  }
  return {m, TorusPoint(std::move(coords))};
}

// The 1-parameter subgroup through a rational point: clear denominators and
// divide by the content.
struct CircleThrough {
  WindingCircle circle;
  Rational t;  // parameter with t * w == x exactly
};

inline CircleThrough circle_through(const TorusPoint& x) {
  if (x.is_zero()) throw ZeroPoint();
  Int l = 1;
  for (const auto& c : x.coords) l = lcm(l, Int(c.get_den()));
  ZVec w(x.dim());
  Int g = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Rational s = Rational(l) * x.coords[i];
    s.canonicalize();
    w[i] = s.get_num();
    g = gcd(g, w[i]);
  }
  for (auto& c : w) c /= g;
  return {WindingCircle(std::move(w)), make_rational(g, l)};
}

// ---------------------------------------------------------------------------
// Finite-level solenoid approximants

// The circle {s v} in S^1^(n+m) with v = (P w, P/p_1, P/(p_1 p_2), ..., 1):
// its projection to the first n coordinates is the base circle, and the
// appended coordinates satisfy the bonding relations t_i = p_{i+1} t_{i+1}.
inline ConnectedTorusSubgroup solenoid_approximant(const WindingCircle& s0,
                                                   const std::vector<Int>& primes) {
  for (const auto& p : primes)
    if (!is_prime(p)) throw NonPrimeInput("not prime: " + p.get_str());
  const std::size_t n = s0.dim(), m = primes.size();
  Int big_p = 1;
  for (const auto& p : primes) big_p *= p;
  ZVec v(n + m);
  for (std::size_t i = 0; i < n; ++i) v[i] = big_p * s0.w[i];
  Int tail = big_p;
  for (std::size_t i = 0; i < m; ++i) {
    tail /= primes[i];
    v[n + i] = tail;
  }
  return ConnectedTorusSubgroup::from_circle(WindingCircle(std::move(v)));
}

// Winding vector of a finite-level approximant (handy for parameterizing).
inline ZVec solenoid_winding(const WindingCircle& s0, const std::vector<Int>& primes) {
  Int big_p = 1;
  for (const auto& p : primes) big_p *= p;
  ZVec v(s0.dim() + primes.size());
  for (std::size_t i = 0; i < s0.dim(); ++i) v[i] = big_p * s0.w[i];
  Int tail = big_p;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    tail /= primes[i];
    v[s0.dim() + i] = tail;
  }
  return v;
}

}  // namespace solena
