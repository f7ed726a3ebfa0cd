#pragma once

// Integer-matrix normal forms: row Hermite form, Smith form, lattice
// saturation and integer kernels.  Conventions are fixed once and for all:
// HNF pivots are positive, entries above a pivot are reduced into
// [0, pivot), zero rows sink to the bottom — so equal lattices have equal
// basis matrices.  SNF diagonals are nonnegative with d1 | d2 | ... .

#include <cstddef>
#include <utility>
#include <vector>

#include "solena/matrix.hpp"

namespace solena {

struct HnfResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
};

inline HnfResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclidean elimination in column c below row r.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a.at(i, c) == 0) continue;
        if (best == rows || cmp(abs(a.at(i, c)), abs(a.at(best, c))) < 0) best = i;
      }
      if (best == rows) break;  // column clear
      a.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a.at(i, c) == 0) continue;
        Int q = a.at(i, c) / a.at(r, c);  // truncated division
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(r, j);
        for (std::size_t j = 0; j < rows; ++j)
          if (q != 0) u.at(i, j) -= q * u.at(r, j);
        if (a.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows && a.at(r, c) != 0) {
      if (a.at(r, c) < 0) {
        for (std::size_t j = 0; j < cols; ++j) a.at(r, j) = -a.at(r, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
      }
      for (std::size_t i = 0; i < r; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, c).get_mpz_t(), a.at(r, c).get_mpz_t());
        if (q == 0) continue;
        for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(r, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(i, j) -= q * u.at(r, j);
      }
      ++r;
    }
  }
  return {std::move(a), std::move(u)};
}

struct SnfResult {
  IntMatrix u;  // unimodular rows x rows
  IntMatrix d;  // diagonal, d1 | d2 | ..., nonnegative
  IntMatrix v;  // unimodular cols x cols, u * m * v == d
};

namespace detail {

// Smith form with the inverse of v tracked alongside (needed by saturate).
struct SnfFull {
  IntMatrix u, d, v, vinv;
};

inline SnfFull smith_full(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  IntMatrix vinv = IntMatrix::identity(cols);

  auto row_op = [&](std::size_t i, std::size_t r, const Int& q) {
    // row_i -= q * row_r
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(r, j);
    for (std::size_t j = 0; j < rows; ++j) u.at(i, j) -= q * u.at(r, j);
  };
  auto col_op = [&](std::size_t j, std::size_t c, const Int& q) {
    // col_j -= q * col_c;  vinv picks up the inverse op on rows.
    for (std::size_t i = 0; i < rows; ++i) a.at(i, j) -= q * a.at(i, c);
    for (std::size_t i = 0; i < cols; ++i) v.at(i, j) -= q * v.at(i, c);
    for (std::size_t i = 0; i < cols; ++i) vinv.at(c, i) += q * vinv.at(j, i);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // Find a pivot in the trailing submatrix.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows && pr == rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a.at(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    v.swap_cols(t, pc);
    vinv.swap_rows(t, pc);

    while (true) {
      // Clear column t with the smallest remaining entry as pivot.
      bool dirty = true;
      while (dirty) {
        dirty = false;
        std::size_t best = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a.at(i, t) != 0 &&
              (a.at(t, t) == 0 || cmp(abs(a.at(i, t)), abs(a.at(t, t))) < 0))
            best = i;
        if (best != t) {
          a.swap_rows(t, best);
          u.swap_rows(t, best);
        }
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a.at(i, t) == 0) continue;
          row_op(i, t, a.at(i, t) / a.at(t, t));
          if (a.at(i, t) != 0) dirty = true;
        }
      }
      // Clear row t similarly.
      dirty = true;
      while (dirty) {
        dirty = false;
        std::size_t best = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a.at(t, j) != 0 &&
              (a.at(t, t) == 0 || cmp(abs(a.at(t, j)), abs(a.at(t, t))) < 0))
            best = j;
        if (best != t) {
          a.swap_cols(t, best);
          v.swap_cols(t, best);
          vinv.swap_rows(t, best);
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a.at(t, j) == 0) continue;
          col_op(j, t, a.at(t, j) / a.at(t, t));
          if (a.at(t, j) != 0) dirty = true;
        }
      }
      // Column clearing may have disturbed the row (and vice versa).
      bool col_clear = true, row_clear = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a.at(i, t) != 0) col_clear = false;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a.at(t, j) != 0) row_clear = false;
      if (!col_clear || !row_clear) continue;

      // Enforce divisibility against the trailing block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols && fixed; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            row_op(t, i, Int(-1));  // add row i to row t, then re-eliminate
            fixed = false;
          }
      if (fixed) break;
    }

    if (a.at(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a.at(t, j) = -a.at(t, j);
      for (std::size_t j = 0; j < rows; ++j) u.at(t, j) = -u.at(t, j);
    }
  }
  return {std::move(u), std::move(a), std::move(v), std::move(vinv)};
}

}  // namespace detail

inline SnfResult smith_normal_form(const IntMatrix& m) {
  auto full = detail::smith_full(m);
  return {std::move(full.u), std::move(full.d), std::move(full.v)};
}

inline std::size_t rank(const IntMatrix& m) {
  auto h = hermite_normal_form(m).h;
  std::size_t r = 0;
  while (r < h.rows() && !h.row_is_zero(r)) ++r;
  return r;
}

// Canonical basis (HNF, zero rows dropped) of the lattice spanned by the rows.
inline IntMatrix lattice_basis(const IntMatrix& m) {
  auto h = hermite_normal_form(m).h;
  std::size_t r = 0;
  while (r < h.rows() && !h.row_is_zero(r)) ++r;
  IntMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(i, c) = h.at(i, c);
  return out;
}

// Basis of {v in Z^cols : k*v in rowspan(L) for some k >= 1}; the quotient
// by a saturated lattice is torsion-free.
inline IntMatrix saturate(const IntMatrix& l) {
  auto full = detail::smith_full(l);
  std::size_t r = 0;
  const std::size_t steps = std::min(l.rows(), l.cols());
  while (r < steps && full.d.at(r, r) != 0) ++r;
  // rowspan(L) = span of d_i * (row i of vinv); drop the multipliers.
  IntMatrix basis(r, l.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < l.cols(); ++c) basis.at(i, c) = full.vinv.at(i, c);
  return lattice_basis(basis);
}

// Saturated basis of {v : v * m == 0}: rows of U opposite the zero rows of H.
inline IntMatrix kernel_basis(const IntMatrix& m) {
  auto hu = hermite_normal_form(m);
  std::vector<ZVec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (hu.h.row_is_zero(r)) rows.push_back(hu.u.row(r));
  return lattice_basis(IntMatrix::from_rows(rows, m.rows()));
}

// True iff v lies in the lattice spanned by the rows of basis (basis in HNF).
inline bool lattice_contains(const IntMatrix& basis, const ZVec& v) {
  ZVec x = v;
  std::size_t row = 0;
  for (std::size_t c = 0; c < basis.cols() && row < basis.rows(); ++c) {
    // Pivot of `row`, if it is in column c.
    if (basis.at(row, c) == 0) continue;
    Int q = x[c] / basis.at(row, c);
    if (x[c] % basis.at(row, c) != 0) return false;
    for (std::size_t j = c; j < basis.cols(); ++j) x[j] -= q * basis.at(row, j);
    ++row;
  }
  for (const auto& e : x)
    if (e != 0) return false;
  return true;
}

}  // namespace solena
