#include "abelcat/snf.hpp"

namespace abelcat {

namespace {

struct Worker {
  IntMatrix a, u, uinv, v, vinv;

  explicit Worker(const IntMatrix& m)
      : a(m),
        u(IntMatrix::identity(m.rows())),
        uinv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        vinv(IntMatrix::identity(m.cols())) {}

  /* Each elementary operation is mirrored on u (resp. v) and inverted on
     uinv (resp. vinv), so a == u0 * m * v0 stays an invariant with
     u0 = uinv, v0 = vinv read the other way around: a = u*m*v throughout. */
  void row_swap(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    uinv.swap_cols(i, j);
  }
  void row_add(std::size_t i, std::size_t j, const Int& c) {  // row i += c * row j
    a.row_axpy(i, j, c);
    u.row_axpy(i, j, c);
    uinv.col_axpy(j, i, -c);
  }
  void row_neg(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    uinv.negate_col(i);
  }
  void col_swap(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    vinv.swap_rows(i, j);
  }
  void col_add(std::size_t i, std::size_t j, const Int& c) {  // col i += c * col j
    a.col_axpy(i, j, c);
    v.col_axpy(i, j, c);
    vinv.row_axpy(j, i, -c);
  }

  bool find_min_pivot(std::size_t t, std::size_t* pi, std::size_t* pj) const {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          *pi = i;
          *pj = j;
        }
      }
    return found;
  }

  /* Clear column t below the pivot and row t to its right.  Nearest-integer
     quotients keep intermediate entries small; nonzero remainders mean a
     smaller candidate pivot appeared, so the caller loops. */
  bool reduce_once(std::size_t t) {
    bool clean = true;
    const Int p = a.at(t, t);
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (a.at(i, t) == 0) continue;
      row_add(i, t, -nearest_div(a.at(i, t), p));
      if (a.at(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (a.at(t, j) == 0) continue;
      col_add(j, t, -nearest_div(a.at(t, j), p));
      if (a.at(t, j) != 0) clean = false;
    }
    return clean;
  }
};

}  // namespace

SnfResult snf(const IntMatrix& m) {
  Worker w(m);
  const std::size_t n = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  while (t < n) {
    std::size_t pi = 0, pj = 0;
    if (!w.find_min_pivot(t, &pi, &pj)) break;
    for (;;) {
      if (pi != t) w.row_swap(t, pi);
      if (pj != t) w.col_swap(t, pj);
      while (!w.reduce_once(t)) {
        if (!w.find_min_pivot(t, &pi, &pj)) break;
        if (pi != t) w.row_swap(t, pi);
        if (pj != t) w.col_swap(t, pj);
      }
      /* Pivot is now alone in its row and column.  Fold in any entry it
         fails to divide and go again; the pivot strictly shrinks, so this
         ends with d(t,t) dividing the whole remaining block. */
      const Int p = w.a.at(t, t);
      bool divides_all = true;
      for (std::size_t i = t + 1; divides_all && i < m.rows(); ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (w.a.at(i, j) % p != 0) {
            w.col_add(t, j, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
      pi = t;
      pj = t;
    }
    if (w.a.at(t, t) < 0) w.row_neg(t);
    ++t;
  }

  SnfResult r;
  r.u = std::move(w.u);
  r.u_inv = std::move(w.uinv);
  r.v = std::move(w.v);
  r.v_inv = std::move(w.vinv);
  r.d = std::move(w.a);
  for (std::size_t i = 0; i < n; ++i)
    if (r.d.at(i, i) != 0) ++r.rank;
#ifndef NDEBUG
  assert(r.u * m * r.v == r.d);
  assert((r.u * r.u_inv).is_identity());
  assert((r.v * r.v_inv).is_identity());
#endif
  return r;
}

std::optional<IntVec> solve_in_colspan(const SnfResult& s, const IntVec& rhs) {
  const std::size_t rows = s.u.rows(), cols = s.v.rows();
  assert(rhs.size() == rows);
  IntVec w = s.u.mul_vec(rhs);
  IntVec y(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Int di = s.diag(i);
    if (di != 0) {
      if (w[i] % di != 0) return std::nullopt;
      y[i] = w[i] / di;
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.mul_vec(y);
}

std::optional<IntVec> solve_in_colspan(const IntMatrix& m, const IntVec& rhs) {
  return solve_in_colspan(snf(m), rhs);
}

bool in_colspan(const SnfResult& s, const IntVec& v) {
  const std::size_t rows = s.u.rows();
  assert(v.size() == rows);
  IntVec w = s.u.mul_vec(v);
  for (std::size_t i = 0; i < rows; ++i) {
    Int di = s.diag(i);
    if (di != 0) {
      if (w[i] % di != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

IntMatrix kernel_basis(const SnfResult& s) {
  const std::size_t cols = s.v.rows();
  IntMatrix k(cols, cols - s.rank);
  for (std::size_t j = s.rank; j < cols; ++j)
    for (std::size_t i = 0; i < cols; ++i) k.at(i, j - s.rank) = s.v.at(i, j);
  return k;
}

IntMatrix kernel_basis(const IntMatrix& m) { return kernel_basis(snf(m)); }

IntMatrix colspan_basis(const SnfResult& s) {
  const std::size_t rows = s.u.rows();
  IntMatrix b(rows, s.rank);
  for (std::size_t j = 0; j < s.rank; ++j) {
    Int dj = s.d.at(j, j);
    for (std::size_t i = 0; i < rows; ++i) b.at(i, j) = s.u_inv.at(i, j) * dj;
  }
  return b;
}

IntMatrix colspan_basis(const IntMatrix& m) { return colspan_basis(snf(m)); }

namespace {

/* Unique row Hermite form: pivots positive and left-to-right, entries above a
   pivot reduced into [0, pivot), zero rows dropped. */
IntMatrix row_hnf(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r0 = 0;
  for (std::size_t j = 0; j < cols && r0 < rows; ++j) {
    for (;;) {
      std::size_t best = rows;
      Int bestabs = 0;
      std::size_t count = 0;
      for (std::size_t i = r0; i < rows; ++i) {
        if (a.at(i, j) == 0) continue;
        ++count;
        Int ax = abs(a.at(i, j));
        if (best == rows || ax < bestabs) {
          best = i;
          bestabs = ax;
        }
      }
      if (count == 0) goto next_col;
      if (count == 1) {
        a.swap_rows(r0, best);
        break;
      }
      for (std::size_t i = r0; i < rows; ++i) {
        if (i == best || a.at(i, j) == 0) continue;
        a.row_axpy(i, best, -nearest_div(a.at(i, j), a.at(best, j)));
      }
    }
    if (a.at(r0, j) < 0) a.negate_row(r0);
    for (std::size_t i = 0; i < r0; ++i) {
      Int q = floor_div(a.at(i, j), a.at(r0, j));
      a.row_axpy(i, r0, -q);
    }
    ++r0;
  next_col:;
  }
  IntMatrix h(r0, cols);
  for (std::size_t i = 0; i < r0; ++i)
    for (std::size_t j = 0; j < cols; ++j) h.at(i, j) = a.at(i, j);
  return h;
}

}  // namespace

IntMatrix hnf_colspan(const IntMatrix& m) { return row_hnf(m.transposed()).transposed(); }

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  assert(a.rows() == b.rows());
  return hnf_colspan(a) == hnf_colspan(b);
}

}  // namespace abelcat
