#pragma once

#include <optional>

#include "abelcat/matrix.hpp"

namespace abelcat {

/* Smith normal form  d = u * m * v  with u, v unimodular, d diagonal,
   d(0,0) | d(1,1) | ... and all diagonal entries non-negative.
   u_inv and v_inv are maintained alongside so that column-span bases and
   coordinate changes never need a separate inversion. */
struct SnfResult {
  IntMatrix u, d, v;
  IntMatrix u_inv, v_inv;
  std::size_t rank = 0;  // number of nonzero diagonal entries

  Int diag(std::size_t i) const {
    return (i < d.rows() && i < d.cols()) ? d.at(i, i) : Int(0);
  }
};

SnfResult snf(const IntMatrix& m);

/* One integral solution x of m x = rhs, or absent when rhs is outside the
   column span.  Free coordinates are set to zero. */
std::optional<IntVec> solve_in_colspan(const SnfResult& s, const IntVec& rhs);
std::optional<IntVec> solve_in_colspan(const IntMatrix& m, const IntVec& rhs);

bool in_colspan(const SnfResult& s, const IntVec& v);

/* Basis (as columns) of the integer kernel {x : m x = 0}. */
IntMatrix kernel_basis(const SnfResult& s);
IntMatrix kernel_basis(const IntMatrix& m);

/* Independent columns spanning the same column lattice as m. */
IntMatrix colspan_basis(const SnfResult& s);
IntMatrix colspan_basis(const IntMatrix& m);

/* Unique Hermite-form basis of the column lattice of m; equal lattices give
   byte-identical results, so this doubles as a lattice dictionary key. */
IntMatrix hnf_colspan(const IntMatrix& m);

bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

}  // namespace abelcat
