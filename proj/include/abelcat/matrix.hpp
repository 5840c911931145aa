#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace abelcat {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/* Floor division and the matching non-negative remainder, a mod b in [0,|b|). */
Int floor_div(const Int& a, const Int& b);
Int pos_mod(const Int& a, const Int& b);
/* Quotient rounded to the nearest integer, ties toward zero. */
Int nearest_div(const Int& a, const Int& b);
Int gcd_int(const Int& a, const Int& b);

/* Dense row-major matrix over Z.  Zero-row and zero-column shapes are legal
   everywhere; they show up constantly as maps in and out of the zero module. */
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix column(const IntVec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }
  const Int& at(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }

  bool operator==(const IntMatrix&) const = default;

  bool is_zero() const;
  bool is_identity() const;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Int& c) const;
  IntVec mul_vec(const IntVec& v) const;

  IntVec col_vec(std::size_t j) const;
  void set_col(std::size_t j, const IntVec& v);
  IntMatrix cols_slice(std::size_t from, std::size_t to) const;  // [from, to)

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /* row i += c * row j, and the column analogue */
  void row_axpy(std::size_t i, std::size_t j, const Int& c);
  void col_axpy(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  Int det() const;  // exact, Bareiss elimination

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  IntVec a_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/* Column-major vectorization; (r^T (x) I) vec(T) = vec(T r) under this choice. */
IntVec vec_of(const IntMatrix& m);
IntMatrix unvec(const IntVec& v, std::size_t rows, std::size_t cols);

}  // namespace abelcat
