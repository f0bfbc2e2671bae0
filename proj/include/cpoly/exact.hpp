// Exact integer and rational linear algebra.
//
// Everything in cpoly that decides membership, feasibility or unimodularity
// goes through the types in this header. There is no floating point
// anywhere in the library.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpoly {

using Integer = mpz_class;
using Rational = mpq_class;

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  template <class Int>
  static Matrix from_rows(const std::vector<std::vector<Int>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = T(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  std::vector<T> operator*(const std::vector<T>& x) const {
    if (cols_ != x.size()) throw std::invalid_argument("Matrix-vector product: dimension mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
    return out;
  }

  bool operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "\n[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]";
  }
  return os;
}

RatMatrix to_rational(const IntMatrix& m);

/// left * M * right == diagonal, with diagonal entries d_i >= 0 and d_i | d_{i+1};
/// left and right are unimodular.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(IntMatrix m);

std::size_t rank(RatMatrix m);

/// Basis of the integer kernel {x in Z^n : M x = 0}, as columns of the
/// unimodular right factor of the Smith form.
std::vector<std::vector<Integer>> integer_kernel_basis(const IntMatrix& m);

struct AffineSolution {
  RatVector particular;
  std::vector<RatVector> kernel;
};

/// Exact description of {x : A x = b}, or nullopt when the system is
/// inconsistent. Free variables are set to zero in the particular solution,
/// and the kernel vectors are the standard RREF null-space basis.
std::optional<AffineSolution> solve_rational(const RatMatrix& a, const RatVector& b);

/// Unique solution of a square nonsingular system, nullopt if singular.
std::optional<RatVector> solve_square(RatMatrix a, RatVector b);

/// One linear constraint `coeffs . x (op) rhs`.
struct Constraint {
  RatVector coeffs;
  Rational rhs;
};

/// Equalities a.x = b, weak inequalities a.x <= b and strict inequalities
/// a.x < b over Q^dim.
struct LinearSystem {
  std::size_t dim = 0;
  std::vector<Constraint> equalities;
  std::vector<Constraint> weak;
  std::vector<Constraint> strict;

  explicit LinearSystem(std::size_t d = 0) : dim(d) {}

  void add_equality(RatVector coeffs, Rational rhs);
  void add_weak(RatVector coeffs, Rational rhs);
  void add_strict(RatVector coeffs, Rational rhs);

  bool satisfied_by(const RatVector& x) const;

  /// The same system with every strict inequality made weak.
  LinearSystem closure() const;
};

/// A point satisfying every constraint (strict ones strictly), or nullopt.
/// Exact two-phase simplex maximizing a slack margin on the strict rows.
std::optional<RatVector> lp_feasible(const LinearSystem& sys);

/// Feasibility by Fourier-Motzkin elimination. Independent of lp_feasible;
/// exponential, meant for small instances.
bool fourier_motzkin_feasible(const LinearSystem& sys);

/// Vertices of the bounded polyhedron {equalities, weak}. Strict rows are not
/// allowed. Output is sorted and duplicate-free.
std::vector<RatVector> enumerate_vertices(const LinearSystem& sys);

Rational dot(const RatVector& a, const RatVector& b);

/// Scales a rational vector to the primitive integer vector with the same
/// direction (zero stays zero).
std::vector<Integer> primitive_integer(const RatVector& v);

/// Converts to int64, throwing std::overflow_error when out of range.
std::int64_t to_int64(const Integer& z);

}  // namespace cpoly
