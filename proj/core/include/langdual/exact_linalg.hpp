#pragma once

// Exact integer and rational linear algebra: Smith normal form, kernels,
// cokernels and coset enumeration for {x : Mx in L}. Nothing in here touches
// floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace langdual {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

// Dense row-major matrix with fixed dimensions. T is Integer or Rational.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<std::vector<T>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const;
  std::vector<T> column(std::size_t j) const;
  const std::vector<T>& entries() const { return data_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  std::vector<T> operator*(const std::vector<T>& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;

  // Vertical concatenation; column counts must agree.
  static Matrix stack(const std::vector<Matrix>& blocks);

  bool operator==(const Matrix& rhs) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntegerMatrix& m);
RationalVector to_rational(const IntegerVector& v);
// Throws InvalidArgument if any entry is not integral.
IntegerMatrix to_integer(const RationalMatrix& m);

// Finite abelian group in invariant-factor form: d1 | d2 | ... with every
// di >= 2. The empty list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  // Accepts any list of positive integers; entries equal to 1 are dropped and
  // the rest must already form a divisibility chain.
  explicit FiniteAbelianGroup(std::vector<Integer> invariant_factors);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }
  std::string to_string() const;  // "1", "Z/3", "Z/2 x Z/2"

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<Integer> factors_;
};

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
// The inverses of U and V are carried along because several callers need
// them and they are free to accumulate.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix V;
  IntegerMatrix D;
  IntegerMatrix U_inverse;
  IntegerMatrix V_inverse;

  std::size_t rank() const;
  std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);

// Bareiss fraction-free elimination.
Integer determinant(const IntegerMatrix& m);
Rational determinant(const RationalMatrix& m);

// Throws InvalidArgument when singular.
RationalMatrix inverse(const RationalMatrix& m);

// Z-basis of {v in Z^cols : Mv = 0}, returned as columns. Width is
// cols - rank(M). The basis spans a saturated sublattice.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

struct Cokernel {
  std::size_t free_rank = 0;
  FiniteAbelianGroup torsion;
};

// Z^rows / M Z^cols.
Cokernel cokernel(const IntegerMatrix& m);

// Basis (as columns) of the lattice generated by the columns of m.
IntegerMatrix column_lattice_basis(const IntegerMatrix& m);

// Whether v lies in the lattice spanned by the columns of a square,
// nonsingular basis matrix.
bool lattice_contains(const IntegerMatrix& basis, const IntegerVector& v);
bool lattice_contains(const IntegerMatrix& basis, const IntegerMatrix& generators);

// Cosets of {x in Q^n : Mx in L} modulo (ker_Q M + Z^n).
//
// L is given by a square nonsingular basis matrix whose columns span it and
// must contain M Z^n (so that reducing x modulo Z^n is meaningful).
// Representatives are reduced to [0, 1)^n and sorted lexicographically.
class LatticeCosets {
 public:
  const std::vector<RationalVector>& representatives() const { return reps_; }
  std::size_t size() const { return reps_.size(); }
  // Dimension of ker_Q M.
  std::size_t kernel_dimension() const { return kernel_dim_; }

  // True when Mx lies in L.
  bool is_solution(const RationalVector& x) const;
  // Index into representatives() of the coset containing x, or nullopt if x
  // is not a solution.
  std::optional<std::size_t> coset_index(const RationalVector& x) const;

 private:
  friend LatticeCosets solve_mod_lattice(const IntegerMatrix&, const IntegerMatrix&, bool);

  RationalVector key(const RationalVector& x) const;

  IntegerMatrix reduced_;    // N = L^{-1} M, integral
  IntegerMatrix v_inverse_;  // from the SNF of N
  std::vector<Integer> divisors_;
  std::size_t kernel_dim_ = 0;
  std::vector<RationalVector> reps_;
  std::vector<RationalVector> keys_;
};

// allow_kernel = false requests a finite point set: throws
// InfiniteSolutionSet if ker_Q M != 0.
LatticeCosets solve_mod_lattice(const IntegerMatrix& m, const IntegerMatrix& lattice_basis,
                                bool allow_kernel = true);
// L = Z^rows.
LatticeCosets solve_mod_lattice(const IntegerMatrix& m, bool allow_kernel = true);

// Fractional part in [0, 1).
Rational fractional_part(const Rational& q);
Integer floor(const Rational& q);

// Left inverse K+ of a full-column-rank integer matrix (K+ K = I), exact.
RationalMatrix left_inverse(const IntegerMatrix& k);

}  // namespace langdual
