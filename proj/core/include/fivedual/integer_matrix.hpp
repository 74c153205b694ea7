#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "fivedual/group.hpp"

namespace fivedual {

/// Dense row-major matrix of arbitrary-precision integers. Zero-row and
/// zero-column matrices are valid and behave as maps to/from Z^0.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  /// Row-list literal, e.g. {{1, 0}, {0, 2}}. Every row must have the same length.
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;
  IntegerMatrix transpose() const;
  IntegerMatrix column(std::size_t j) const;
  IntegerMatrix row(std::size_t i) const;

  IntegerMatrix& operator+=(const IntegerMatrix& other);
  IntegerMatrix& operator-=(const IntegerMatrix& other);
  friend IntegerMatrix operator+(IntegerMatrix a, const IntegerMatrix& b) { return a += b; }
  friend IntegerMatrix operator-(IntegerMatrix a, const IntegerMatrix& b) { return a -= b; }
  IntegerMatrix operator-() const;
  IntegerMatrix scaled(const Integer& s) const;

  bool operator==(const IntegerMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

std::string to_string(const IntegerMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal in the rectangular sense.
/// `diagonal` lists the nonzero invariant factors d_1 | d_2 | ... (all > 0);
/// its length is the rank of A. The zero entries of D trail.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;
  std::vector<Integer> diagonal;

  std::size_t rank() const { return diagonal.size(); }
};

/// Minimum-absolute-value pivoting with gcd reduction in both directions.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Invariant factors only; skips accumulating the transforms.
std::vector<Integer> invariant_factors(const IntegerMatrix& a);

std::size_t integer_rank(const IntegerMatrix& a);

/// Some integral X with A * X = B, or nullopt when none exists. The
/// solution is the SNF back-substitution with all free variables zero, so
/// repeated calls give the same answer. Throws ShapeError if A.rows != B.rows.
std::optional<IntegerMatrix> solve_integer(const IntegerMatrix& a, const IntegerMatrix& b);

/// Columns form a Z-basis of {x : A x = 0}.
IntegerMatrix kernel_basis(const IntegerMatrix& a);

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... with t_i | t_{i+1}.
struct AbelianGroupInfo {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }
  bool operator==(const AbelianGroupInfo& other) const = default;
};

std::string to_string(const AbelianGroupInfo& group);

/// ker(outgoing) / im(incoming) for Z^m --incoming--> Z^n --outgoing--> Z^k.
/// Throws DomainError if outgoing * incoming != 0, ShapeError on bad shapes.
AbelianGroupInfo homology_pair(const IntegerMatrix& incoming, const IntegerMatrix& outgoing);

}  // namespace fivedual
