#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fivedual/group.hpp"
#include "fivedual/integer_matrix.hpp"

namespace fivedual {

/// A map of free right ZG-modules ZG^cols -> ZG^rows. Matrices act on
/// coordinate columns from the left and scalars act on the right, so the
/// same code is correct for non-abelian G.
class GRMatrix {
 public:
  GRMatrix(GroupPtr group, std::size_t rows, std::size_t cols);
  GRMatrix(GroupPtr group, std::size_t rows, std::size_t cols, std::vector<GroupRingElement> entries);

  static GRMatrix identity(const GroupPtr& group, std::size_t n);
  /// 1x1 matrix [x] (multiplication by x).
  static GRMatrix scalar(const GroupRingElement& x);
  /// n x n diagonal matrix with x on the diagonal.
  static GRMatrix diagonal(const GroupRingElement& x, std::size_t n);

  const GroupPtr& group() const { return group_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const GroupRingElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  GroupRingElement& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_identity() const;

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  GRMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Overwrites the block starting at (r0, c0) with `m`.
  void set_block(std::size_t r0, std::size_t c0, const GRMatrix& m);

  GRMatrix& operator+=(const GRMatrix& other);
  GRMatrix& operator-=(const GRMatrix& other);
  friend GRMatrix operator+(GRMatrix a, const GRMatrix& b) { return a += b; }
  friend GRMatrix operator-(GRMatrix a, const GRMatrix& b) { return a -= b; }
  GRMatrix operator-() const;

  bool operator==(const GRMatrix& other) const;

 private:
  GroupPtr group_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GroupRingElement> entries_;
};

/// Matrix product A * B over ZG.
GRMatrix gr_compose(const GRMatrix& a, const GRMatrix& b);
inline GRMatrix operator*(const GRMatrix& a, const GRMatrix& b) { return gr_compose(a, b); }

/// The dual map: transpose with every entry involuted. No signs.
GRMatrix dual_matrix(const GRMatrix& a);

/// [[A, 0], [0, B]].
GRMatrix direct_sum(const GRMatrix& a, const GRMatrix& b);

/// Replaces each entry a by the |G| x |G| integer matrix of v -> a v in the
/// basis of group elements in table order: M[k][h] = a_{k h^-1}. Coordinate
/// (s, g) of ZG^n maps to integer index s*|G| + g. With this basis
/// expand(dual(A)) is exactly transpose(expand(A)), and expansion is a ring
/// homomorphism.
IntegerMatrix expand_regular(const GRMatrix& a);

/// Coordinates of a ZG column vector (rows x 1) as an integer column.
IntegerMatrix expand_vector(const GRMatrix& column);

/// Inverse of expand_vector: integer column of length n*|G| to ZG^n.
GRMatrix fold_vector(const GroupPtr& group, const IntegerMatrix& column);

/// Entrywise augmentation (tensoring with the trivial module Z).
IntegerMatrix augment_matrix(const GRMatrix& a);

/// Some X over ZG with A * X = B, or nullopt. Each column of B is solved
/// as an integer system on expand_regular(A) and folded back.
std::optional<GRMatrix> solve_gr_linear(const GRMatrix& a, const GRMatrix& b);

/// Two-sided inverse of a square matrix, or nullopt when A is not invertible.
std::optional<GRMatrix> gr_inverse(const GRMatrix& a);

}  // namespace fivedual
