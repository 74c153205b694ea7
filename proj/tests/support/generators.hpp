#pragma once

// Seeded random inputs and small conversions shared by the test suites.

#include <random>
#include <vector>

#include "fivedual/complex.hpp"
#include "oracle.hpp"

namespace testgen {

using namespace fivedual;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed5eedULL);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Cyclic groups of order 1..12 together with a few non-cyclic tables.
inline std::vector<GroupPtr> small_groups() {
  std::vector<GroupPtr> gs;
  for (std::size_t n = 1; n <= 12; ++n) gs.push_back(cyclic_group(n));
  gs.push_back(group_from_table(oracle::klein_four_table()));
  gs.push_back(group_from_table(oracle::symmetric_three_table()));
  gs.push_back(group_from_table(oracle::units_mod_table(15)));  // C2 x C4
  gs.push_back(group_from_table(oracle::units_mod_table(24)));  // C2^3
  return gs;
}

inline GroupPtr random_group() {
  static const auto groups = small_groups();
  return groups[static_cast<std::size_t>(uniform(0, static_cast<long>(groups.size()) - 1))];
}

inline GroupRingElement random_element(const GroupPtr& g, long bound = 3) {
  GroupRingElement a(g);
  for (std::size_t i = 0; i < g->order(); ++i) a[i] = uniform(-bound, bound);
  return a;
}

inline GRMatrix random_gr_matrix(const GroupPtr& g, std::size_t rows, std::size_t cols, long bound = 2) {
  GRMatrix m(g, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element(g, bound);
  return m;
}

inline IntegerMatrix random_integer_matrix(std::size_t rows, std::size_t cols, long bound = 9) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
  return m;
}

inline oracle::Mat to_oracle(const IntegerMatrix& m) {
  oracle::Mat out = oracle::zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

/// I + r E_ab and its inverse I - r E_ab (a != b), over ZG.
inline std::pair<GRMatrix, GRMatrix> random_elementary(const GroupPtr& g, std::size_t n) {
  auto p = GRMatrix::identity(g, n), q = GRMatrix::identity(g, n);
  if (n < 2) return {p, q};
  const auto a = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
  auto b = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
  if (b >= a) ++b;
  const auto r = random_element(g, 1);
  p(a, b) = r;
  q(a, b) = -r;
  return {p, q};
}

/// A valid complex of length top+1: a direct sum of two-term pieces
/// ZG --x--> ZG and isolated free modules, hidden by random elementary
/// changes of basis in every degree.
inline ChainComplex random_complex(const GroupPtr& g, std::size_t top) {
  std::vector<std::size_t> ranks(top + 1, 0);
  struct Piece {
    std::size_t degree;  // x : degree -> degree - 1
    std::size_t row, col;
    GroupRingElement x;
  };
  std::vector<Piece> pieces;
  for (std::size_t d = 1; d <= top; ++d) {
    const long count = uniform(0, 2);
    for (long k = 0; k < count; ++k) pieces.push_back({d, ranks[d - 1]++, ranks[d]++, random_element(g, 2)});
  }
  for (std::size_t d = 0; d <= top; ++d) ranks[d] += static_cast<std::size_t>(uniform(0, 1));
  std::vector<GRMatrix> boundaries;
  for (std::size_t d = 1; d <= top; ++d) boundaries.emplace_back(g, ranks[d - 1], ranks[d]);
  for (const auto& p : pieces) boundaries[p.degree - 1](p.row, p.col) = p.x;
  for (std::size_t d = 0; d <= top; ++d) {
    for (int rep = 0; rep < 2; ++rep) {
      auto [p, q] = random_elementary(g, ranks[d]);
      if (d >= 1) boundaries[d - 1] = boundaries[d - 1] * q;
      if (d < top) boundaries[d] = p * boundaries[d];
    }
  }
  return ChainComplex(g, std::move(ranks), std::move(boundaries));
}

}  // namespace testgen
