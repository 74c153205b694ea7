#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's linear algebra; matrices are plain nested
// vectors so a bug in IntegerMatrix cannot hide itself.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Mat = std::vector<std::vector<Int>>;

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<Int>(c, 0)); }

inline Mat multiply(const Mat& a, const Mat& b, std::size_t inner) {
  const std::size_t r = a.size(), c = b.empty() ? 0 : b[0].size();
  Mat out = zeros(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// Fraction-free Gaussian elimination; exact determinant of a square matrix.
inline Int bareiss_determinant(Mat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Rank over Q by fraction-free row reduction.
inline std::size_t rational_rank(Mat m, std::size_t cols) {
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[i][j] * m[rank][c] - m[i][c] * m[rank][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Invariant factors from determinantal divisors: d_k = gcd of all k x k
/// minors, factor_k = d_k / d_{k-1}. Exponential; for matrices up to ~6x6.
inline std::vector<Int> invariant_factors_by_minors(const Mat& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<Int> factors;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Int g = 0;
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& r) {
      for_each_subset(cols, k, [&](const std::vector<std::size_t>& c) {
        Mat sub = zeros(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        Int d = bareiss_determinant(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

/// Polynomial product in Z[t]/(t^n - 1), written out from the exponent law
/// rather than a multiplication table.
inline std::vector<Int> cyclic_product(const std::vector<Int>& a, const std::vector<Int>& b) {
  const std::size_t n = a.size();
  std::vector<Int> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] += a[i] * b[j];
  return out;
}

/// Multiplication-by-a matrix on Z[C_n] in the basis 1, t, ..., t^(n-1):
/// column j holds the coordinates of a * t^j.
inline Mat cyclic_multiplication_matrix(const std::vector<Int>& a) {
  const std::size_t n = a.size();
  Mat m = zeros(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m[(i + j) % n][j] += a[i];
  return m;
}

/// Searches X with entries in [-bound, bound] such that A X = b (single column).
inline bool small_solution_exists(const Mat& a, const std::vector<Int>& b, std::size_t cols, long bound) {
  std::vector<long> x(cols, -bound);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < cols; ++j) s += a[i][j] * x[j];
      ok = s == b[i];
    }
    if (ok) return true;
    std::size_t k = 0;
    while (k < cols && x[k] == bound) x[k++] = -bound;
    if (k == cols) return false;
    ++x[k];
  }
}

/// The Klein four-group as an explicit table (xor of two bits).
inline std::vector<std::vector<std::size_t>> klein_four_table() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return t;
}

/// S_3 as permutations of {0,1,2}, composed right to left.
inline std::vector<std::vector<std::size_t>> symmetric_three_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

/// Order of the unit group (Z/n)^x, so U_n is a group of order phi(n) with
/// a table built from modular multiplication.
inline std::vector<std::vector<std::size_t>> units_mod_table(std::size_t n) {
  std::vector<std::size_t> units;
  for (std::size_t a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) units.push_back(a);
  std::vector<std::vector<std::size_t>> t(units.size(), std::vector<std::size_t>(units.size()));
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = 0; j < units.size(); ++j)
      t[i][j] = static_cast<std::size_t>(std::find(units.begin(), units.end(), units[i] * units[j] % n) - units.begin());
  return t;
}

}  // namespace oracle
