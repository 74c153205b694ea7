#include "fivedual/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace fivedual {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw ShapeError("IntegerMatrix: entry count mismatch");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("IntegerMatrix: ragged row literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::column(std::size_t j) const {
  IntegerMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

IntegerMatrix IntegerMatrix::row(std::size_t i) const {
  IntegerMatrix r(1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
  return r;
}

IntegerMatrix& IntegerMatrix::operator+=(const IntegerMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("IntegerMatrix +: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

IntegerMatrix& IntegerMatrix::operator-=(const IntegerMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("IntegerMatrix -: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

IntegerMatrix IntegerMatrix::operator-() const { return scaled(-1); }

IntegerMatrix IntegerMatrix::scaled(const Integer& s) const {
  IntegerMatrix r = *this;
  for (auto& v : r.entries_) v *= s;
  return r;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("IntegerMatrix *: inner dimensions differ");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

namespace {

// Working state for the elimination. U and V are only touched when tracked.
struct SmithWork {
  IntegerMatrix D;
  IntegerMatrix U;
  IntegerMatrix V;
  bool track;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
    if (track)
      for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
    if (track)
      for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
  }
  // row_dst -= q * row_src
  void sub_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < D.cols(); ++j)
      if (D(src, j) != 0) D(dst, j) -= q * D(src, j);
    if (track)
      for (std::size_t j = 0; j < U.cols(); ++j)
        if (U(src, j) != 0) U(dst, j) -= q * U(src, j);
  }
  // col_dst -= q * col_src
  void sub_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < D.rows(); ++i)
      if (D(i, src) != 0) D(i, dst) -= q * D(i, src);
    if (track)
      for (std::size_t i = 0; i < V.rows(); ++i)
        if (V(i, src) != 0) V(i, dst) -= q * V(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
    if (track)
      for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
  }
};

SmithWork run_smith(const IntegerMatrix& a, bool track) {
  SmithWork w{a, track ? IntegerMatrix::identity(a.rows()) : IntegerMatrix(),
              track ? IntegerMatrix::identity(a.cols()) : IntegerMatrix(), track};
  const std::size_t m = a.rows(), n = a.cols();
  auto& D = w.D;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (!found || abs(D(i, j)) < best)) {
          best = abs(D(i, j));
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    while (true) {
      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        w.sub_row(i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        w.sub_col(j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder is now smaller than the pivot; promote it.
        std::size_t bi = t, bj = t;
        Integer bv = abs(D(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < bv) {
            bv = abs(D(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < bv) {
            bv = abs(D(t, j));
            bi = t;
            bj = j;
          }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) != 0 && !mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            w.sub_row(t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) w.negate_row(t);
  }
  return w;
}

std::vector<Integer> diagonal_of(const IntegerMatrix& D) {
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(D.rows(), D.cols()); ++t) {
    if (D(t, t) == 0) break;
    diag.push_back(D(t, t));
  }
  return diag;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  SmithWork w = run_smith(a, true);
  auto diag = diagonal_of(w.D);
  return SmithDecomposition{std::move(w.U), std::move(w.D), std::move(w.V), std::move(diag)};
}

std::vector<Integer> invariant_factors(const IntegerMatrix& a) {
  return diagonal_of(run_smith(a, false).D);
}

std::size_t integer_rank(const IntegerMatrix& a) { return invariant_factors(a).size(); }

std::optional<IntegerMatrix> solve_integer(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve_integer: A and B have different row counts");
  const auto snf = smith_normal_form(a);
  const IntegerMatrix ub = snf.U * b;
  const std::size_t r = snf.rank();
  IntegerMatrix y(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i < r) {
        if (!mpz_divisible_p(ub(i, j).get_mpz_t(), snf.diagonal[i].get_mpz_t())) return std::nullopt;
        mpz_divexact(y(i, j).get_mpz_t(), ub(i, j).get_mpz_t(), snf.diagonal[i].get_mpz_t());
      } else if (ub(i, j) != 0) {
        return std::nullopt;
      }
    }
  return snf.V * y;
}

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
  const auto snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  IntegerMatrix k(a.cols(), a.cols() - r);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = r; j < a.cols(); ++j) k(i, j - r) = snf.V(i, j);
  return k;
}

std::string to_string(const AbelianGroupInfo& group) {
  std::ostringstream out;
  bool first = true;
  if (group.free_rank > 0) {
    out << "Z";
    if (group.free_rank > 1) out << "^" << group.free_rank;
    first = false;
  }
  for (const auto& t : group.torsion) {
    out << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  return first ? "0" : out.str();
}

AbelianGroupInfo homology_pair(const IntegerMatrix& incoming, const IntegerMatrix& outgoing) {
  if (incoming.rows() != outgoing.cols())
    throw ShapeError("homology_pair: incoming target and outgoing source differ");
  if (!(outgoing * incoming).is_zero())
    throw DomainError("homology_pair: outgoing * incoming is not zero");
  const auto in_factors = invariant_factors(incoming);
  const std::size_t out_rank = integer_rank(outgoing);
  AbelianGroupInfo h;
  h.free_rank = incoming.rows() - out_rank - in_factors.size();
  for (const auto& d : in_factors)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

}  // namespace fivedual
