#include "fivedual/gr_matrix.hpp"

namespace fivedual {

GRMatrix::GRMatrix(GroupPtr group, std::size_t rows, std::size_t cols)
    : group_(std::move(group)), rows_(rows), cols_(cols),
      entries_(rows * cols, GroupRingElement(group_)) {}

GRMatrix::GRMatrix(GroupPtr group, std::size_t rows, std::size_t cols,
                   std::vector<GroupRingElement> entries)
    : group_(std::move(group)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw ShapeError("GRMatrix: entry count mismatch");
  for (const auto& e : entries_)
    if (!same_group(e.group(), group_)) throw ShapeError("GRMatrix: entry from another group");
}

GRMatrix GRMatrix::identity(const GroupPtr& group, std::size_t n) {
  return diagonal(GroupRingElement::one(group), n);
}

GRMatrix GRMatrix::scalar(const GroupRingElement& x) { return GRMatrix(x.group(), 1, 1, {x}); }

GRMatrix GRMatrix::diagonal(const GroupRingElement& x, std::size_t n) {
  GRMatrix m(x.group(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = x;
  return m;
}

bool GRMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool GRMatrix::is_identity() const {
  return rows_ == cols_ && *this == identity(group_, rows_);
}

GRMatrix GRMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("GRMatrix::block: out of range");
  GRMatrix b(group_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void GRMatrix::set_block(std::size_t r0, std::size_t c0, const GRMatrix& m) {
  if (!same_group(group_, m.group_)) throw ShapeError("GRMatrix::set_block: group mismatch");
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeError("GRMatrix::set_block: out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

GRMatrix& GRMatrix::operator+=(const GRMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_ || !same_group(group_, other.group_))
    throw ShapeError("GRMatrix +: shape or group mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

GRMatrix& GRMatrix::operator-=(const GRMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_ || !same_group(group_, other.group_))
    throw ShapeError("GRMatrix -: shape or group mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

GRMatrix GRMatrix::operator-() const {
  GRMatrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

bool GRMatrix::operator==(const GRMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && same_group(group_, other.group_) &&
         entries_ == other.entries_;
}

GRMatrix gr_compose(const GRMatrix& a, const GRMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("gr_compose: inner dimensions differ");
  if (!same_group(a.group(), b.group())) throw ShapeError("gr_compose: group mismatch");
  GRMatrix c(a.group(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += gr_mul(a(i, k), b(k, j));
    }
  return c;
}

GRMatrix dual_matrix(const GRMatrix& a) {
  GRMatrix d(a.group(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d(j, i) = gr_involute(a(i, j));
  return d;
}

GRMatrix direct_sum(const GRMatrix& a, const GRMatrix& b) {
  if (!same_group(a.group(), b.group())) throw ShapeError("direct_sum: group mismatch");
  GRMatrix s(a.group(), a.rows() + b.rows(), a.cols() + b.cols());
  s.set_block(0, 0, a);
  s.set_block(a.rows(), a.cols(), b);
  return s;
}

IntegerMatrix expand_regular(const GRMatrix& a) {
  const auto& G = *a.group();
  const std::size_t n = G.order();
  IntegerMatrix m(a.rows() * n, a.cols() * n);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const auto& entry = a(r, c);
      for (std::size_t g = 0; g < n; ++g) {
        if (entry[g] == 0) continue;
        for (std::size_t h = 0; h < n; ++h) m(r * n + G.mul(g, h), c * n + h) += entry[g];
      }
    }
  return m;
}

IntegerMatrix expand_vector(const GRMatrix& column) {
  if (column.cols() != 1) throw ShapeError("expand_vector: expected a column");
  const std::size_t n = column.group()->order();
  IntegerMatrix v(column.rows() * n, 1);
  for (std::size_t s = 0; s < column.rows(); ++s)
    for (std::size_t g = 0; g < n; ++g) v(s * n + g, 0) = column(s, 0)[g];
  return v;
}

GRMatrix fold_vector(const GroupPtr& group, const IntegerMatrix& column) {
  const std::size_t n = group->order();
  if (column.cols() != 1 || column.rows() % n != 0) throw ShapeError("fold_vector: bad length");
  GRMatrix x(group, column.rows() / n, 1);
  for (std::size_t s = 0; s < x.rows(); ++s)
    for (std::size_t g = 0; g < n; ++g) x(s, 0)[g] = column(s * n + g, 0);
  return x;
}

IntegerMatrix augment_matrix(const GRMatrix& a) {
  IntegerMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = augmentation(a(i, j));
  return m;
}

std::optional<GRMatrix> solve_gr_linear(const GRMatrix& a, const GRMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve_gr_linear: A and B have different row counts");
  if (!same_group(a.group(), b.group())) throw ShapeError("solve_gr_linear: group mismatch");
  const std::size_t n = a.group()->order();
  IntegerMatrix rhs(b.rows() * n, b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = expand_vector(b.block(0, j, b.rows(), 1));
    for (std::size_t i = 0; i < col.rows(); ++i) rhs(i, j) = col(i, 0);
  }
  auto y = solve_integer(expand_regular(a), rhs);
  if (!y) return std::nullopt;
  GRMatrix x(a.group(), a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) x.set_block(0, j, fold_vector(a.group(), y->column(j)));
  return x;
}

std::optional<GRMatrix> gr_inverse(const GRMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto right = solve_gr_linear(a, GRMatrix::identity(a.group(), a.rows()));
  if (!right) return std::nullopt;
  if (!gr_compose(*right, a).is_identity()) return std::nullopt;
  return right;
}

}  // namespace fivedual
