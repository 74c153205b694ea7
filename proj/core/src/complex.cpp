#include "fivedual/complex.hpp"

#include <numeric>

namespace fivedual {

ChainComplex::ChainComplex(GroupPtr group, std::vector<std::size_t> ranks_by_degree,
                           std::vector<GRMatrix> boundaries, GeneratorCertificates generators)
    : group_(std::move(group)), ranks_(std::move(ranks_by_degree)),
      boundaries_(std::move(boundaries)), generators_(std::move(generators)) {
  if (ranks_.empty()) throw ShapeError("ChainComplex: needs at least one module");
  if (boundaries_.size() != ranks_.size() - 1)
    throw ShapeError("ChainComplex: expected " + std::to_string(ranks_.size() - 1) + " boundaries");
  for (std::size_t i = 1; i < ranks_.size(); ++i) {
    const auto& d = boundaries_[i - 1];
    if (!same_group(d.group(), group_)) throw ShapeError("ChainComplex: boundary over another group");
    if (d.rows() != ranks_[i - 1] || d.cols() != ranks_[i])
      throw ShapeError("ChainComplex: d_" + std::to_string(i) + " should be " +
                       std::to_string(ranks_[i - 1]) + "x" + std::to_string(ranks_[i]));
  }
  const std::size_t n = group_->order();
  if (generators_.bottom &&
      (generators_.bottom->rows() != 1 || generators_.bottom->cols() != n * ranks_.front()))
    throw ShapeError("ChainComplex: bottom generator must be a 1 x |G|rank_0 row");
  if (generators_.top &&
      (generators_.top->cols() != 1 || generators_.top->rows() != n * ranks_.back()))
    throw ShapeError("ChainComplex: top generator must be a |G|rank_top x 1 column");
}

const GRMatrix& ChainComplex::boundary(std::size_t degree) const {
  if (degree == 0 || degree > top_degree()) throw DomainError("ChainComplex::boundary: degree out of range");
  return boundaries_[degree - 1];
}

ChainComplex ChainComplex::with_boundary(std::size_t degree, GRMatrix d) const {
  auto bs = boundaries_;
  if (degree == 0 || degree > top_degree()) throw DomainError("with_boundary: degree out of range");
  bs[degree - 1] = std::move(d);
  return ChainComplex(group_, ranks_, std::move(bs), generators_);
}

ChainComplex ChainComplex::with_generators(GeneratorCertificates generators) const {
  return ChainComplex(group_, ranks_, boundaries_, std::move(generators));
}

bool ChainComplex::operator==(const ChainComplex& other) const {
  return same_group(group_, other.group_) && ranks_ == other.ranks_ &&
         boundaries_ == other.boundaries_ && generators_ == other.generators_;
}

bool ValidationReport::valid() const {
  if (!shapes_consistent) return false;
  for (const auto& c : compositions)
    if (!c.passed) return false;
  return true;
}

ValidationReport validate_complex(const ChainComplex& complex) {
  ValidationReport report;
  for (std::size_t i = 2; i <= complex.top_degree(); ++i) {
    const auto product = complex.boundary(i - 1) * complex.boundary(i);
    DegreeCheck check{i, product.is_zero(), {}};
    if (!check.passed) {
      for (std::size_t r = 0; r < product.rows() && check.witness.empty(); ++r)
        for (std::size_t c = 0; c < product.cols(); ++c)
          if (!product(r, c).is_zero()) {
            check.witness = "d_" + std::to_string(i - 1) + " d_" + std::to_string(i) + " entry (" +
                            std::to_string(r) + "," + std::to_string(c) + ") = " + to_string(product(r, c));
            break;
          }
    }
    report.compositions.push_back(std::move(check));
  }
  return report;
}

Integer euler_characteristic(const ChainComplex& complex) {
  Integer chi = 0;
  for (std::size_t i = 0; i <= complex.top_degree(); ++i) {
    Integer term = Integer(static_cast<unsigned long>(complex.rank(i))) *
                   static_cast<unsigned long>(complex.group()->order());
    chi += (i % 2 == 0) ? term : Integer(-term);
  }
  return chi;
}

ChainComplex dualize_complex(const ChainComplex& complex) {
  const std::size_t top = complex.top_degree();
  std::vector<std::size_t> ranks(top + 1);
  for (std::size_t i = 0; i <= top; ++i) ranks[i] = complex.rank(top - i);
  std::vector<GRMatrix> boundaries;
  for (std::size_t i = 1; i <= top; ++i) boundaries.push_back(dual_matrix(complex.boundary(top + 1 - i)));
  GeneratorCertificates gens;
  if (complex.generators().bottom) gens.top = complex.generators().bottom->transpose();
  if (complex.generators().top) gens.bottom = complex.generators().top->transpose();
  return ChainComplex(complex.group(), std::move(ranks), std::move(boundaries), std::move(gens));
}

namespace {

IntegerMatrix integer_boundary(const ChainComplex& c, std::size_t degree, Coefficients coefficients) {
  const std::size_t scale = coefficients == Coefficients::kIntegral ? c.group()->order() : 1;
  if (degree == 0) return IntegerMatrix(0, c.rank(0) * scale);
  if (degree > c.top_degree()) return IntegerMatrix(c.rank(c.top_degree()) * scale, 0);
  return coefficients == Coefficients::kIntegral ? expand_regular(c.boundary(degree))
                                                 : augment_matrix(c.boundary(degree));
}

void normalize_sign(IntegerMatrix& v) {
  for (const auto& x : v.entries()) {
    if (x == 0) continue;
    if (x < 0) v = -v;
    return;
  }
}

Integer content(const IntegerMatrix& v) {
  Integer g = 0;
  for (const auto& x : v.entries()) g = gcd(g, x);
  return g;
}

// Constant on each |G|-block of coordinates: the G-action on the class is trivial.
bool constant_on_blocks(const IntegerMatrix& v, std::size_t order) {
  const auto& e = v.entries();
  for (std::size_t s = 0; s + order <= e.size(); s += order)
    for (std::size_t g = 1; g < order; ++g)
      if (e[s + g] != e[s]) return false;
  return true;
}

std::optional<IntegerMatrix> computed_bottom(const ChainComplex& c) {
  const auto m = integer_boundary(c, 1, Coefficients::kIntegral);
  if (!homology(c, 0, Coefficients::kIntegral).is_infinite_cyclic()) return std::nullopt;
  auto left = kernel_basis(m.transpose());
  if (left.cols() != 1) return std::nullopt;
  IntegerMatrix f = left.transpose();
  normalize_sign(f);
  return f;
}

std::optional<IntegerMatrix> computed_top(const ChainComplex& c) {
  const std::size_t top = c.top_degree();
  const auto m = integer_boundary(c, top, Coefficients::kIntegral);
  auto k = kernel_basis(m);
  if (k.cols() != 1) return std::nullopt;
  normalize_sign(k);
  return k;
}

}  // namespace

AbelianGroupInfo homology(const ChainComplex& complex, std::size_t degree, Coefficients coefficients) {
  if (degree > complex.top_degree()) throw DomainError("homology: degree out of range");
  return homology_pair(integer_boundary(complex, degree + 1, coefficients),
                       integer_boundary(complex, degree, coefficients));
}

AbelianGroupInfo cohomology(const ChainComplex& complex, std::size_t degree, Coefficients coefficients) {
  if (degree > complex.top_degree()) throw DomainError("cohomology: degree out of range");
  return homology(dualize_complex(complex), complex.top_degree() - degree, coefficients);
}

std::optional<IntegerMatrix> bottom_generator(const ChainComplex& complex) {
  if (complex.generators().bottom) return complex.generators().bottom;
  return computed_bottom(complex);
}

std::optional<IntegerMatrix> top_generator(const ChainComplex& complex) {
  if (complex.generators().top) return complex.generators().top;
  return computed_top(complex);
}

ChainComplex with_computed_generators(const ChainComplex& complex) {
  return complex.with_generators({top_generator(complex), bottom_generator(complex)});
}

Alg5Report is_alg5(const ChainComplex& complex) {
  Alg5Report report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.items.push_back({std::move(name), passed, std::move(detail)});
  };
  if (complex.top_degree() != 5) {
    add("length", false, "expected modules in degrees 0..5, got top degree " +
                             std::to_string(complex.top_degree()));
    return report;
  }
  const auto validation = validate_complex(complex);
  add("d_squared_zero", validation.valid(), validation.valid() ? "" : "composition of boundaries is nonzero");
  if (!validation.valid()) return report;

  const std::size_t order = complex.group()->order();
  const auto h4 = homology(complex, 4, Coefficients::kIntegral);
  add("exact_at_F4", h4.is_zero(), "H_4 = " + to_string(h4));
  const auto h1 = homology(complex, 1, Coefficients::kIntegral);
  add("exact_at_F1", h1.is_zero(), "H_1 = " + to_string(h1));

  const auto h0 = homology(complex, 0, Coefficients::kIntegral);
  bool bottom_ok = h0.is_infinite_cyclic();
  std::string bottom_detail = "coker d_1 = " + to_string(h0);
  std::optional<IntegerMatrix> bottom;
  if (bottom_ok) {
    bottom = computed_bottom(complex);
    if (!bottom || !constant_on_blocks(*bottom, order)) {
      bottom_ok = false;
      bottom_detail += "; G acts nontrivially";
    }
  }
  add("coker_d1_is_Z", bottom_ok, bottom_detail);

  const auto h5 = homology(complex, 5, Coefficients::kIntegral);
  bool top_ok = h5.is_infinite_cyclic();
  std::string top_detail = "ker d_5 = " + to_string(h5);
  std::optional<IntegerMatrix> top;
  if (top_ok) {
    top = computed_top(complex);
    if (!top || !constant_on_blocks(*top, order)) {
      top_ok = false;
      top_detail += "; G acts nontrivially";
    }
  }
  add("ker_d5_is_Z", top_ok, top_detail);

  const Integer chi = euler_characteristic(complex);
  add("euler_characteristic_zero", chi == 0, "chi = " + chi.get_str());

  // Stored certificates must generate the same identifications (up to sign
  // they are forced; the stored sign is the one that counts).
  if (const auto& stored = complex.generators().bottom) {
    bool ok = bottom_ok && content(*stored) == 1 &&
              (*stored * expand_regular(complex.boundary(1))).is_zero();
    add("bottom_certificate", ok, ok ? "" : "stored bottom functional does not identify coker d_1 with Z");
    if (ok) bottom = stored;
  }
  if (const auto& stored = complex.generators().top) {
    bool ok = top_ok && content(*stored) == 1 && (expand_regular(complex.boundary(5)) * *stored).is_zero();
    add("top_certificate", ok, ok ? "" : "stored top vector does not generate ker d_5");
    if (ok) top = stored;
  }

  report.member = true;
  for (const auto& item : report.items) report.member = report.member && item.passed;
  report.top_generator = std::move(top);
  report.bottom_generator = std::move(bottom);
  return report;
}

}  // namespace fivedual
