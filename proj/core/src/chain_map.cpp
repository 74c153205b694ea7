#include "fivedual/chain_map.hpp"

namespace fivedual {

namespace {

std::string first_nonzero(const GRMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero())
        return "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + to_string(m(r, c));
  return {};
}

// s with lhs == s * rhs for integer vectors, if any.
std::optional<Integer> proportionality(const IntegerMatrix& lhs, const IntegerMatrix& rhs) {
  std::optional<Integer> s;
  for (std::size_t k = 0; k < rhs.entries().size(); ++k) {
    const auto& r = rhs.entries()[k];
    if (r == 0) continue;
    if (!mpz_divisible_p(lhs.entries()[k].get_mpz_t(), r.get_mpz_t())) return std::nullopt;
    s = lhs.entries()[k] / r;
    break;
  }
  if (!s) return lhs.is_zero() ? std::optional<Integer>(0) : std::nullopt;
  if (!(lhs == rhs.scaled(*s))) return std::nullopt;
  return s;
}

}  // namespace

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<GRMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_.top_degree() != target_.top_degree()) throw ShapeError("ChainMap: complexes of different length");
  if (components_.size() != source_.top_degree() + 1) throw ShapeError("ChainMap: wrong number of components");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.rows() != target_.rank(i) || c.cols() != source_.rank(i))
      throw ShapeError("ChainMap: component in degree " + std::to_string(i) + " has the wrong shape");
  }
}

ChainMap ChainMap::from_top(ChainComplex source, ChainComplex target, std::vector<GRMatrix> top_down) {
  std::vector<GRMatrix> comps(top_down.rbegin(), top_down.rend());
  return ChainMap(std::move(source), std::move(target), std::move(comps));
}

ChainMap ChainMap::identity(const ChainComplex& complex) {
  std::vector<GRMatrix> comps;
  for (std::size_t i = 0; i <= complex.top_degree(); ++i)
    comps.push_back(GRMatrix::identity(complex.group(), complex.rank(i)));
  return ChainMap(complex, complex, std::move(comps));
}

ChainMap ChainMap::scalar(const ChainComplex& source, const ChainComplex& target,
                          const std::vector<GroupRingElement>& top_down) {
  if (top_down.size() != source.top_degree() + 1) throw ShapeError("ChainMap::scalar: wrong component count");
  std::vector<GRMatrix> comps;
  for (std::size_t i = 0; i <= source.top_degree(); ++i) {
    if (source.rank(i) != target.rank(i)) throw ShapeError("ChainMap::scalar: ranks differ");
    comps.push_back(GRMatrix::diagonal(top_down[source.top_degree() - i], source.rank(i)));
  }
  return ChainMap(source, target, std::move(comps));
}

ChainMap ChainMap::negated() const {
  std::vector<GRMatrix> comps;
  for (const auto& c : components_) comps.push_back(-c);
  return ChainMap(source_, target_, std::move(comps));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (f.top_degree() != g.top_degree()) throw ShapeError("compose: lengths differ");
  std::vector<GRMatrix> comps;
  for (std::size_t i = 0; i <= f.top_degree(); ++i) comps.push_back(g.component(i) * f.component(i));
  return ChainMap(f.source(), g.target(), std::move(comps));
}

ChainMap dual_chain_map(const ChainMap& f) {
  const std::size_t top = f.top_degree();
  std::vector<GRMatrix> comps;
  for (std::size_t i = 0; i <= top; ++i) comps.push_back(dual_matrix(f.component(top - i)));
  return ChainMap(dualize_complex(f.target()), dualize_complex(f.source()), std::move(comps));
}

ChainMapReport is_chain_map(const ChainMap& f) {
  ChainMapReport report;
  const auto& src = f.source();
  const auto& tgt = f.target();
  for (std::size_t i = 1; i <= f.top_degree(); ++i) {
    const auto residue = tgt.boundary(i) * f.component(i) - f.component(i - 1) * src.boundary(i);
    DegreeCheck check{i, residue.is_zero(), {}};
    if (!check.passed) check.witness = "square " + std::to_string(i) + ": " + first_nonzero(residue);
    report.commutes = report.commutes && check.passed;
    report.squares.push_back(std::move(check));
  }
  if (!report.commutes) return report;

  // x: f_tgt o phi_0 = x f_src ; y: phi_top z_src = y z_tgt.
  auto src_bottom = bottom_generator(src);
  auto tgt_bottom = bottom_generator(tgt);
  if (src_bottom && tgt_bottom) {
    report.bottom_scalar = proportionality(*tgt_bottom * expand_regular(f.component(0)), *src_bottom);
  }
  auto src_top = top_generator(src);
  auto tgt_top = top_generator(tgt);
  const std::size_t top = f.top_degree();
  if (src_top && tgt_top) {
    report.top_scalar = proportionality(expand_regular(f.component(top)) * *src_top, *tgt_top);
  }
  if (!report.bottom_scalar || !report.top_scalar)
    report.scalar_detail = "end identifications with Z unavailable for source or target";
  return report;
}

ChainHomotopy::ChainHomotopy(ChainMap f, ChainMap g, std::vector<GRMatrix> components)
    : f_(std::move(f)), g_(std::move(g)), components_(std::move(components)) {
  const std::size_t top = f_.top_degree();
  if (g_.top_degree() != top) throw ShapeError("ChainHomotopy: maps of different length");
  if (!(f_.source() == g_.source()) || !(f_.target() == g_.target()))
    throw ShapeError("ChainHomotopy: maps must share source and target");
  if (components_.size() != top) throw ShapeError("ChainHomotopy: expected top_degree components");
  for (std::size_t i = 0; i < top; ++i) {
    const auto& c = components_[i];
    if (c.rows() != f_.target().rank(i + 1) || c.cols() != f_.source().rank(i))
      throw ShapeError("ChainHomotopy: component " + std::to_string(i) + " has the wrong shape");
  }
}

ChainHomotopy ChainHomotopy::single(ChainMap f, ChainMap g, std::size_t degree, GRMatrix component) {
  std::vector<GRMatrix> comps;
  for (std::size_t i = 0; i < f.top_degree(); ++i)
    comps.push_back(i == degree ? component : GRMatrix(f.source().group(), f.target().rank(i + 1), f.source().rank(i)));
  return ChainHomotopy(std::move(f), std::move(g), std::move(comps));
}

std::vector<std::size_t> ChainHomotopy::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (!components_[i].is_zero()) s.push_back(i);
  return s;
}

HomotopyReport verify_homotopy(const ChainHomotopy& h) {
  HomotopyReport report;
  const auto& src = h.f().source();
  const auto& tgt = h.f().target();
  const std::size_t top = h.f().top_degree();
  for (std::size_t i = 0; i <= top; ++i) {
    GRMatrix rhs = h.f().component(i) - h.g().component(i);
    if (i < top) rhs -= tgt.boundary(i + 1) * h.component(i);
    if (i > 0) rhs -= h.component(i - 1) * src.boundary(i);
    DegreeCheck check{i, rhs.is_zero(), {}};
    if (!check.passed) check.witness = "f - g - (dI + Id) in degree " + std::to_string(i) + ": " + first_nonzero(rhs);
    report.verified = report.verified && check.passed;
    report.degrees.push_back(std::move(check));
  }
  if (report.verified) {
    const auto rf = is_chain_map(h.f());
    const auto rg = is_chain_map(h.g());
    report.end_scalars_agree = rf.bottom_scalar == rg.bottom_scalar && rf.top_scalar == rg.top_scalar;
  }
  return report;
}

}  // namespace fivedual
