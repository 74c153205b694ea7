#include "fivedual/assembly.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace fivedual {

namespace {

constexpr std::size_t kSegmentTop = 2;

ChainComplex truncate_to_segment(const ChainComplex& complex, std::optional<IntegerMatrix> bottom) {
  if (complex.top_degree() < kSegmentTop) throw ShapeError("segment: complex is too short");
  std::vector<std::size_t> ranks{complex.rank(0), complex.rank(1), complex.rank(2)};
  std::vector<GRMatrix> boundaries{complex.boundary(1), complex.boundary(2)};
  GeneratorCertificates gens;
  gens.bottom = std::move(bottom);
  return ChainComplex(complex.group(), std::move(ranks), std::move(boundaries), std::move(gens));
}

GRMatrix columns(const GRMatrix& m, const std::vector<std::size_t>& idx) {
  GRMatrix out(m.group(), m.rows(), idx.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = m(i, idx[j]);
  return out;
}

bool column_is_zero(const GRMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, j).is_zero()) return false;
  return true;
}

// Coordinates of the functional on block j (one per group element).
IntegerMatrix functional_block(const IntegerMatrix& f, std::size_t j, std::size_t order) {
  IntegerMatrix b(1, order);
  for (std::size_t g = 0; g < order; ++g) b(0, g) = f(0, j * order + g);
  return b;
}

IntegerMatrix functional_blocks(const IntegerMatrix& f, const std::vector<std::size_t>& idx, std::size_t order) {
  IntegerMatrix b(1, idx.size() * order);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t g = 0; g < order; ++g) b(0, a * order + g) = f(0, idx[a] * order + g);
  return b;
}

void check_segments(const ChainComplex& tail, const ChainComplex& head) {
  if (tail.top_degree() != kSegmentTop || head.top_degree() != kSegmentTop)
    throw ShapeError("solve_chain_isomorphism: segments must have three terms");
  if (!same_group(tail.group(), head.group())) throw ShapeError("solve_chain_isomorphism: different groups");
  if (tail.ranks() != head.ranks()) throw ShapeError("solve_chain_isomorphism: ranks differ");
  if (tail.generators().bottom.has_value() != head.generators().bottom.has_value())
    throw ShapeError("solve_chain_isomorphism: only one segment carries a functional");
}

// Search over matrices with one entry +-g per row and column.
class MonomialSearch {
 public:
  MonomialSearch(const ChainComplex& tail, const ChainComplex& head, std::size_t budget)
      : tail_(tail), head_(head), G_(tail.group()), budget_(budget), target_(tail.group(), 0, 0) {
    for (std::size_t d = 0; d <= kSegmentTop; ++d) {
      h_.emplace_back(G_, tail.rank(d), tail.rank(d));
      used_.emplace_back(tail.rank(d), false);
    }
    for (std::size_t g = 0; g < G_->order(); ++g)
      for (int sign : {1, -1}) {
        auto e = GroupRingElement::basis(G_, g, sign);
        entries_.push_back(e);
        expanded_.push_back(expand_regular(GRMatrix::scalar(e)));
      }
    // identity first
    for (std::size_t k = 0; k < entries_.size(); ++k)
      if (entries_[k] == GroupRingElement::one(G_)) std::swap(entries_[k], entries_[0]), std::swap(expanded_[k], expanded_[0]);
  }

  std::optional<std::array<GRMatrix, 3>> run() {
    if (place(0, 0)) return std::array<GRMatrix, 3>{h_[0], h_[1], h_[2]};
    return std::nullopt;
  }

  std::size_t nodes() const { return nodes_; }
  bool exhausted_budget() const { return out_of_budget_; }

 private:
  bool fits(std::size_t d, std::size_t j, std::size_t r, std::size_t k) const {
    if (d == 0) {
      const auto& ft = tail_.generators().bottom;
      if (!ft) return true;
      const std::size_t n = G_->order();
      return functional_block(*head_.generators().bottom, r, n) * expanded_[k] == functional_block(*ft, j, n);
    }
    const auto& dh = head_.boundary(d);
    for (std::size_t i = 0; i < dh.rows(); ++i)
      if (!(dh(i, r) * entries_[k] == target_(i, j))) return false;
    return true;
  }

  bool place(std::size_t d, std::size_t j) {
    if (d > kSegmentTop) return true;
    const std::size_t rank = tail_.rank(d);
    if (j == rank) return place(d + 1, 0);
    if (j == 0 && d >= 1) target_ = h_[d - 1] * tail_.boundary(d);
    const GRMatrix saved_target = d >= 1 ? target_ : GRMatrix(G_, 0, 0);
    for (std::size_t step = 0; step < rank; ++step) {
      const std::size_t r = (j + step) % rank;
      if (used_[d][r]) continue;
      for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (++nodes_ > budget_) {
          out_of_budget_ = true;
          return false;
        }
        if (!fits(d, j, r, k)) continue;
        used_[d][r] = true;
        h_[d](r, j) = entries_[k];
        if (place(d, j + 1)) return true;
        if (out_of_budget_) return false;
        h_[d](r, j) = GroupRingElement::zero(G_);
        used_[d][r] = false;
        if (d >= 1) target_ = saved_target;
      }
    }
    return false;
  }

  const ChainComplex& tail_;
  const ChainComplex& head_;
  GroupPtr G_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<GRMatrix> h_;
  std::vector<std::vector<bool>> used_;
  std::vector<GroupRingElement> entries_;
  std::vector<IntegerMatrix> expanded_;
  GRMatrix target_;
};

struct Split {
  std::vector<std::size_t> p, q_prime;  // tail side
  std::vector<std::size_t> q, p_prime;  // head side
};

std::optional<Split> make_split(const std::vector<bool>& tail_nonzero, const std::vector<bool>& head_nonzero) {
  const std::size_t r = tail_nonzero.size();
  Split s;
  std::vector<std::size_t> tail_zero;
  for (std::size_t i = 0; i < r; ++i) (tail_nonzero[i] ? s.p : tail_zero).push_back(i);
  for (std::size_t i = 0; i < r; ++i) (head_nonzero[i] ? s.q : s.p_prime).push_back(i);
  if (s.p.size() + s.q.size() > r) return std::nullopt;
  const std::size_t pad = r - s.q.size() - s.p.size();
  s.p.insert(s.p.end(), tail_zero.begin(), tail_zero.begin() + static_cast<std::ptrdiff_t>(pad));
  std::sort(s.p.begin(), s.p.end());
  s.q_prime.assign(tail_zero.begin() + static_cast<std::ptrdiff_t>(pad), tail_zero.end());
  return s;
}

// h = [[u, 1 - uv], [-1, v]] : P + Q' -> Q + P' and its inverse
// [[v, vu - 1], [1, u]], scattered into the original coordinates.
std::pair<GRMatrix, GRMatrix> swap_matrices(const GroupPtr& G, std::size_t r, const Split& s, const GRMatrix& u,
                                            const GRMatrix& v) {
  const auto uv = u * v;
  const auto vu = v * u;
  GRMatrix h(G, r, r), k(G, r, r);
  const auto one = GroupRingElement::one(G);
  for (std::size_t a = 0; a < s.q.size(); ++a) {
    for (std::size_t b = 0; b < s.p.size(); ++b) h(s.q[a], s.p[b]) = u(a, b);
    for (std::size_t b = 0; b < s.q_prime.size(); ++b)
      h(s.q[a], s.q_prime[b]) = (a == b ? one : GroupRingElement::zero(G)) - uv(a, b);
  }
  for (std::size_t a = 0; a < s.p_prime.size(); ++a) {
    h(s.p_prime[a], s.p[a]) = -one;
    for (std::size_t b = 0; b < s.q_prime.size(); ++b) h(s.p_prime[a], s.q_prime[b]) = v(a, b);
  }
  for (std::size_t a = 0; a < s.p.size(); ++a) {
    for (std::size_t b = 0; b < s.q.size(); ++b) k(s.p[a], s.q[b]) = v(a, b);
    for (std::size_t b = 0; b < s.p_prime.size(); ++b)
      k(s.p[a], s.p_prime[b]) = vu(a, b) - (a == b ? one : GroupRingElement::zero(G));
  }
  for (std::size_t a = 0; a < s.q_prime.size(); ++a) {
    k(s.q_prime[a], s.q[a]) = one;
    for (std::size_t b = 0; b < s.p_prime.size(); ++b) k(s.q_prime[a], s.p_prime[b]) = u(a, b);
  }
  return {std::move(h), std::move(k)};
}

// G-equivariant map sending basis element j of `from` to w * f_from(e_j),
// so that f_to o map = f_from whenever f_to(w) = 1. Needs f_from constant
// on each block.
std::optional<GRMatrix> functional_lift(const GroupPtr& G, const IntegerMatrix& f_from, const IntegerMatrix& f_to) {
  const std::size_t n = G->order();
  const std::size_t from_rank = f_from.cols() / n, to_rank = f_to.cols() / n;
  auto w = solve_integer(f_to, IntegerMatrix{{1}});
  if (!w) return std::nullopt;
  const auto w_gr = fold_vector(G, *w);
  GRMatrix m(G, to_rank, from_rank);
  for (std::size_t j = 0; j < from_rank; ++j) {
    const Integer value = f_from(0, j * n);
    for (std::size_t g = 1; g < n; ++g)
      if (f_from(0, j * n + g) != value) return std::nullopt;
    for (std::size_t i = 0; i < to_rank; ++i) m(i, j) = w_gr(i, 0) * value;
  }
  return m;
}

std::optional<SegmentIso> whitehead_swap(const ChainComplex& tail, const ChainComplex& head, std::string& detail) {
  const auto& G = tail.group();
  const std::size_t n = G->order();
  const auto& f_tail = tail.generators().bottom;
  const auto& f_head = head.generators().bottom;
  if (!f_tail || !f_head) {
    detail = "swap needs both functionals";
    return std::nullopt;
  }
  std::array<GRMatrix, 3> h{GRMatrix(G, 0, 0), GRMatrix(G, 0, 0), GRMatrix(G, 0, 0)};
  std::array<GRMatrix, 3> k = h;

  for (std::size_t d = 0; d <= kSegmentTop; ++d) {
    const std::size_t r = tail.rank(d);
    std::vector<bool> tnz(r), hnz(r);
    GRMatrix p_full(G, 0, 0), q_full(G, 0, 0);
    if (d == 0) {
      for (std::size_t j = 0; j < r; ++j) {
        tnz[j] = !functional_block(*f_tail, j, n).is_zero();
        hnz[j] = !functional_block(*f_head, j, n).is_zero();
      }
    } else {
      p_full = h[d - 1] * tail.boundary(d);
      q_full = head.boundary(d);
      for (std::size_t j = 0; j < r; ++j) {
        tnz[j] = !column_is_zero(p_full, j);
        hnz[j] = !column_is_zero(q_full, j);
      }
    }
    const auto split = make_split(tnz, hnz);
    if (!split) {
      detail = "swap: too few zero columns in degree " + std::to_string(d);
      return std::nullopt;
    }
    std::optional<GRMatrix> u, v;
    if (d == 0) {
      const auto fp = functional_blocks(*f_tail, split->p, n);
      const auto fq = functional_blocks(*f_head, split->q, n);
      u = functional_lift(G, fp, fq);
      v = functional_lift(G, fq, fp);
    } else {
      const auto p = columns(p_full, split->p);
      const auto q = columns(q_full, split->q);
      u = solve_gr_linear(q, p);
      v = solve_gr_linear(p, q);
    }
    if (!u || !v) {
      detail = "swap: no lift between the nonzero parts in degree " + std::to_string(d);
      return std::nullopt;
    }
    std::tie(h[d], k[d]) = swap_matrices(G, r, *split, *u, *v);
  }
  return SegmentIso{ChainMap(tail, head, {h[0], h[1], h[2]}), ChainMap(head, tail, {k[0], k[1], k[2]}),
                    "whitehead swap"};
}

}  // namespace

ChainComplex tail_segment(const ChainComplex& complex) {
  return truncate_to_segment(complex, bottom_generator(complex));
}

ChainComplex head_segment(const ChainComplex& complex) {
  auto top = top_generator(complex);
  std::optional<IntegerMatrix> bottom;
  if (top) bottom = top->transpose();
  return truncate_to_segment(dualize_complex(complex), std::move(bottom));
}

SegmentIsoReport verify_segment_iso(const SegmentIso& iso) {
  SegmentIsoReport report;
  const auto fail = [&](std::string what) {
    report.verified = false;
    report.failures.push_back(std::move(what));
  };
  const auto& h = iso.forward;
  const auto& k = iso.inverse;
  if (!(h.source() == k.target()) || !(h.target() == k.source())) {
    fail("maps do not run between the same segments");
    return report;
  }
  if (!is_chain_map(h).commutes) fail("forward map does not commute");
  if (!is_chain_map(k).commutes) fail("inverse map does not commute");
  for (std::size_t d = 0; d <= h.top_degree(); ++d) {
    if (!(k.component(d) * h.component(d)).is_identity()) fail("k h != 1 in degree " + std::to_string(d));
    if (!(h.component(d) * k.component(d)).is_identity()) fail("h k != 1 in degree " + std::to_string(d));
  }
  const auto& ft = h.source().generators().bottom;
  const auto& fh = h.target().generators().bottom;
  if (ft && fh && !(*fh * expand_regular(h.component(0)) == *ft)) fail("forward map does not preserve the functional");
  return report;
}

SolverOutcome solve_chain_isomorphism(const ChainComplex& tail, const ChainComplex& head, std::size_t budget) {
  check_segments(tail, head);
  SolverOutcome outcome;

  MonomialSearch search(tail, head, budget);
  auto found = search.run();
  outcome.nodes_used = search.nodes();
  if (found) {
    std::array<GRMatrix, 3> inv{dual_matrix((*found)[0]), dual_matrix((*found)[1]), dual_matrix((*found)[2])};
    SegmentIso iso{ChainMap(tail, head, {(*found)[0], (*found)[1], (*found)[2]}),
                   ChainMap(head, tail, {inv[0], inv[1], inv[2]}), "monomial search"};
    if (verify_segment_iso(iso).verified) {
      outcome.iso = std::move(iso);
      outcome.detail = "monomial search after " + std::to_string(outcome.nodes_used) + " nodes";
      return outcome;
    }
  }
  std::string search_note = search.exhausted_budget() ? "monomial search exhausted its budget"
                                                      : "no monomial isomorphism exists";
  std::string swap_note;
  auto swapped = whitehead_swap(tail, head, swap_note);
  if (swapped) {
    const auto check = verify_segment_iso(*swapped);
    if (check.verified) {
      outcome.iso = std::move(swapped);
      outcome.detail = search_note + "; whitehead swap verified";
      return outcome;
    }
    swap_note = "swap candidate failed verification: " + check.failures.front();
  }
  outcome.detail = search_note + "; " + swap_note;
  return outcome;
}

AssembledDualForm assemble_dual_form(const ChainComplex& stage6, const SegmentIso& iso) {
  if (stage6.top_degree() != 5) throw ShapeError("assemble_dual_form: expected a length-6 complex");
  const auto check = verify_segment_iso(iso);
  if (!check.verified) throw DomainError("assemble_dual_form: " + check.failures.front());
  const auto tail = tail_segment(stage6);
  if (!(iso.forward.source().boundaries() == tail.boundaries()))
    throw DomainError("assemble_dual_form: isomorphism does not start at the tail of this complex");
  if (!(iso.forward.target().boundaries() == head_segment(stage6).boundaries()))
    throw DomainError("assemble_dual_form: isomorphism does not end at the dual head of this complex");

  const auto& d1 = tail.boundary(1);
  const auto& d2 = tail.boundary(2);
  const auto d3 = stage6.boundary(3) * dual_matrix(iso.inverse.component(2));
  std::vector<std::size_t> ranks{stage6.rank(0), stage6.rank(1), stage6.rank(2),
                                 stage6.rank(2), stage6.rank(1), stage6.rank(0)};
  GeneratorCertificates gens;
  gens.bottom = tail.generators().bottom;
  if (gens.bottom) gens.top = gens.bottom->transpose();
  ChainComplex assembled(stage6.group(), std::move(ranks), {d1, d2, d3, dual_matrix(d2), dual_matrix(d1)},
                         std::move(gens));

  const auto& G = stage6.group();
  ChainMap equivalence(stage6, assembled,
                       {GRMatrix::identity(G, stage6.rank(0)), GRMatrix::identity(G, stage6.rank(1)),
                        GRMatrix::identity(G, stage6.rank(2)), dual_matrix(iso.forward.component(2)),
                        dual_matrix(iso.forward.component(1)), dual_matrix(iso.forward.component(0))});

  auto recognition = recognize_dual_form(assembled);
  if (!recognition.view) throw DomainError("assemble_dual_form: result not in dual form: " + recognition.diagnostic);
  return AssembledDualForm{std::move(assembled), std::move(equivalence), std::move(*recognition.view)};
}

DualFormPipeline to_dual_form(const ChainComplex& complex, std::size_t budget) {
  auto stage6 = to_dual_form_stage6(complex);
  auto solver = solve_chain_isomorphism(tail_segment(stage6.complex), head_segment(stage6.complex), budget);
  std::optional<AssembledDualForm> assembled;
  if (solver.iso) assembled = assemble_dual_form(stage6.complex, *solver.iso);
  return DualFormPipeline{std::move(stage6), std::move(solver), std::move(assembled)};
}

}  // namespace fivedual
