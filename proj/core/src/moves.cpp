#include "fivedual/moves.hpp"

namespace fivedual {

namespace {

IntegerMatrix pad_row(const IntegerMatrix& row, std::size_t extra) {
  IntegerMatrix r(1, row.cols() + extra);
  for (std::size_t j = 0; j < row.cols(); ++j) r(0, j) = row(0, j);
  return r;
}

IntegerMatrix pad_column(const IntegerMatrix& col, std::size_t extra) {
  IntegerMatrix c(col.rows() + extra, 1);
  for (std::size_t i = 0; i < col.rows(); ++i) c(i, 0) = col(i, 0);
  return c;
}

GRMatrix embed(const GroupPtr& g, const GRMatrix& m, std::size_t rows, std::size_t cols) {
  GRMatrix r(g, rows, cols);
  r.set_block(0, 0, m);
  return r;
}

// [I; 0] : ZG^small -> ZG^(small + extra)
GRMatrix inclusion_block(const GroupPtr& g, std::size_t small, std::size_t extra) {
  return embed(g, GRMatrix::identity(g, small), small + extra, small);
}

}  // namespace

ChainComplex stabilize(const ChainComplex& complex, std::size_t n) {
  if (complex.top_degree() == 0) throw DomainError("stabilize: complex has no boundary");
  const std::size_t top = complex.top_degree();
  auto ranks = complex.ranks();
  ranks[top] += n;
  auto boundaries = complex.boundaries();
  boundaries[top - 1] = embed(complex.group(), complex.boundary(top), ranks[top - 1], ranks[top]);
  GeneratorCertificates gens;
  gens.bottom = complex.generators().bottom;  // the top kernel grows, so no top certificate survives
  return ChainComplex(complex.group(), std::move(ranks), std::move(boundaries), std::move(gens));
}

SimpleMove expand_move(const ChainComplex& complex, std::size_t position, std::size_t rank,
                       std::optional<GRMatrix> iso, std::string label) {
  const std::size_t top = complex.top_degree();
  if (position + 1 > top) throw DomainError("expand_move: position must be below the top degree");
  const auto& G = complex.group();
  GRMatrix block = iso ? *iso : GRMatrix::identity(G, rank);
  if (block.rows() != rank || block.cols() != rank) throw ShapeError("expand_move: iso must be rank x rank");
  auto block_inverse = gr_inverse(block);
  if (!block_inverse) throw DomainError("expand_move: iso is not invertible over ZG");

  const std::size_t lo = position, hi = position + 1;
  auto ranks = complex.ranks();
  ranks[lo] += rank;
  ranks[hi] += rank;

  auto boundaries = complex.boundaries();
  boundaries[hi - 1] = direct_sum(complex.boundary(hi), block);
  if (hi + 1 <= top) boundaries[hi] = embed(G, complex.boundary(hi + 1), ranks[hi], ranks[hi + 1]);
  if (lo >= 1) boundaries[lo - 1] = embed(G, complex.boundary(lo), ranks[lo - 1], ranks[lo]);

  GeneratorCertificates gens = complex.generators();
  const std::size_t order = G->order();
  if (lo == 0 && gens.bottom) gens.bottom = pad_row(*gens.bottom, rank * order);
  if (hi == top && gens.top) gens.top = pad_column(*gens.top, rank * order);

  ChainComplex expanded(G, ranks, std::move(boundaries), std::move(gens));

  std::vector<GRMatrix> incl, proj;
  for (std::size_t i = 0; i <= top; ++i) {
    if (i == lo || i == hi) {
      auto in = inclusion_block(G, complex.rank(i), rank);
      proj.push_back(dual_matrix(in));  // [I, 0]; entries are 0/1 so dual is transpose
      incl.push_back(std::move(in));
    } else {
      incl.push_back(GRMatrix::identity(G, complex.rank(i)));
      proj.push_back(GRMatrix::identity(G, complex.rank(i)));
    }
  }
  ChainMap inclusion(complex, expanded, std::move(incl));
  ChainMap projection(expanded, complex, std::move(proj));

  std::vector<GRMatrix> h;
  for (std::size_t i = 0; i < top; ++i) {
    GRMatrix c(G, ranks[i + 1], ranks[i]);
    if (i == lo) c.set_block(complex.rank(hi), complex.rank(lo), *block_inverse);
    h.push_back(std::move(c));
  }
  ChainHomotopy homotopy(ChainMap::identity(expanded), compose(inclusion, projection), std::move(h));

  return SimpleMove{std::move(expanded), std::move(inclusion), std::move(projection), std::move(homotopy),
                    MoveRecord{position, rank, std::move(label)}};
}

ChainComplex collapse_move(const ChainComplex& complex, const MoveRecord& record) {
  const std::size_t top = complex.top_degree();
  const std::size_t lo = record.position, hi = record.position + 1, f = record.rank;
  if (hi > top) throw DomainError("collapse_move: position out of range");
  if (complex.rank(lo) < f || complex.rank(hi) < f)
    throw DomainError("collapse_move: modules are smaller than the recorded block");
  const std::size_t rl = complex.rank(lo) - f, rh = complex.rank(hi) - f;
  const auto& d = complex.boundary(hi);
  const auto& G = complex.group();
  if (!d.block(0, rh, rl, f).is_zero() || !d.block(rl, 0, f, rh).is_zero())
    throw DomainError("collapse_move: recorded block is coupled to the rest of d_" + std::to_string(hi));
  if (!gr_inverse(d.block(rl, rh, f, f))) throw DomainError("collapse_move: recorded block is not invertible");
  if (hi + 1 <= top && !complex.boundary(hi + 1).block(rh, 0, f, complex.rank(hi + 1)).is_zero())
    throw DomainError("collapse_move: d_" + std::to_string(hi + 1) + " reaches the recorded block");
  if (lo >= 1 && !complex.boundary(lo).block(0, rl, complex.rank(lo - 1), f).is_zero())
    throw DomainError("collapse_move: d_" + std::to_string(lo) + " is nonzero on the recorded block");

  auto ranks = complex.ranks();
  ranks[lo] = rl;
  ranks[hi] = rh;
  auto boundaries = complex.boundaries();
  boundaries[hi - 1] = d.block(0, 0, rl, rh);
  if (hi + 1 <= top) boundaries[hi] = complex.boundary(hi + 1).block(0, 0, rh, ranks[hi + 1]);
  if (lo >= 1) boundaries[lo - 1] = complex.boundary(lo).block(0, 0, ranks[lo - 1], rl);

  GeneratorCertificates gens = complex.generators();
  const std::size_t order = G->order();
  if (lo == 0 && gens.bottom) {
    IntegerMatrix b(1, rl * order);
    for (std::size_t j = 0; j < b.cols(); ++j) b(0, j) = (*gens.bottom)(0, j);
    gens.bottom = b;
  }
  if (hi == top && gens.top) {
    IntegerMatrix t(rh * order, 1);
    for (std::size_t i = 0; i < t.rows(); ++i) t(i, 0) = (*gens.top)(i, 0);
    gens.top = t;
  }
  return ChainComplex(G, std::move(ranks), std::move(boundaries), std::move(gens));
}

Stage6Result to_dual_form_stage6(const ChainComplex& complex) {
  const auto membership = is_alg5(complex);
  if (!membership.member) throw DomainError("to_dual_form_stage6: input is not an ALG5 complex");

  const auto c = [&](std::size_t i) { return complex.rank(i); };
  const std::size_t r1 = c(1) + c(5), r4 = c(4) + c(0);
  const std::size_t r2 = c(2) + r4, r3 = c(3) + r1;
  if (r2 != r3) throw DomainError("to_dual_form_stage6: rank(R2) != rank(R3) although chi = 0");

  struct Step {
    std::size_t position, rank;
    const char* label;
  };
  const Step steps[] = {
      {0, c(5), "C5* into degrees 1,0 (delta_1)"},
      {4, c(0), "C0* into degrees 5,4 (delta_5)"},
      {3, r1, "R1* into degrees 4,3 (delta_4)"},
      {1, r4, "R4* into degrees 2,1 (delta_2)"},
      {2, r2, "R2* / R3* into degrees 3,2 (delta_3, theta = 1)"},
  };

  ChainComplex current = complex;
  ChainMap inclusion = ChainMap::identity(complex);
  ChainMap projection = ChainMap::identity(complex);
  std::vector<MoveRecord> log;
  for (const auto& step : steps) {
    auto move = expand_move(current, step.position, step.rank, std::nullopt, step.label);
    inclusion = compose(move.inclusion, inclusion);
    projection = compose(projection, move.projection);
    log.push_back(move.record);
    current = std::move(move.complex);
  }
  return Stage6Result{std::move(current), std::move(log), std::move(inclusion), std::move(projection)};
}

}  // namespace fivedual
