#include "fivedual/duality.hpp"

namespace fivedual {

namespace {

GRMatrix lift(const GRMatrix& a, const GRMatrix& b, const char* what) {
  auto x = solve_gr_linear(a, b);
  if (!x) throw DomainError(std::string("normalize_duality: no lift for ") + what);
  return *x;
}

std::size_t trace_mod_order(const GRMatrix& m) {
  Integer trace = 0;
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) trace += augmentation(m(i, i));
  const Integer order = static_cast<unsigned long>(m.group()->order());
  Integer r = trace % order;
  if (r < 0) r += order;
  return r.get_ui();
}

}  // namespace

bool central_square_holds(const DualFormView& view, const GRMatrix& theta1, const GRMatrix& theta2) {
  return view.d3 * theta2 == theta1 * dual_matrix(view.d3);
}

NormalizedDuality normalize_duality(const DualFormView& view, const ChainMap& phi_in) {
  const auto& C = view.base;
  const auto D = dualize_complex(C);
  if (!(phi_in.source().boundaries() == D.boundaries()) || !(phi_in.target().boundaries() == C.boundaries()))
    throw ShapeError("normalize_duality: map must run from the dual complex to the complex");

  const auto report = is_chain_map(phi_in);
  if (!report.commutes) throw DomainError("normalize_duality: input is not a chain map");
  if (!report.bottom_scalar || !report.top_scalar)
    throw DomainError("normalize_duality: end scalars unavailable: " + report.scalar_detail);
  const Integer x = *report.bottom_scalar, y = *report.top_scalar;
  bool negated = false;
  if (x == -1 && y == 1) {
    negated = true;
  } else if (!(x == 1 && y == -1)) {
    throw DomainError("normalize_duality: end scalars (" + x.get_str() + ", " + y.get_str() +
                      ") are not (1, -1) up to sign");
  }
  const ChainMap phi = negated ? phi_in.negated() : phi_in;

  const auto& G = C.group();
  const auto& d1 = view.d1;
  const auto& d2 = view.d2;
  const auto id = [&](std::size_t degree) { return GRMatrix::identity(G, C.rank(degree)); };

  const auto I0 = lift(d1, id(0) - phi.component(0), "I_0");
  const auto I1 = lift(d2, id(1) - phi.component(1) - I0 * d1, "I_1");
  const auto X4 = lift(d1, -id(0) - dual_matrix(phi.component(5)), "I_4");
  const auto X3 = lift(d2, -id(1) - dual_matrix(phi.component(4)) - X4 * d1, "I_3");
  const auto I4 = dual_matrix(X4);
  const auto I3 = dual_matrix(X3);
  const GRMatrix I2(G, C.rank(3), D.rank(2));

  auto theta1 = phi.component(2) + I1 * d2;
  auto theta2 = phi.component(3) + dual_matrix(d2) * I3;

  ChainMap psi(D, C, {id(0), id(1), theta1, theta2, -id(4), -id(5)});
  ChainHomotopy homotopy(psi, phi, {I0, I1, I2, I3, I4});

  const auto t1 = trace_mod_order(theta1);
  const auto t2 = trace_mod_order(theta2);
  return NormalizedDuality{phi, negated, std::move(psi), std::move(theta1), std::move(theta2),
                           std::move(homotopy), t1, t2};
}

}  // namespace fivedual
