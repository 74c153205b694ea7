#include "fivedual/dual_form.hpp"

namespace fivedual {

DualFormRecognition recognize_dual_form(const ChainComplex& complex) {
  DualFormRecognition result;
  if (complex.top_degree() != 5) {
    result.diagnostic = "not a length-6 complex";
    return result;
  }
  if (!validate_complex(complex).valid()) {
    result.diagnostic = "boundaries do not compose to zero";
    return result;
  }
  for (std::size_t i = 0; i < 3; ++i)
    if (complex.rank(i) != complex.rank(5 - i)) {
      result.diagnostic = "ranks do not mirror: rank F_" + std::to_string(i) + " = " +
                          std::to_string(complex.rank(i)) + ", rank F_" + std::to_string(5 - i) +
                          " = " + std::to_string(complex.rank(5 - i));
      return result;
    }
  if (!(complex.boundary(5) == dual_matrix(complex.boundary(1)))) {
    result.diagnostic = "d_5 differs from dual(d_1)";
    return result;
  }
  if (!(complex.boundary(4) == dual_matrix(complex.boundary(2)))) {
    result.diagnostic = "d_4 differs from dual(d_2)";
    return result;
  }
  const auto& d2 = complex.boundary(2);
  const auto& d3 = complex.boundary(3);
  DualFormView view{complex, complex.boundary(1), d2, d3, 0, 0};
  view.j_rank = complex.group()->order() * complex.rank(2) - integer_rank(expand_regular(d2));
  view.form_rank = integer_rank(expand_regular(d3));
  result.view = std::move(view);
  return result;
}

bool asd_check(const DualFormView& view) { return dual_matrix(view.d3) == -view.d3; }

ObstructionReport obstruction_check(const DualFormView& view) {
  ObstructionReport report;
  const std::size_t order = view.base.group()->order();
  report.group_order_even = order % 2 == 0;
  report.h3_free_rank = homology(view.base, 3, Coefficients::kIntegral).free_rank;
  report.j_rank = view.j_rank;
  report.form_rank = view.form_rank;
  report.h3_cross_check = view.form_rank <= view.j_rank && report.h3_free_rank == view.j_rank - view.form_rank;
  report.j_rank_congruence = view.j_rank % order;
  report.obstructed = report.group_order_even && report.h3_free_rank % 2 == 0;
  return report;
}

}  // namespace fivedual
