#pragma once

#include <cstddef>

#include "fivedual/chain_map.hpp"
#include "fivedual/dual_form.hpp"

namespace fivedual {

/// A duality equivalence brought to the shape
///   (-1, -1, theta_2, theta_1, 1, 1)   (degrees 5 down to 0)
/// together with a homotopy to the map it came from.
struct NormalizedDuality {
  /// The map that was normalized: the input, or its negation when the
  /// input had end scalars (x, y) = (-1, 1).
  ChainMap phi;
  bool negated = false;
  ChainMap psi;
  GRMatrix theta1;  // degree 2
  GRMatrix theta2;  // degree 3
  /// psi - phi = dI + Id, with I_2 = 0.
  ChainHomotopy homotopy;
  /// Augmentation of the trace of theta_1 and theta_2, reduced mod |G|.
  std::size_t theta1_trace_mod_order = 0;
  std::size_t theta2_trace_mod_order = 0;
};

/// `phi` must be a chain map dual(view.base) -> view.base with end scalars
/// (1, -1) or (-1, 1). Throws DomainError when it is not, or when a lift
/// cannot be solved (which means the input is not ALG5).
NormalizedDuality normalize_duality(const DualFormView& view, const ChainMap& phi);

/// d_3 theta_2 == theta_1 dual(d_3).
bool central_square_holds(const DualFormView& view, const GRMatrix& theta1, const GRMatrix& theta2);

}  // namespace fivedual
