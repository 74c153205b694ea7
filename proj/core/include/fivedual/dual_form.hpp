#pragma once

#include <optional>
#include <string>

#include "fivedual/complex.hpp"

namespace fivedual {

/// A length-6 complex of the shape
///   F_0^* -d_1^*-> F_1^* -d_2^*-> F_2^* -d_3-> F_2 -d_2-> F_1 -d_1-> F_0.
/// d_3 carries the bilinear form on J, the dual of ker(d_2).
struct DualFormView {
  ChainComplex base;
  GRMatrix d1;
  GRMatrix d2;
  GRMatrix d3;
  /// rank_Z of J = |G| rank(F_2) - rank_Z(d_2).
  std::size_t j_rank = 0;
  /// rank_Z of the expanded d_3.
  std::size_t form_rank = 0;
};

struct DualFormRecognition {
  std::optional<DualFormView> view;
  std::string diagnostic;  // why recognition failed; empty on success
};

DualFormRecognition recognize_dual_form(const ChainComplex& complex);

/// dual(d_3) == -d_3 exactly.
bool asd_check(const DualFormView& view);

struct ObstructionReport {
  bool group_order_even = false;
  std::size_t h3_free_rank = 0;
  bool obstructed = false;
  /// j_rank mod |G|; |G| - 1 for dual forms of ALG5 complexes.
  std::size_t j_rank_congruence = 0;
  /// h3_free_rank == j_rank - form_rank (H_3 of the cover is ker of the form).
  bool h3_cross_check = false;
  std::size_t j_rank = 0;
  std::size_t form_rank = 0;
};

/// Even |G| together with even-rank H_3 of the cover rules out an
/// antisymmetric representative.
ObstructionReport obstruction_check(const DualFormView& view);

}  // namespace fivedual
