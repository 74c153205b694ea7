#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "fivedual/dual_form.hpp"
#include "fivedual/moves.hpp"

namespace fivedual {

/// F_2 -> F_1 -> F_0 of a length-6 complex, carrying its bottom functional.
ChainComplex tail_segment(const ChainComplex& complex);

/// The same three terms taken from the dual complex: F_3^* -> F_4^* -> F_5^*,
/// with the transposed top generator as bottom functional.
ChainComplex head_segment(const ChainComplex& complex);

/// Mutually inverse chain isomorphisms between two segments.
struct SegmentIso {
  ChainMap forward;  // tail -> head (h)
  ChainMap inverse;  // head -> tail (k)
  std::string method;
};

struct SegmentIsoReport {
  bool verified = true;
  std::vector<std::string> failures;
};

/// Both maps commute with the boundaries, compose to the identity on each
/// side, and carry the tail functional to the head functional.
SegmentIsoReport verify_segment_iso(const SegmentIso& iso);

struct SolverOutcome {
  std::optional<SegmentIso> iso;
  std::size_t nodes_used = 0;
  std::string detail;
};

/// Best effort. A bounded search over signed permutation matrices with
/// group-element entries runs first (at most `budget` nodes); then a
/// constructive swap for segments whose zero columns leave room for it.
/// Every candidate is verified before it is returned; absence proves
/// nothing.
SolverOutcome solve_chain_isomorphism(const ChainComplex& tail, const ChainComplex& head,
                                      std::size_t budget = 200000);

struct AssembledDualForm {
  ChainComplex complex;
  ChainMap equivalence;  // stage-6 complex -> assembled complex (a chain isomorphism)
  DualFormView view;
};

/// d_1, d_2 from the tail, their duals on top, d_3 = delta_3 k_2^*.
/// Throws DomainError if `iso` fails verification or the result is not
/// recognized as a dual form.
AssembledDualForm assemble_dual_form(const ChainComplex& stage6, const SegmentIso& iso);

struct DualFormPipeline {
  Stage6Result stage6;
  SolverOutcome solver;
  std::optional<AssembledDualForm> assembled;
};

/// Stage 6 followed by the solver and assembly when the solver succeeds.
DualFormPipeline to_dual_form(const ChainComplex& complex, std::size_t budget = 200000);

}  // namespace fivedual
