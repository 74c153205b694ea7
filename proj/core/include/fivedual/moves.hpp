#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fivedual/chain_map.hpp"

namespace fivedual {

/// Adds a free module of rank n to the top module; d_top is extended by
/// zero columns.
ChainComplex stabilize(const ChainComplex& complex, std::size_t n);

/// One simple homotopy move: a free summand of `rank` appended to the
/// modules in degrees position+1 and position, joined by `iso`.
struct MoveRecord {
  std::size_t position = 0;
  std::size_t rank = 0;
  std::string label;

  bool operator==(const MoveRecord& other) const = default;
};

struct SimpleMove {
  ChainComplex complex;
  ChainMap inclusion;   // original -> expanded
  ChainMap projection;  // expanded -> original
  /// id - inclusion o projection = dH + Hd on the expanded complex.
  ChainHomotopy homotopy;
  MoveRecord record;
};

/// `iso` defaults to the identity; it must be invertible over ZG. The
/// neighbouring boundaries gain zero rows (above) and zero columns (below).
SimpleMove expand_move(const ChainComplex& complex, std::size_t position, std::size_t rank,
                       std::optional<GRMatrix> iso = std::nullopt, std::string label = {});

/// Removes the block recorded by `record`. Throws DomainError unless the
/// trailing summands in degrees position+1 and position really form an
/// isomorphism block with zero coupling to the rest.
ChainComplex collapse_move(const ChainComplex& complex, const MoveRecord& record);

struct Stage6Result {
  ChainComplex complex;
  std::vector<MoveRecord> moves;
  ChainMap inclusion;   // input -> stage 6
  ChainMap projection;  // stage 6 -> input
};

/// Five simple moves taking an ALG5 complex C to
///   R5+R0* -> R4+R1* -> R3+R2* -> R2+R3* -> R1+R4* -> R0+R5*
/// with R1 = C1+C5*, R4 = C4+C0*, R2 = C2+R4*, R3 = C3+R1*, and the
/// identity as the isomorphism R2* -> R3*. Throws DomainError if C is not
/// ALG5.
Stage6Result to_dual_form_stage6(const ChainComplex& complex);

}  // namespace fivedual
