#pragma once

#include <cstddef>
#include <optional>

#include "fivedual/chain_map.hpp"

namespace fivedual {

/// The dual-form complex of L(n;1,1) over Z[C_n], all ranks 1:
///   d_5 = 1 - t^-1, d_4 = Sigma, d_3 = 1 - t^-1, d_2 = Sigma, d_1 = 1 - t.
/// Both generator certificates are the all-ones vector. Requires n >= 2.
ChainComplex lens_complex(std::size_t n);

/// The duality map dual(A) -> A with components (-1, -1, -t, 1, 1, 1),
/// degree 5 first.
ChainMap lens_duality_map(std::size_t n);

/// For n = 4k + 1:
///   alpha = t^(k+1) + t^k - t^-k - t^-(k+1)
///   beta  = sum_{r=-k+1}^{k} t^r - sum_{r=k+2}^{3k} t^r
/// with beta_inv found by linear solve.
struct AsdUnit {
  std::size_t k = 0;
  GroupRingElement alpha;
  GroupRingElement beta;
  GroupRingElement beta_inv;
};

/// Throws DomainError unless n = 4k + 1 with k >= 1, or if one of the
/// defining identities fails.
AsdUnit asd_unit(std::size_t n);

struct AsdTransform {
  AsdUnit unit;
  /// lens_complex(n) with d_3 replaced by alpha.
  ChainComplex a_prime;
  /// (1, 1, 1, beta, 1, 1) : A -> A'.
  ChainMap f;
  /// f phi f^* : dual(A') -> A'.
  ChainMap conjugated;
  /// alpha x = (f phi f^*)_2 - target_2.
  GroupRingElement x;
  /// Diagonal +-1 map homotopic to f phi f^*.
  ChainMap target;
  /// +1 when target = (-1, -1, -1, 1, 1, 1) from degree 5 down, -1 for
  /// the opposite sign.
  int target_sign = 0;
  /// Only component 2 (= x) is nonzero.
  ChainHomotopy homotopy;
};

/// Throws DomainError if no single-component homotopy to either signed
/// diagonal exists.
AsdTransform lens_asd_transform(std::size_t n);

struct LensInstance {
  std::size_t n = 0;
  ChainComplex a;
  ChainMap phi;
  std::optional<AsdTransform> asd;  // present for n = 4k + 1
};

LensInstance lens_instance(std::size_t n);

}  // namespace fivedual
