#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fivedual/gr_matrix.hpp"

namespace fivedual {

/// Explicit identifications coker(d_1) = Z and ker(d_top) = Z.
/// `bottom` is a 1 x (|G| rank_0) row: the functional F_0 -> Z whose kernel is
/// im(d_1). `top` is a (|G| rank_top) x 1 column generating ker(d_top).
struct GeneratorCertificates {
  std::optional<IntegerMatrix> top;
  std::optional<IntegerMatrix> bottom;

  bool operator==(const GeneratorCertificates& other) const = default;
};

/// A bounded complex of free ZG-modules F_top -> ... -> F_0.
/// Shapes are checked on construction; d o d = 0 is checked by
/// validate_complex, because it is a property a file may fail.
class ChainComplex {
 public:
  /// `ranks_by_degree[i]` is the rank of F_i; `boundaries[i-1]` is
  /// d_i : F_i -> F_{i-1}, shaped rank(i-1) x rank(i).
  ChainComplex(GroupPtr group, std::vector<std::size_t> ranks_by_degree,
               std::vector<GRMatrix> boundaries, GeneratorCertificates generators = {});

  const GroupPtr& group() const { return group_; }
  std::size_t top_degree() const { return ranks_.size() - 1; }
  std::size_t rank(std::size_t degree) const { return ranks_.at(degree); }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// d_degree, 1 <= degree <= top_degree.
  const GRMatrix& boundary(std::size_t degree) const;
  const std::vector<GRMatrix>& boundaries() const { return boundaries_; }
  const GeneratorCertificates& generators() const { return generators_; }

  ChainComplex with_boundary(std::size_t degree, GRMatrix d) const;
  ChainComplex with_generators(GeneratorCertificates generators) const;

  bool operator==(const ChainComplex& other) const;

 private:
  GroupPtr group_;
  std::vector<std::size_t> ranks_;
  std::vector<GRMatrix> boundaries_;
  GeneratorCertificates generators_;
};

struct DegreeCheck {
  std::size_t degree;
  bool passed;
  std::string witness;  // empty when passed
};

struct ValidationReport {
  bool shapes_consistent = true;
  std::vector<DegreeCheck> compositions;  // d_{i-1} d_i = 0, one entry per i >= 2

  bool valid() const;
};

ValidationReport validate_complex(const ChainComplex& complex);

/// Sum of (-1)^i rank_Z(F_i) = (-1)^i rank(i) |G|.
Integer euler_characteristic(const ChainComplex& complex);

/// F_top^* -> ... -> F_0^* regraded so degree i holds F_{top-i}^*, with
/// d_i replaced by dual_matrix(d_{top+1-i}). Generator certificates are
/// transposed and swapped so the natural pairing is multiplication.
ChainComplex dualize_complex(const ChainComplex& complex);

enum class Coefficients { kIntegral, kTrivial };

/// Integral: homology of the expanded complex (the universal cover).
/// Trivial: homology of the augmented complex (tensor with Z).
/// Degree 0 is coker(d_1), degree top is ker(d_top).
AbelianGroupInfo homology(const ChainComplex& complex, std::size_t degree, Coefficients coefficients);

/// Classical cochain indexing: cohomology in degree k is the homology of
/// the dual complex at F_k^*, i.e. homology(dualize_complex(C), top - k).
AbelianGroupInfo cohomology(const ChainComplex& complex, std::size_t degree, Coefficients coefficients);

/// Computes a bottom functional when coker(d_1) is infinite cyclic, or
/// returns the stored one. Computed certificates are primitive with the
/// first nonzero coordinate positive.
std::optional<IntegerMatrix> bottom_generator(const ChainComplex& complex);
std::optional<IntegerMatrix> top_generator(const ChainComplex& complex);

/// The same complex with both certificates filled in where they exist.
ChainComplex with_computed_generators(const ChainComplex& complex);

/// One line of an ALG5 membership report.
struct MembershipItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct Alg5Report {
  bool member = false;
  std::vector<MembershipItem> items;
  std::optional<IntegerMatrix> top_generator;
  std::optional<IntegerMatrix> bottom_generator;
};

/// Length-6 complexes exact at F_4 and F_1, with coker(d_1) = Z and
/// ker(d_5) = Z carrying trivial G-action, and Euler characteristic 0.
/// Stored generator certificates are checked as well.
Alg5Report is_alg5(const ChainComplex& complex);

}  // namespace fivedual
