#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fivedual/complex.hpp"

namespace fivedual {

/// Degree-preserving map of complexes; components[i] : source_i -> target_i.
class ChainMap {
 public:
  ChainMap(ChainComplex source, ChainComplex target, std::vector<GRMatrix> components);

  /// Component matrices given from the top degree down, as drawn in
  /// diagrams (F_5 on the left).
  static ChainMap from_top(ChainComplex source, ChainComplex target, std::vector<GRMatrix> top_down);
  static ChainMap identity(const ChainComplex& complex);
  /// Every component is x times the identity.
  static ChainMap scalar(const ChainComplex& source, const ChainComplex& target,
                         const std::vector<GroupRingElement>& top_down);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  const GRMatrix& component(std::size_t degree) const { return components_.at(degree); }
  const std::vector<GRMatrix>& components() const { return components_; }
  std::size_t top_degree() const { return source_.top_degree(); }

  ChainMap negated() const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::vector<GRMatrix> components_;
};

/// g o f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// f^* : target^* -> source^*, component in degree i is dual(f_{top-i}).
ChainMap dual_chain_map(const ChainMap& f);

struct ChainMapReport {
  bool commutes = true;
  std::vector<DegreeCheck> squares;  // target.d_i f_i = f_{i-1} source.d_i
  /// Induced map on coker(d_1) = Z and on ker(d_top) = Z, when both complexes
  /// carry (or admit) the identifications and the induced map is a multiple.
  std::optional<Integer> bottom_scalar;  // "x"
  std::optional<Integer> top_scalar;     // "y"
  std::string scalar_detail;
};

ChainMapReport is_chain_map(const ChainMap& f);

/// components[i] : source_i -> target_{i+1}, i = 0 .. top-1. Witnesses
/// f - g = d I + I d.
class ChainHomotopy {
 public:
  ChainHomotopy(ChainMap f, ChainMap g, std::vector<GRMatrix> components);
  /// Homotopy with all components zero except the given degree.
  static ChainHomotopy single(ChainMap f, ChainMap g, std::size_t degree, GRMatrix component);

  const ChainMap& f() const { return f_; }
  const ChainMap& g() const { return g_; }
  const GRMatrix& component(std::size_t degree) const { return components_.at(degree); }
  const std::vector<GRMatrix>& components() const { return components_; }
  /// Degrees whose component is nonzero.
  std::vector<std::size_t> support() const;

 private:
  ChainMap f_;
  ChainMap g_;
  std::vector<GRMatrix> components_;
};

struct HomotopyReport {
  bool verified = true;
  std::vector<DegreeCheck> degrees;
  /// Homotopic maps induce the same end scalars.
  bool end_scalars_agree = true;
};

HomotopyReport verify_homotopy(const ChainHomotopy& h);

}  // namespace fivedual
