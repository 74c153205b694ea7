#pragma once

#include <string>
#include <string_view>

#include "fivedual/chain_map.hpp"

namespace fivedual {

/// Malformed input. `location` is a JSON path such as "differentials[2][0][1]".
class FormatError : public Error {
 public:
  FormatError(std::string location, const std::string& message)
      : Error(location.empty() ? message : location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// Complex file:
///   {"group": {"type": "cyclic", "order": n} | {"type": "table", "mul": [[...]]},
///    "ranks": [r5, ..., r0],
///    "differentials": [d5, ..., d1],
///    "generators": {"top": [...], "bottom": [...]}}
/// Each d_i is a rank(i-1) x rank(i) grid of entries. An entry is a list of
/// [coefficient, element] pairs with zero terms omitted; over a cyclic
/// group a polynomial string such as "1 - t^4" is accepted as well.
/// Coefficients that do not fit a 64-bit integer are written as strings.
/// "generators" is optional, as is each of its members.
ChainComplex parse_complex(std::string_view text);
std::string serialize_complex(const ChainComplex& complex);

/// Map file: {"components": [c5, ..., c0]}; shapes come from the two complexes.
ChainMap parse_chain_map(std::string_view text, const ChainComplex& source, const ChainComplex& target);
std::string serialize_chain_map(const ChainMap& map);

/// {"rows": r, "cols": c, "entries": [[...], ...]} over the given group.
GRMatrix parse_gr_matrix(std::string_view text, const GroupPtr& group);
std::string serialize_gr_matrix(const GRMatrix& m);

/// Term-list form of one element, e.g. [[1,0],[-1,4]], as compact JSON.
std::string serialize_element(const GroupRingElement& a);

ChainComplex read_complex_file(const std::string& path);
ChainMap read_chain_map_file(const std::string& path, const ChainComplex& source, const ChainComplex& target);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fivedual
