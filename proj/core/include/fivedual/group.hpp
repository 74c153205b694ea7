#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fivedual/error.hpp"

namespace fivedual {

using Integer = mpz_class;
using ElementIndex = std::size_t;

/// Ways a multiplication table can fail to describe a group.
enum class GroupTableDefect {
  kEmpty,
  kNotSquare,
  kIndexOutOfRange,
  kNotLatinSquare,
  kNoIdentity,
  kNoInverse,
  kNotAssociative,
};

std::string_view to_string(GroupTableDefect defect);

class GroupTableError : public DomainError {
 public:
  GroupTableError(GroupTableDefect defect, const std::string& detail);
  GroupTableDefect defect() const { return defect_; }

 private:
  GroupTableDefect defect_;
};

/// A finite group given by its multiplication table. Elements are the
/// indices 0..order-1. Instances are immutable and shared by pointer.
class FiniteGroup {
 public:
  /// Groups above this order skip the O(n^3) associativity check.
  static constexpr std::size_t kAssociativityCheckLimit = 64;

  std::size_t order() const { return order_; }
  ElementIndex identity() const { return identity_; }
  ElementIndex mul(ElementIndex a, ElementIndex b) const { return table_[a * order_ + b]; }
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }

  const std::vector<ElementIndex>& inverse_table() const { return inverse_; }
  std::vector<std::vector<ElementIndex>> table() const;

  /// False only for tables above kAssociativityCheckLimit, which are trusted.
  bool associativity_verified() const { return associativity_verified_; }

  /// True when element i multiplies like t^i in C_n (identity 0,
  /// i*j = i+j mod n). Such groups print and parse as polynomials in t.
  bool is_standard_cyclic() const { return standard_cyclic_; }

  bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

 private:
  friend std::shared_ptr<const FiniteGroup> group_from_table(
      const std::vector<std::vector<ElementIndex>>& mul_table);

  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
  ElementIndex identity_ = 0;
  bool associativity_verified_ = false;
  bool standard_cyclic_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// C_n with element i standing for t^i.
GroupPtr cyclic_group(std::size_t n);

/// Validates the table (Latin square, identity, inverses, associativity
/// up to the check limit) and throws GroupTableError naming the defect.
GroupPtr group_from_table(const std::vector<std::vector<ElementIndex>>& mul_table);

bool same_group(const GroupPtr& a, const GroupPtr& b);

/// An element of ZG stored densely, one coefficient per group element.
class GroupRingElement {
 public:
  explicit GroupRingElement(GroupPtr group);
  GroupRingElement(GroupPtr group, std::vector<Integer> coeffs);

  static GroupRingElement zero(const GroupPtr& group) { return GroupRingElement(group); }
  static GroupRingElement one(const GroupPtr& group);
  static GroupRingElement basis(const GroupPtr& group, ElementIndex g, const Integer& coeff = 1);
  /// Sum of c * t^e over the given (coefficient, exponent) pairs; exponents
  /// reduced mod the order. Requires a standard cyclic group.
  static GroupRingElement polynomial(const GroupPtr& group,
                                     const std::vector<std::pair<long, long>>& terms);

  const GroupPtr& group() const { return group_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](ElementIndex g) const { return coeffs_[g]; }
  Integer& operator[](ElementIndex g) { return coeffs_[g]; }
  bool is_zero() const;

  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement& operator*=(const Integer& scalar);

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(GroupRingElement a, const Integer& s) { return a *= s; }
  friend GroupRingElement operator*(const Integer& s, GroupRingElement a) { return a *= s; }
  GroupRingElement operator-() const;

  bool operator==(const GroupRingElement& other) const;

 private:
  GroupPtr group_;
  std::vector<Integer> coeffs_;
};

/// Convolution product via the multiplication table.
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);
inline GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  return gr_mul(a, b);
}

/// Moves the coefficient of g to g^-1. An anti-automorphism of ZG.
GroupRingElement gr_involute(const GroupRingElement& a);

/// Sum of coefficients (the map ZG -> Z of the trivial module).
Integer augmentation(const GroupRingElement& a);

/// Sum of all group elements.
GroupRingElement norm_element(const GroupPtr& group);

/// Polynomial form ("1 + t - t^3") for standard cyclic groups, otherwise
/// "3*g2 - g0". Zero prints as "0".
std::string to_string(const GroupRingElement& a);

/// Parses "c0 + c1 t^e1 - ..." (also "2*t^3", "-t", "t^-1") over a
/// standard cyclic group. Throws DomainError on malformed input.
GroupRingElement parse_cyclic_polynomial(const GroupPtr& group, std::string_view text);

}  // namespace fivedual
