#include "fivedual/group.hpp"

#include <cctype>
#include <sstream>

namespace fivedual {

std::string_view to_string(GroupTableDefect defect) {
  switch (defect) {
    case GroupTableDefect::kEmpty: return "empty table";
    case GroupTableDefect::kNotSquare: return "table is not square";
    case GroupTableDefect::kIndexOutOfRange: return "entry out of range";
    case GroupTableDefect::kNotLatinSquare: return "not a Latin square";
    case GroupTableDefect::kNoIdentity: return "no identity element";
    case GroupTableDefect::kNoInverse: return "missing inverse";
    case GroupTableDefect::kNotAssociative: return "multiplication is not associative";
  }
  return "unknown defect";
}

GroupTableError::GroupTableError(GroupTableDefect defect, const std::string& detail)
    : DomainError(std::string(to_string(defect)) + (detail.empty() ? "" : ": " + detail)),
      defect_(defect) {}

std::vector<std::vector<ElementIndex>> FiniteGroup::table() const {
  std::vector<std::vector<ElementIndex>> rows(order_);
  for (std::size_t a = 0; a < order_; ++a)
    rows[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  return rows;
}

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw DomainError("cyclic_group: order must be positive");
  std::vector<std::vector<ElementIndex>> table(n, std::vector<ElementIndex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return group_from_table(table);
}

GroupPtr group_from_table(const std::vector<std::vector<ElementIndex>>& mul_table) {
  const std::size_t n = mul_table.size();
  if (n == 0) throw GroupTableError(GroupTableDefect::kEmpty, "");
  for (std::size_t a = 0; a < n; ++a)
    if (mul_table[a].size() != n)
      throw GroupTableError(GroupTableDefect::kNotSquare, "row " + std::to_string(a));

  std::shared_ptr<FiniteGroup> group(new FiniteGroup());
  group->order_ = n;
  group->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (mul_table[a][b] >= n)
        throw GroupTableError(GroupTableDefect::kIndexOutOfRange,
                              "entry (" + std::to_string(a) + "," + std::to_string(b) + ")");
      group->table_[a * n + b] = mul_table[a][b];
    }

  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      auto r = group->mul(a, b);
      auto c = group->mul(b, a);
      if (row_seen[r] || col_seen[c])
        throw GroupTableError(GroupTableDefect::kNotLatinSquare,
                              "row/column " + std::to_string(a) + " repeats an element");
      row_seen[r] = col_seen[c] = true;
    }
  }

  bool found_identity = false;
  for (std::size_t e = 0; e < n && !found_identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = group->mul(e, a) == a && group->mul(a, e) == a;
    if (ok) {
      group->identity_ = e;
      found_identity = true;
    }
  }
  if (!found_identity) throw GroupTableError(GroupTableDefect::kNoIdentity, "");

  group->inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (group->mul(a, b) == group->identity_ && group->mul(b, a) == group->identity_) {
        group->inverse_[a] = b;
        break;
      }
    if (group->inverse_[a] == n)
      throw GroupTableError(GroupTableDefect::kNoInverse, "element " + std::to_string(a));
  }

  if (n <= FiniteGroup::kAssociativityCheckLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (group->mul(group->mul(a, b), c) != group->mul(a, group->mul(b, c)))
            throw GroupTableError(GroupTableDefect::kNotAssociative,
                                  "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + ")");
    group->associativity_verified_ = true;
  }

  bool cyclic = group->identity_ == 0;
  for (std::size_t a = 0; a < n && cyclic; ++a)
    for (std::size_t b = 0; b < n && cyclic; ++b) cyclic = group->mul(a, b) == (a + b) % n;
  group->standard_cyclic_ = cyclic;
  return group;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

GroupRingElement::GroupRingElement(GroupPtr group)
    : group_(std::move(group)), coeffs_(group_->order()) {}

GroupRingElement::GroupRingElement(GroupPtr group, std::vector<Integer> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_->order())
    throw ShapeError("GroupRingElement: coefficient count differs from group order");
}

GroupRingElement GroupRingElement::one(const GroupPtr& group) {
  return basis(group, group->identity());
}

GroupRingElement GroupRingElement::basis(const GroupPtr& group, ElementIndex g,
                                         const Integer& coeff) {
  if (g >= group->order()) throw DomainError("GroupRingElement::basis: index out of range");
  GroupRingElement e(group);
  e.coeffs_[g] = coeff;
  return e;
}

GroupRingElement GroupRingElement::polynomial(const GroupPtr& group,
                                              const std::vector<std::pair<long, long>>& terms) {
  if (!group->is_standard_cyclic())
    throw DomainError("polynomial elements need a standard cyclic group");
  const long n = static_cast<long>(group->order());
  GroupRingElement e(group);
  for (auto [c, exponent] : terms) e.coeffs_[static_cast<std::size_t>(((exponent % n) + n) % n)] += c;
  return e;
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  if (!same_group(group_, other.group_)) throw ShapeError("group ring addition: group mismatch");
  for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] += other.coeffs_[g];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  if (!same_group(group_, other.group_)) throw ShapeError("group ring subtraction: group mismatch");
  for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] -= other.coeffs_[g];
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool GroupRingElement::operator==(const GroupRingElement& other) const {
  return same_group(group_, other.group_) && coeffs_ == other.coeffs_;
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) {
  if (!same_group(a.group(), b.group())) throw ShapeError("gr_mul: group mismatch");
  const auto& G = *a.group();
  GroupRingElement r(a.group());
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (a[g] == 0) continue;
    for (std::size_t h = 0; h < G.order(); ++h) {
      if (b[h] == 0) continue;
      r[G.mul(g, h)] += a[g] * b[h];
    }
  }
  return r;
}

GroupRingElement gr_involute(const GroupRingElement& a) {
  const auto& G = *a.group();
  GroupRingElement r(a.group());
  for (std::size_t g = 0; g < G.order(); ++g) r[G.inv(g)] = a[g];
  return r;
}

Integer augmentation(const GroupRingElement& a) {
  Integer sum = 0;
  for (const auto& c : a.coeffs()) sum += c;
  return sum;
}

GroupRingElement norm_element(const GroupPtr& group) {
  return GroupRingElement(group, std::vector<Integer>(group->order(), Integer(1)));
}

std::string to_string(const GroupRingElement& a) {
  const auto& G = *a.group();
  std::ostringstream out;
  bool first = true;
  auto emit = [&](std::size_t g) {
    const Integer& c = a[g];
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_term = G.is_standard_cyclic() ? g == 0 : false;
    if (G.is_standard_cyclic()) {
      if (unit_term) {
        out << magnitude.get_str();
      } else {
        if (magnitude != 1) out << magnitude.get_str();
        out << "t";
        if (g != 1) out << "^" << g;
      }
    } else {
      if (magnitude != 1) out << magnitude.get_str() << "*";
      out << "g" << g;
    }
  };
  for (std::size_t g = 0; g < G.order(); ++g)
    if (a[g] != 0) emit(g);
  return first ? "0" : out.str();
}

GroupRingElement parse_cyclic_polynomial(const GroupPtr& group, std::string_view text) {
  if (!group->is_standard_cyclic())
    throw DomainError("polynomial syntax needs a standard cyclic group");
  const long n = static_cast<long>(group->order());
  GroupRingElement result(group);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw DomainError("bad polynomial '" + std::string(text) + "' at offset " +
                      std::to_string(pos) + ": " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  skip_ws();
  if (pos == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    Integer coeff = 1;
    bool have_coeff = false;
    std::string digits = read_digits();
    if (!digits.empty()) {
      coeff = Integer(digits);
      have_coeff = true;
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      if (!have_coeff) fail("'*' without coefficient");
      ++pos;
      skip_ws();
    }
    long exponent = 0;
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      exponent = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        int esign = 1;
        if (pos < text.size() && text[pos] == '-') {
          esign = -1;
          ++pos;
        }
        std::string e = read_digits();
        if (e.empty()) fail("missing exponent");
        exponent = esign * std::stol(e);
      }
    } else if (!have_coeff) {
      fail("expected coefficient or 't'");
    }
    result[static_cast<std::size_t>(((exponent % n) + n) % n)] += sign * coeff;
  }
  return result;
}

}  // namespace fivedual
