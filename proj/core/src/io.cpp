#include "fivedual/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fivedual {

namespace {

using json = nlohmann::ordered_json;

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& base, const char* key) { return base.empty() ? key : base + "." + key; }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError("byte " + std::to_string(e.byte), "invalid JSON");
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(at(where, key), "missing");
  return *it;
}

const json& array_of(const json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) throw FormatError(where, "expected an array");
  if (j.size() != size)
    throw FormatError(where, "expected " + std::to_string(size) + " items, found " + std::to_string(j.size()));
  return j;
}

std::size_t read_index(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw FormatError(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Integer read_integer(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw FormatError(where, "not a decimal integer");
    return v;
  }
  throw FormatError(where, "expected an integer");
}

json write_integer(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

GroupPtr read_group(const json& j, const std::string& where) {
  const auto& type = member(j, "type", where);
  if (type == "cyclic") {
    const auto n = read_index(member(j, "order", where), at(where, "order"));
    if (n == 0) throw FormatError(at(where, "order"), "order must be positive");
    return cyclic_group(n);
  }
  if (type == "table") {
    const auto& mul = member(j, "mul", where);
    if (!mul.is_array()) throw FormatError(at(where, "mul"), "expected an array of rows");
    std::vector<std::vector<ElementIndex>> table;
    for (std::size_t r = 0; r < mul.size(); ++r) {
      if (!mul[r].is_array()) throw FormatError(at(at(where, "mul"), r), "expected a row");
      auto& row = table.emplace_back();
      for (std::size_t c = 0; c < mul[r].size(); ++c) row.push_back(read_index(mul[r][c], at(at(at(where, "mul"), r), c)));
    }
    try {
      return group_from_table(table);
    } catch (const GroupTableError& e) {
      throw FormatError(at(where, "mul"), e.what());
    }
  }
  throw FormatError(at(where, "type"), "expected \"cyclic\" or \"table\"");
}

json write_group(const GroupPtr& g) {
  json j;
  if (g->is_standard_cyclic()) {
    j["type"] = "cyclic";
    j["order"] = g->order();
  } else {
    j["type"] = "table";
    j["mul"] = g->table();
  }
  return j;
}

GroupRingElement read_element(const json& j, const GroupPtr& g, const std::string& where) {
  if (j.is_string()) {
    if (!g->is_standard_cyclic()) throw FormatError(where, "polynomial strings need a cyclic group");
    try {
      return parse_cyclic_polynomial(g, j.get<std::string>());
    } catch (const DomainError& e) {
      throw FormatError(where, e.what());
    }
  }
  if (!j.is_array()) throw FormatError(where, "expected a term list");
  GroupRingElement a(g);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto term_at = at(where, k);
    const auto& term = array_of(j[k], 2, term_at);
    const auto idx = read_index(term[1], at(term_at, std::size_t{1}));
    if (idx >= g->order()) throw FormatError(at(term_at, std::size_t{1}), "element index out of range");
    a[idx] += read_integer(term[0], at(term_at, std::size_t{0}));
  }
  return a;
}

json write_element(const GroupRingElement& a) {
  json terms = json::array();
  for (std::size_t g = 0; g < a.coeffs().size(); ++g)
    if (a[g] != 0) terms.push_back(json::array({write_integer(a[g]), g}));
  return terms;
}

GRMatrix read_grid(const json& j, const GroupPtr& g, std::size_t rows, std::size_t cols, const std::string& where) {
  array_of(j, rows, where);
  GRMatrix m(g, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row_at = at(where, r);
    array_of(j[r], cols, row_at);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = read_element(j[r][c], g, at(row_at, c));
  }
  return m;
}

json write_grid(const GRMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(write_element(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntegerMatrix read_vector(const json& j, std::size_t length, bool column, const std::string& where) {
  array_of(j, length, where);
  IntegerMatrix v = column ? IntegerMatrix(length, 1) : IntegerMatrix(1, length);
  for (std::size_t k = 0; k < length; ++k) {
    const auto value = read_integer(j[k], at(where, k));
    if (column) v(k, 0) = value; else v(0, k) = value;
  }
  return v;
}

json write_vector(const IntegerMatrix& v) {
  json out = json::array();
  for (const auto& e : v.entries()) out.push_back(write_integer(e));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ChainComplex parse_complex(std::string_view text) {
  const json root = parse_json(text);
  const auto group = read_group(member(root, "group", ""), "group");

  const auto& ranks_json = member(root, "ranks", "");
  if (!ranks_json.is_array() || ranks_json.empty()) throw FormatError("ranks", "expected a non-empty array");
  const std::size_t top = ranks_json.size() - 1;
  std::vector<std::size_t> ranks(top + 1);
  for (std::size_t k = 0; k <= top; ++k) ranks[top - k] = read_index(ranks_json[k], at("ranks", k));

  const auto& diffs = array_of(member(root, "differentials", ""), top, "differentials");
  std::vector<GRMatrix> boundaries(top, GRMatrix(group, 0, 0));
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t degree = top - k;
    boundaries[degree - 1] = read_grid(diffs[k], group, ranks[degree - 1], ranks[degree], at("differentials", k));
  }

  GeneratorCertificates gens;
  if (auto it = root.find("generators"); it != root.end()) {
    if (!it->is_object()) throw FormatError("generators", "expected an object");
    const std::size_t n = group->order();
    if (auto t = it->find("top"); t != it->end()) gens.top = read_vector(*t, ranks[top] * n, true, "generators.top");
    if (auto b = it->find("bottom"); b != it->end())
      gens.bottom = read_vector(*b, ranks[0] * n, false, "generators.bottom");
  }
  for (const auto& [key, value] : root.items())
    if (key != "group" && key != "ranks" && key != "differentials" && key != "generators")
      throw FormatError(key, "unknown key");
  return ChainComplex(group, std::move(ranks), std::move(boundaries), std::move(gens));
}

std::string serialize_complex(const ChainComplex& complex) {
  const std::size_t top = complex.top_degree();
  json ranks = json::array();
  for (std::size_t k = 0; k <= top; ++k) ranks.push_back(complex.rank(top - k));

  std::ostringstream out;
  out << "{\n";
  out << "  \"group\": " << write_group(complex.group()).dump() << ",\n";
  out << "  \"ranks\": " << ranks.dump() << ",\n";
  out << "  \"differentials\": [";
  for (std::size_t k = 0; k < top; ++k) {
    out << (k == 0 ? "\n    " : ",\n    ") << write_grid(complex.boundary(top - k)).dump();
  }
  out << (top == 0 ? "]" : "\n  ]");
  const auto& gens = complex.generators();
  if (gens.top || gens.bottom) {
    out << ",\n  \"generators\": {";
    if (gens.top) out << "\n    \"top\": " << write_vector(*gens.top).dump();
    if (gens.bottom) out << (gens.top ? ",\n" : "\n") << "    \"bottom\": " << write_vector(*gens.bottom).dump();
    out << "\n  }";
  }
  out << "\n}\n";
  return out.str();
}

ChainMap parse_chain_map(std::string_view text, const ChainComplex& source, const ChainComplex& target) {
  const json root = parse_json(text);
  const std::size_t top = source.top_degree();
  if (target.top_degree() != top) throw ShapeError("parse_chain_map: complexes of different length");
  const auto& comps = array_of(member(root, "components", ""), top + 1, "components");
  std::vector<GRMatrix> components;
  for (std::size_t degree = 0; degree <= top; ++degree)
    components.push_back(read_grid(comps[top - degree], source.group(), target.rank(degree), source.rank(degree),
                                   at("components", top - degree)));
  return ChainMap(source, target, std::move(components));
}

std::string serialize_chain_map(const ChainMap& map) {
  const std::size_t top = map.top_degree();
  std::ostringstream out;
  out << "{\n  \"components\": [";
  for (std::size_t k = 0; k <= top; ++k) out << (k == 0 ? "\n    " : ",\n    ") << write_grid(map.component(top - k)).dump();
  out << "\n  ]\n}\n";
  return out.str();
}

GRMatrix parse_gr_matrix(std::string_view text, const GroupPtr& group) {
  const json root = parse_json(text);
  const auto rows = read_index(member(root, "rows", ""), "rows");
  const auto cols = read_index(member(root, "cols", ""), "cols");
  return read_grid(member(root, "entries", ""), group, rows, cols, "entries");
}

std::string serialize_gr_matrix(const GRMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = write_grid(m);
  return j.dump();
}

std::string serialize_element(const GroupRingElement& a) { return write_element(a).dump(); }

ChainComplex read_complex_file(const std::string& path) { return parse_complex(read_file(path)); }

ChainMap read_chain_map_file(const std::string& path, const ChainComplex& source, const ChainComplex& target) {
  return parse_chain_map(read_file(path), source, target);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path, "cannot open file for writing");
  out << text;
  if (!out) throw FormatError(path, "write failed");
}

}  // namespace fivedual
