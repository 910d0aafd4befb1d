#include "frobalg/io.hpp"

#include <fstream>

#include "frobalg/errors.hpp"

namespace frobalg {

namespace {

using nlohmann::json;

std::size_t as_index(const json& v, std::size_t bound, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(std::string(what) + " must be a nonnegative integer");
  auto x = v.get<std::size_t>();
  if (x >= bound) throw DimensionMismatch(std::string(what) + " " + std::to_string(x) + " out of range");
  return x;
}

Scalar as_scalar(const json& v, FieldSpec field) {
  if (v.is_string()) return field.parse(v.get<std::string>());
  if (v.is_number_integer()) return field(v.get<long>());
  throw ParseError("scalar must be a string or an integer");
}

}  // namespace

json field_to_json(FieldSpec field) {
  if (field.is_rational()) return "rational";
  return json{{"prime", field.characteristic().get_str()}};
}

FieldSpec field_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "rational") return FieldSpec::rationals();
  if (j.is_object() && j.contains("prime")) {
    const json& p = j.at("prime");
    if (p.is_number_unsigned()) return FieldSpec::prime(p.get<unsigned long>());
    if (p.is_string()) {
      mpz_class v;
      if (v.set_str(p.get<std::string>(), 10) != 0) throw ParseError("bad prime '" + p.get<std::string>() + "'");
      return FieldSpec::prime(v);
    }
  }
  throw ParseError("field must be \"rational\" or {\"prime\": p}");
}

json algebra_to_json(const FinDimAlgebra& a, const json& provenance) {
  json structure = json::array();
  for (const auto& e : a.entries()) structure.push_back(json::array({e.i, e.j, e.k, e.c.to_string()}));
  json unit = json::array();
  Element u = a.unit();
  for (std::size_t k = 0; k < a.dim(); ++k) unit.push_back(a.field().coerce(u.coeff(k)).to_string());
  json out{{"field", field_to_json(a.field())},
           {"dim", a.dim()},
           {"basis", a.labels()},
           {"unit", std::move(unit)},
           {"structure", std::move(structure)}};
  if (!provenance.is_null()) out["provenance"] = provenance;
  return out;
}

FinDimAlgebra algebra_from_json(const json& j) {
  try {
    FieldSpec field = field_from_json(j.at("field"));
    const auto d = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("basis")) {
      labels = j.at("basis").get<std::vector<std::string>>();
      if (labels.size() != d) throw DimensionMismatch("basis has " + std::to_string(labels.size()) + " labels, dim is " + std::to_string(d));
    } else {
      for (std::size_t k = 0; k < d; ++k) labels.push_back("b" + std::to_string(k));
    }
    const json& unit_j = j.at("unit");
    if (!unit_j.is_array() || unit_j.size() != d) throw DimensionMismatch("unit must list dim scalars");
    SparseVector unit;
    for (std::size_t k = 0; k < d; ++k) add_entry(unit, k, as_scalar(unit_j[k], field));
    std::vector<StructureEntry> entries;
    for (const auto& row : j.at("structure")) {
      if (!row.is_array() || row.size() != 4) throw ParseError("structure rows are [i, j, k, c]");
      entries.push_back({as_index(row[0], d, "i"), as_index(row[1], d, "j"), as_index(row[2], d, "k"),
                         as_scalar(row[3], field)});
    }
    return FinDimAlgebra::from_entries(field, std::move(labels), entries, std::move(unit));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra JSON: ") + e.what());
  }
}

json tensor_to_json(const Tensor2& t) {
  json out = json::array();
  for (const auto& [ab, c] : t.coeffs) out.push_back(json::array({ab.first, ab.second, c.to_string()}));
  return out;
}

Tensor2 tensor_from_json(const json& j, FieldSpec field, std::size_t dim) {
  if (!j.is_array()) throw ParseError("tensor must be an array");
  Tensor2 t(dim);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 3) throw ParseError("tensor rows are [alpha, beta, c]");
    t.add(as_index(row[0], dim, "alpha"), as_index(row[1], dim, "beta"), as_scalar(row[2], field));
  }
  return t;
}

json functional_to_json(const Functional& f) {
  json out = json::array();
  for (const auto& c : f.coeffs) out.push_back(c.to_string());
  return out;
}

Functional functional_from_json(const json& j, FieldSpec field) {
  if (!j.is_array()) throw ParseError("functional must be an array");
  Functional f(field, j.size());
  for (std::size_t k = 0; k < j.size(); ++k) f.coeffs[k] = as_scalar(j[k], field);
  return f;
}

json pair_to_json(const FrobeniusPair& pair) {
  return json{{"epsilon", functional_to_json(pair.epsilon)}, {"y", tensor_to_json(pair.y)}};
}

json spec_to_json(const SpreadSpec& spec) {
  json classes = json::array();
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    json pairs = json::array();
    for (const auto& [s, s2] : spec.pairs[i]) pairs.push_back(json::array({s, s2}));
    classes.push_back(json{{"i", i + 1}, {"pairs", std::move(pairs)}});
  }
  return json{{"classes", std::move(classes)}};
}

SpreadSpec spec_from_json(const json& j, std::size_t n) {
  try {
    SpreadSpec spec;
    spec.pairs.resize(n);
    for (const auto& cls : j.at("classes")) {
      const auto i = cls.at("i").get<long long>();
      if (i < 1 || static_cast<std::size_t>(i) > n) throw IndexOutOfRange("class " + std::to_string(i) + " out of range");
      for (const auto& p : cls.at("pairs")) {
        if (!p.is_array() || p.size() != 2) throw ParseError("pairs are [s, s']");
        spec.pairs[i - 1].emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
      }
    }
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed spread spec: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace frobalg
