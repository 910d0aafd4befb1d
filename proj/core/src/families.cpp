#include "frobalg/families.hpp"

#include <algorithm>

#include "frobalg/errors.hpp"

namespace frobalg {

namespace {

nlohmann::json field_json(FieldSpec field) {
  if (field.is_rational()) return "rational";
  return nlohmann::json{{"prime", field.characteristic().get_str()}};
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

// every vector in {1..top}^n, lexicographic
std::vector<std::vector<std::size_t>> multiplicity_vectors(std::size_t n, std::size_t top) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> m(n, 1);
  while (true) {
    out.push_back(m);
    std::size_t k = n;
    while (k > 0 && m[k - 1] == top) m[--k] = 1;
    if (k == 0) break;
    ++m[k - 1];
  }
  return out;
}

}  // namespace

std::size_t NsyPresentation::index(long i, std::size_t k, std::size_t r, std::size_t s) const {
  const std::size_t w = wrap(i);
  if (k >= l || r >= m[w] || s >= mult(long(w) + long(k))) {
    throw IndexOutOfRange("X_{" + std::to_string(w) + "," + std::to_string(k) + "}^{" + std::to_string(r) + "," +
                          std::to_string(s) + "} is not a basis vector");
  }
  return offsets[w * l + k] + r * mult(long(w) + long(k)) + s;
}

NsyPresentation nsy_algebra(std::size_t n, std::size_t l, std::vector<std::size_t> m, FieldSpec field) {
  if (n == 0 || l == 0) throw BadParams("nsy_algebra needs n >= 1 and l >= 1");
  if (m.size() != n) throw BadParams("nsy_algebra needs one multiplicity per vertex");
  if (std::any_of(m.begin(), m.end(), [](std::size_t x) { return x == 0; }))
    throw BadParams("multiplicities must be positive");
  NsyPresentation p;
  p.n = n;
  p.l = l;
  p.m = std::move(m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < l; ++k) {
      p.offsets.push_back(labels.size());
      for (std::size_t r = 0; r < p.m[i]; ++r)
        for (std::size_t s = 0; s < p.mult(long(i + k)); ++s)
          labels.push_back("X_{" + std::to_string(i) + "," + std::to_string(k) + "}^{" + std::to_string(r) + "," +
                           std::to_string(s) + "}");
    }
  const std::size_t d = labels.size();
  std::vector<SparseVector> table(d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < l; ++k)
      for (std::size_t r = 0; r < p.m[i]; ++r)
        for (std::size_t s = 0; s < p.mult(long(i + k)); ++s) {
          const std::size_t x = p.index(long(i), k, r, s);
          const std::size_t i2 = p.wrap(long(i + k));
          for (std::size_t k2 = 0; k + k2 < l; ++k2)
            for (std::size_t s2 = 0; s2 < p.mult(long(i2 + k2)); ++s2)
              table[x * d + p.index(long(i2), k2, s, s2)].emplace(p.index(long(i), k + k2, r, s2), field.one());
        }
  SparseVector unit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < p.m[i]; ++r) unit.emplace(p.index(long(i), 0, r, r), field.one());
  p.algebra = FinDimAlgebra(field, std::move(labels), std::move(table), std::move(unit));
  return p;
}

FinDimAlgebra nakayama_algebra(std::size_t n, std::size_t l, FieldSpec field) {
  NsyPresentation p = nsy_algebra(n, l, std::vector<std::size_t>(n, 1), field);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < l; ++k) labels.push_back("p_{" + std::to_string(i) + "," + std::to_string(k) + "}");
  std::vector<SparseVector> table;
  for (std::size_t a = 0; a < p.algebra.dim(); ++a)
    for (std::size_t b = 0; b < p.algebra.dim(); ++b) table.push_back(p.algebra.product(a, b));
  return FinDimAlgebra(field, std::move(labels), std::move(table), p.algebra.unit().coeffs);
}

Tensor2 reference_d1_tensor(const NsyPresentation& nsy) {
  Tensor2 t(nsy.algebra.dim());
  const long l = long(nsy.l);
  for (std::size_t i = 0; i < nsy.n; ++i)
    for (std::size_t r = 0; r < nsy.m[i]; ++r)
      for (long k = 0; k < l; ++k)
        t.add(nsy.index(long(i), std::size_t(k), r, 0), nsy.index(long(i) + k - l + 1, std::size_t(l - 1 - k), 0, r),
              nsy.algebra.field().one());
  return t;
}

FinDimAlgebra matrix_algebra(std::size_t m, FieldSpec field) {
  if (m == 0) throw BadParams("matrix size must be positive");
  std::vector<std::string> labels;
  for (std::size_t u = 1; u <= m; ++u)
    for (std::size_t v = 1; v <= m; ++v) labels.push_back("E_{" + std::to_string(u) + "," + std::to_string(v) + "}");
  std::vector<StructureEntry> entries;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t w = 0; w < m; ++w) entries.push_back({u * m + v, v * m + w, u * m + w, field.one()});
  SparseVector unit;
  for (std::size_t u = 0; u < m; ++u) unit.emplace(u * m + u, field.one());
  return FinDimAlgebra::from_entries(field, std::move(labels), entries, std::move(unit));
}

FinDimAlgebra truncated_polynomial(std::size_t k, FieldSpec field) {
  if (k == 0) throw BadParams("truncation degree must be positive");
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < k; ++e) labels.push_back(e == 0 ? "1" : e == 1 ? "x" : "x^" + std::to_string(e));
  std::vector<StructureEntry> entries;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; a + b < k; ++b) entries.push_back({a, b, a + b, field.one()});
  return FinDimAlgebra::from_entries(field, std::move(labels), entries, SparseVector{{0, field.one()}});
}

FinDimAlgebra group_algebra(const std::vector<std::size_t>& factors, FieldSpec field) {
  if (factors.empty() || std::any_of(factors.begin(), factors.end(), [](std::size_t x) { return x == 0; }))
    throw BadParams("group factors must be a nonempty list of positive orders");
  std::size_t order = 1;
  for (auto f : factors) order *= f;
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> out(factors.size());
    for (std::size_t q = factors.size(); q-- > 0;) {
      out[q] = x % factors[q];
      x /= factors[q];
    }
    return out;
  };
  auto number = [&](const std::vector<std::size_t>& dg) {
    std::size_t x = 0;
    for (std::size_t q = 0; q < factors.size(); ++q) x = x * factors[q] + dg[q];
    return x;
  };
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    auto dg = digits(x);
    std::string s;
    for (std::size_t q = 0; q < dg.size(); ++q) {
      if (dg[q] == 0) continue;
      if (!s.empty()) s += "*";
      s += "g" + std::to_string(q + 1) + (dg[q] > 1 ? "^" + std::to_string(dg[q]) : "");
    }
    labels.push_back(s.empty() ? "1" : s);
  }
  std::vector<StructureEntry> entries;
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      auto a = digits(x), b = digits(y);
      for (std::size_t q = 0; q < a.size(); ++q) a[q] = (a[q] + b[q]) % factors[q];
      entries.push_back({x, y, number(a), field.one()});
    }
  return FinDimAlgebra::from_entries(field, std::move(labels), entries, SparseVector{{0, field.one()}});
}

FinDimAlgebra product_of_fields(std::size_t count, FieldSpec field) {
  if (count == 0) throw BadParams("product of fields needs at least one factor");
  std::vector<std::string> labels;
  std::vector<StructureEntry> entries;
  SparseVector unit;
  for (std::size_t a = 0; a < count; ++a) {
    labels.push_back("e" + std::to_string(a + 1));
    entries.push_back({a, a, a, field.one()});
    unit.emplace(a, field.one());
  }
  return FinDimAlgebra::from_entries(field, std::move(labels), entries, std::move(unit));
}

FinDimAlgebra path_algebra_a2(FieldSpec field) {
  std::vector<StructureEntry> entries{
      {0, 0, 0, field.one()}, {1, 1, 1, field.one()}, {0, 2, 2, field.one()}, {2, 1, 2, field.one()}};
  return FinDimAlgebra::from_entries(field, {"e1", "e2", "a"}, entries,
                                     SparseVector{{0, field.one()}, {1, field.one()}});
}

CorpusEntry generate_family(const FamilyParams& p) {
  CorpusEntry e;
  nlohmann::json prov{{"family", p.family}, {"field", field_json(p.field)}};
  const std::string suffix = p.field.is_rational() ? "" : "@" + p.field.name();
  auto first_m = [&]() -> std::size_t {
    if (p.m.size() != 1) throw BadParams("family " + p.family + " needs a single size in --m");
    return p.m[0];
  };
  if (p.family == "nsy") {
    e.nsy = nsy_algebra(p.n, p.l, p.m, p.field);
    e.algebra = e.nsy->algebra;
    prov["n"] = p.n;
    prov["l"] = p.l;
    prov["m"] = p.m;
    e.key = "nsy(" + std::to_string(p.n) + "," + std::to_string(p.l) + ";" + join(p.m) + ")" + suffix;
  } else if (p.family == "nakayama") {
    e.algebra = nakayama_algebra(p.n, p.l, p.field);
    prov["n"] = p.n;
    prov["l"] = p.l;
    e.key = "nakayama(" + std::to_string(p.n) + "," + std::to_string(p.l) + ")" + suffix;
  } else if (p.family == "matrix") {
    e.algebra = matrix_algebra(first_m(), p.field);
    prov["m"] = p.m[0];
    e.key = "matrix(" + std::to_string(p.m[0]) + ")" + suffix;
  } else if (p.family == "truncated") {
    e.algebra = truncated_polynomial(first_m(), p.field);
    prov["k"] = p.m[0];
    e.key = "truncated(" + std::to_string(p.m[0]) + ")" + suffix;
  } else if (p.family == "group") {
    e.algebra = group_algebra(p.factors, p.field);
    prov["factors"] = p.factors;
    e.key = "group(" + join(p.factors) + ")" + suffix;
  } else if (p.family == "fields") {
    e.algebra = product_of_fields(first_m(), p.field);
    prov["count"] = p.m[0];
    e.key = "fields(" + std::to_string(p.m[0]) + ")" + suffix;
  } else if (p.family == "a2") {
    e.algebra = path_algebra_a2(p.field);
    e.key = "a2" + suffix;
  } else {
    throw BadParams("unknown family '" + p.family + "'");
  }
  e.provenance = std::move(prov);
  return e;
}

std::vector<CorpusEntry> corpus(const std::string& profile) {
  if (profile != "small" && profile != "standard") throw BadParams("unknown profile '" + profile + "'");
  const bool standard = profile == "standard";
  const FieldSpec q = FieldSpec::rationals();
  std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 1}, {1, 2}, {2, 2}, {1, 3}};
  if (standard) shapes.insert(shapes.end(), {{2, 3}, {3, 2}, {3, 3}});
  std::vector<CorpusEntry> out;
  for (const auto& [n, l] : shapes)
    for (const auto& m : multiplicity_vectors(n, standard ? 3 : 2))
      out.push_back(generate_family({"nsy", n, l, m, {}, q}));
  out.push_back(generate_family({"matrix", 1, 1, {2}, {}, q}));
  out.push_back(generate_family({"fields", 1, 1, {2}, {}, q}));
  out.push_back(generate_family({"group", 1, 1, {}, {2}, FieldSpec::prime(2)}));
  if (standard) out.push_back(generate_family({"group", 1, 1, {}, {3}, FieldSpec::prime(3)}));
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.key < b.key; });
  return out;
}

}  // namespace frobalg
