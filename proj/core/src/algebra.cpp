#include "frobalg/algebra.hpp"

#include "frobalg/errors.hpp"

namespace frobalg {

// --- Element -----------------------------------------------------------------

Element::Element(std::size_t d, SparseVector c) : dim(d), coeffs(std::move(c)) {
  if (!coeffs.empty() && coeffs.rbegin()->first >= d) {
    throw DimensionMismatch("coefficient index " + std::to_string(coeffs.rbegin()->first) +
                            " out of range for dimension " + std::to_string(d));
  }
}

Element Element::basis(std::size_t d, std::size_t index, const Scalar& one) {
  return Element(d, SparseVector{{index, one}});
}

Scalar Element::coeff(std::size_t k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? Scalar(0) : it->second;
}

Element& Element::operator+=(const Element& o) {
  if (dim != o.dim) throw DimensionMismatch("adding elements of different algebras");
  for (const auto& [k, v] : o.coeffs) add_entry(coeffs, k, v);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (dim != o.dim) throw DimensionMismatch("subtracting elements of different algebras");
  for (const auto& [k, v] : o.coeffs) add_entry(coeffs, k, -v);
  return *this;
}

Element operator*(const Scalar& c, const Element& a) { return Element(a.dim, scaled(a.coeffs, c)); }

// --- FinDimAlgebra -----------------------------------------------------------

FinDimAlgebra::FinDimAlgebra(FieldSpec field, std::vector<std::string> labels, std::vector<SparseVector> table,
                             SparseVector unit)
    : field_(field), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
  const std::size_t d = labels_.size();
  if (table_.size() != d * d) throw DimensionMismatch("structure table must have dim^2 entries");
  for (auto& row : table_) {
    SparseVector clean;
    for (const auto& [k, v] : row) {
      if (k >= d) throw DimensionMismatch("structure constant index out of range");
      Scalar c = field_.coerce(v);
      if (!c.is_zero()) clean.emplace(k, c);
    }
    row = std::move(clean);
  }
  SparseVector u;
  for (const auto& [k, v] : unit_) {
    if (k >= d) throw DimensionMismatch("unit index out of range");
    Scalar c = field_.coerce(v);
    if (!c.is_zero()) u.emplace(k, c);
  }
  unit_ = std::move(u);
}

FinDimAlgebra FinDimAlgebra::from_entries(FieldSpec field, std::vector<std::string> labels,
                                          const std::vector<StructureEntry>& entries, SparseVector unit) {
  const std::size_t d = labels.size();
  std::vector<SparseVector> table(d * d);
  for (const auto& e : entries) {
    if (e.i >= d || e.j >= d || e.k >= d) throw DimensionMismatch("structure entry index out of range");
    add_entry(table[e.i * d + e.j], e.k, field.coerce(e.c));
  }
  return FinDimAlgebra(field, std::move(labels), std::move(table), std::move(unit));
}

std::optional<std::size_t> FinDimAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<StructureEntry> FinDimAlgebra::entries() const {
  std::vector<StructureEntry> out;
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : product(i, j)) out.push_back({i, j, k, c});
  return out;
}

// --- products ----------------------------------------------------------------

SparseVector multiply(const FinDimAlgebra& a, const SparseVector& x, const SparseVector& y) {
  SparseVector out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) axpy(out, ci * cj, a.product(i, j));
  return out;
}

Element multiply(const FinDimAlgebra& a, const Element& x, const Element& y) {
  if (x.dim != a.dim() || y.dim != a.dim()) throw DimensionMismatch("multiply: element not in algebra");
  return Element(a.dim(), multiply(a, x.coeffs, y.coeffs));
}

Verdict<std::array<std::size_t, 3>> check_associativity(const FinDimAlgebra& a) {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const SparseVector& ij = a.product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        SparseVector left;
        for (const auto& [p, c] : ij) axpy(left, c, a.product(p, k));
        SparseVector right;
        for (const auto& [q, c] : a.product(j, k)) axpy(right, c, a.product(i, q));
        if (left != right) return {std::array<std::size_t, 3>{i, j, k}};
      }
    }
  }
  return {};
}

Verdict<std::size_t> check_unit(const FinDimAlgebra& a) {
  const SparseVector u = a.unit().coeffs;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    SparseVector bi{{i, a.field().one()}};
    if (multiply(a, u, bi) != bi || multiply(a, bi, u) != bi) return {i};
  }
  return {};
}

// --- tensors -----------------------------------------------------------------

void Tensor2::add(std::size_t a, std::size_t b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

void Tensor3::add(const std::array<std::size_t, 3>& idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

Scalar Functional::operator()(const SparseVector& x) const {
  Scalar acc = field.zero();
  for (const auto& [k, v] : x) {
    if (k >= coeffs.size()) throw DimensionMismatch("functional applied to a longer vector");
    acc += coeffs[k] * v;
  }
  return acc;
}

Scalar Functional::operator()(const Element& x) const {
  if (x.dim != coeffs.size()) throw DimensionMismatch("functional dimension mismatch");
  return (*this)(x.coeffs);
}

namespace {

void check_tensor(const FinDimAlgebra& a, const Tensor2& t) {
  if (t.dim != a.dim()) throw DimensionMismatch("tensor does not live over this algebra");
}

}  // namespace

Tensor2 act_left(const FinDimAlgebra& a, const Element& x, const Tensor2& t) {
  check_tensor(a, t);
  if (x.dim != a.dim()) throw DimensionMismatch("act_left: element not in algebra");
  Tensor2 out(a.dim());
  for (const auto& [g, cg] : x.coeffs) {
    for (const auto& [ab, c] : t.coeffs) {
      for (const auto& [k, ck] : a.product(g, ab.first)) out.add(k, ab.second, cg * c * ck);
    }
  }
  return out;
}

Tensor2 act_right(const FinDimAlgebra& a, const Tensor2& t, const Element& x) {
  check_tensor(a, t);
  if (x.dim != a.dim()) throw DimensionMismatch("act_right: element not in algebra");
  Tensor2 out(a.dim());
  for (const auto& [g, cg] : x.coeffs) {
    for (const auto& [ab, c] : t.coeffs) {
      for (const auto& [k, ck] : a.product(ab.second, g)) out.add(ab.first, k, cg * c * ck);
    }
  }
  return out;
}

Verdict<std::size_t> is_invariant(const FinDimAlgebra& a, const Tensor2& t) {
  for (std::size_t g = 0; g < a.dim(); ++g) {
    Element b = a.basis(g);
    if (act_left(a, b, t) != act_right(a, t, b)) return {g};
  }
  return {};
}

Tensor2 delta_of(const FinDimAlgebra& a, const Tensor2& t, const Element& x) { return act_left(a, x, t); }

Verdict<std::array<std::size_t, 3>> check_coassociativity(const FinDimAlgebra& a, const Tensor2& t) {
  check_tensor(a, t);
  std::map<std::size_t, Tensor2> delta;
  auto delta_basis = [&](std::size_t k) -> const Tensor2& {
    auto it = delta.find(k);
    if (it == delta.end()) it = delta.emplace(k, act_left(a, a.basis(k), t)).first;
    return it->second;
  };
  Tensor3 left(a.dim());
  Tensor3 right(a.dim());
  for (const auto& [ab, c] : t.coeffs) {
    for (const auto& [gd, c2] : delta_basis(ab.first).coeffs) left.add({gd.first, gd.second, ab.second}, c * c2);
    for (const auto& [gd, c2] : delta_basis(ab.second).coeffs) right.add({ab.first, gd.first, gd.second}, c * c2);
  }
  auto l = left.coeffs.begin();
  auto r = right.coeffs.begin();
  while (l != left.coeffs.end() || r != right.coeffs.end()) {
    if (r == right.coeffs.end() || (l != left.coeffs.end() && l->first < r->first)) return {l->first};
    if (l == left.coeffs.end() || r->first < l->first) return {r->first};
    if (!(l->second == r->second)) return {l->first};
    ++l;
    ++r;
  }
  return {};
}

Matrix delta_matrix(const FinDimAlgebra& a, const Tensor2& t) {
  const std::size_t d = a.dim();
  Matrix m(a.field(), d * d, d);
  for (std::size_t g = 0; g < d; ++g) {
    for (const auto& [ab, c] : act_left(a, a.basis(g), t).coeffs) m(ab.first * d + ab.second, g) = c;
  }
  return m;
}

std::size_t delta_rank(const FinDimAlgebra& a, const Tensor2& t) {
  const std::size_t d = a.dim();
  SparseEchelon ech(a.field());
  for (std::size_t g = 0; g < d; ++g) {
    SparseVector col;
    for (const auto& [ab, c] : act_left(a, a.basis(g), t).coeffs) col.emplace(ab.first * d + ab.second, c);
    ech.insert(col);
  }
  return ech.rank();
}

Element apply_functional(Side side, const Functional& f, const Tensor2& t) {
  if (f.dim() != t.dim) throw DimensionMismatch("apply_functional: dimension mismatch");
  Element out(t.dim);
  for (const auto& [ab, c] : t.coeffs) {
    if (side == Side::Left) {
      add_entry(out.coeffs, ab.second, f.coeffs[ab.first] * c);
    } else {
      add_entry(out.coeffs, ab.first, f.coeffs[ab.second] * c);
    }
  }
  return out;
}

Matrix left_multiplication(const FinDimAlgebra& a, const Element& x) {
  const std::size_t d = a.dim();
  Matrix m(a.field(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& [k, c] : multiply(a, x.coeffs, SparseVector{{j, a.field().one()}})) m(k, j) = c;
  }
  return m;
}

}  // namespace frobalg
