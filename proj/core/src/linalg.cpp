#include "frobalg/linalg.hpp"

#include <utility>

#include "frobalg/errors.hpp"

namespace frobalg {

void add_entry(SparseVector& y, std::size_t index, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = y.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) y.erase(it);
  }
}

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (a.is_zero()) return;
  for (const auto& [k, v] : x) add_entry(y, k, a * v);
}

SparseVector scaled(const SparseVector& x, const Scalar& a) {
  SparseVector out;
  if (a.is_zero()) return out;
  for (const auto& [k, v] : x) out.emplace(k, v * a);
  return out;
}

// --- Matrix ------------------------------------------------------------------

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = field.one();
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.coerce(rows[r][c]);
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RowEchelonForm row_reduce(Matrix m) {
  RowEchelonForm out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    }
    Scalar inv = m(r, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) {
      if (!m(r, k).is_zero()) m(r, k) *= inv;
    }
    for (std::size_t q = 0; q < m.rows(); ++q) {
      if (q == r || m(q, c).is_zero()) continue;
      Scalar f = m(q, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(r, k).is_zero()) m(q, k) -= f * m(r, k);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  auto ref = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ref.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols(), m.field().zero());
    v[f] = m.field().one();
    for (std::size_t r = 0; r < ref.pivots.size(); ++r) v[ref.pivots[r]] = -ref.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear: row counts differ");
  FieldSpec f = a.field();
  Matrix aug(f, a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = f.coerce(b(r, c));
  }
  auto ref = row_reduce(std::move(aug));
  LinearSolution sol;
  sol.particular = Matrix(f, a.cols(), b.cols());
  for (std::size_t r = 0; r < ref.pivots.size(); ++r) {
    std::size_t p = ref.pivots[r];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) sol.particular(p, c) = ref.reduced(r, a.cols() + c);
  }
  sol.kernel = kernel_basis(a);
  return sol;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("invert: matrix is not square");
  std::size_t n = m.rows();
  if (n == 0) return Matrix(m.field(), 0, 0);
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.field().one();
  }
  auto ref = row_reduce(std::move(aug));
  if (ref.pivots.size() < n || ref.pivots[n - 1] >= n) {
    throw SingularMatrix("matrix of size " + std::to_string(n) + " is singular");
  }
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ref.reduced(r, n + c);
  return inv;
}

// --- SparseEchelon -----------------------------------------------------------

SparseEchelon::SparseEchelon(FieldSpec field, bool track) : field_(field), track_(track) {}

void SparseEchelon::reduce_in_place(SparseVector& v, SparseVector* combo) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    std::size_t idx = it->first;
    Scalar c = it->second;
    axpy(v, -c, row->second.vec);
    if (combo) axpy(*combo, c, row->second.combo);
    it = v.upper_bound(idx);
  }
}

bool SparseEchelon::insert(const SparseVector& v) {
  SparseVector vec = v;
  SparseVector used;
  reduce_in_place(vec, track_ ? &used : nullptr);
  std::size_t q = inserted_++;
  if (vec.empty()) {
    if (track_) {
      SparseVector dep = scaled(used, field_(-1));
      add_entry(dep, q, field_.one());
      dependencies_.push_back(std::move(dep));
    }
    return false;
  }
  Scalar inv = vec.begin()->second.inverse();
  Row row;
  row.vec = scaled(vec, inv);
  if (track_) {
    SparseVector combo = scaled(used, field_(-1));
    add_entry(combo, q, field_.one());
    row.combo = scaled(combo, inv);
  }
  rows_.emplace(row.vec.begin()->first, std::move(row));
  return true;
}

SparseEchelon::Reduction SparseEchelon::reduce(const SparseVector& v) const {
  Reduction out;
  out.remainder = v;
  reduce_in_place(out.remainder, track_ ? &out.combination : nullptr);
  return out;
}

std::vector<SparseVector> SparseEchelon::reduced_basis() const {
  std::map<std::size_t, SparseVector> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVector v = it->second.vec;
    auto e = v.upper_bound(it->first);
    while (e != v.end()) {
      auto other = done.find(e->first);
      if (other == done.end()) {
        ++e;
        continue;
      }
      std::size_t idx = e->first;
      Scalar c = e->second;
      axpy(v, -c, other->second);
      e = v.upper_bound(idx);
    }
    done.emplace(it->first, std::move(v));
  }
  std::vector<SparseVector> out;
  out.reserve(done.size());
  for (auto& [p, v] : done) out.push_back(std::move(v));
  return out;
}

std::optional<SparseVector> solve_in_span(FieldSpec field, const std::vector<SparseVector>& vectors,
                                          const SparseVector& target) {
  SparseEchelon ech(field, true);
  for (const auto& v : vectors) ech.insert(v);
  auto red = ech.reduce(target);
  if (!red.remainder.empty()) return std::nullopt;
  return red.combination;
}

std::vector<SparseVector> relations(FieldSpec field, const std::vector<SparseVector>& vectors) {
  SparseEchelon ech(field, true);
  for (const auto& v : vectors) ech.insert(v);
  return ech.dependencies();
}

std::size_t span_rank(FieldSpec field, const std::vector<SparseVector>& vectors) {
  SparseEchelon ech(field);
  for (const auto& v : vectors) ech.insert(v);
  return ech.rank();
}

namespace {

std::vector<SparseVector> kernel_from_rref(FieldSpec field, const std::vector<SparseVector>& rref,
                                           std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (const auto& r : rref) is_pivot[r.begin()->first] = true;
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    SparseVector v;
    v.emplace(f, field.one());
    for (const auto& r : rref) {
      auto it = r.find(f);
      if (it != r.end()) v.emplace(r.begin()->first, -it->second);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<SparseVector> sparse_nullspace(FieldSpec field, const std::vector<SparseVector>& rows,
                                           std::size_t cols) {
  SparseEchelon ech(field);
  for (const auto& r : rows) ech.insert(r);
  return kernel_from_rref(field, ech.reduced_basis(), cols);
}

std::optional<SparseSolution> sparse_solve(FieldSpec field, const std::vector<SparseVector>& rows,
                                           const std::vector<Scalar>& rhs, std::size_t cols) {
  if (rows.size() != rhs.size()) throw DimensionMismatch("sparse_solve: rhs length differs from row count");
  SparseEchelon ech(field);
  for (std::size_t q = 0; q < rows.size(); ++q) {
    SparseVector aug = rows[q];
    add_entry(aug, cols, rhs[q]);
    ech.insert(aug);
  }
  auto rref = ech.reduced_basis();
  SparseSolution sol;
  std::vector<SparseVector> coefficient_rows;
  for (auto& r : rref) {
    std::size_t p = r.begin()->first;
    if (p == cols) return std::nullopt;
    auto it = r.find(cols);
    if (it != r.end()) {
      sol.particular.emplace(p, it->second);
      r.erase(it);
    }
    coefficient_rows.push_back(std::move(r));
  }
  sol.kernel = kernel_from_rref(field, coefficient_rows, cols);
  return sol;
}

}  // namespace frobalg
