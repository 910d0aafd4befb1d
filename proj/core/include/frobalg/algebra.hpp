#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobalg/linalg.hpp"

namespace frobalg {

/// Outcome of an exact check: passes, or fails with a witness.
template <class W>
struct Verdict {
  std::optional<W> witness;
  bool passed() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
};

/// Coefficient vector over the basis of some algebra of dimension dim.
struct Element {
  std::size_t dim = 0;
  SparseVector coeffs;

  Element() = default;
  Element(std::size_t d, SparseVector c = {});
  static Element basis(std::size_t d, std::size_t index, const Scalar& one);

  bool is_zero() const noexcept { return coeffs.empty(); }
  Scalar coeff(std::size_t k) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, const Element& a);
  friend bool operator==(const Element& a, const Element& b) {
    return a.dim == b.dim && a.coeffs == b.coeffs;
  }
};

struct StructureEntry {
  std::size_t i, j, k;
  Scalar c;  // b_i b_j has coefficient c on b_k
};

/// Unital associative algebra given by structure constants.
///
/// The multiplication table stores b_i b_j as a sparse vector for every pair
/// (i, j).  Construction does not verify associativity or the unit; use
/// check_associativity and check_unit.
class FinDimAlgebra {
 public:
  FinDimAlgebra() = default;
  FinDimAlgebra(FieldSpec field, std::vector<std::string> labels, std::vector<SparseVector> table,
                SparseVector unit);
  static FinDimAlgebra from_entries(FieldSpec field, std::vector<std::string> labels,
                                    const std::vector<StructureEntry>& entries, SparseVector unit);

  FieldSpec field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// b_i b_j.
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  SparseVector& mutable_product(std::size_t i, std::size_t j) { return table_[i * dim() + j]; }
  Element unit() const { return Element(dim(), unit_); }
  void set_unit(SparseVector unit) { unit_ = std::move(unit); }
  Element basis(std::size_t i) const { return Element::basis(dim(), i, field_.one()); }
  Element zero() const { return Element(dim()); }

  /// Nonzero structure constants in (i, j, k) order.
  std::vector<StructureEntry> entries() const;

 private:
  FieldSpec field_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;
  SparseVector unit_;
};

/// Throws DimensionMismatch.
Element multiply(const FinDimAlgebra& a, const Element& x, const Element& y);
SparseVector multiply(const FinDimAlgebra& a, const SparseVector& x, const SparseVector& y);

/// Returns the first (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k).
Verdict<std::array<std::size_t, 3>> check_associativity(const FinDimAlgebra& a);
/// Returns the first i with 1 b_i != b_i or b_i 1 != b_i.
Verdict<std::size_t> check_unit(const FinDimAlgebra& a);

/// Sum of coeffs(alpha, beta) b_alpha (x) b_beta.
struct Tensor2 {
  std::size_t dim = 0;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> coeffs;

  Tensor2() = default;
  explicit Tensor2(std::size_t d) : dim(d) {}
  void add(std::size_t a, std::size_t b, const Scalar& c);
  bool is_zero() const noexcept { return coeffs.empty(); }
  friend bool operator==(const Tensor2& x, const Tensor2& y) {
    return x.dim == y.dim && x.coeffs == y.coeffs;
  }
};

struct Tensor3 {
  std::size_t dim = 0;
  std::map<std::array<std::size_t, 3>, Scalar> coeffs;

  Tensor3() = default;
  explicit Tensor3(std::size_t d) : dim(d) {}
  void add(const std::array<std::size_t, 3>& idx, const Scalar& c);
  friend bool operator==(const Tensor3& x, const Tensor3& y) {
    return x.dim == y.dim && x.coeffs == y.coeffs;
  }
};

/// Value on each basis element.
struct Functional {
  FieldSpec field;
  std::vector<Scalar> coeffs;

  Functional() = default;
  Functional(FieldSpec f, std::size_t d) : field(f), coeffs(d, f.zero()) {}
  Functional(FieldSpec f, std::vector<Scalar> c) : field(f), coeffs(std::move(c)) {}
  std::size_t dim() const noexcept { return coeffs.size(); }
  Scalar operator()(const Element& x) const;
  Scalar operator()(const SparseVector& x) const;
  friend bool operator==(const Functional& a, const Functional& b) { return a.coeffs == b.coeffs; }
};

/// a (u (x) v) = au (x) v.
Tensor2 act_left(const FinDimAlgebra& a, const Element& x, const Tensor2& t);
/// (u (x) v) a = u (x) va.
Tensor2 act_right(const FinDimAlgebra& a, const Tensor2& t, const Element& x);

/// First basis index alpha with b_alpha t != t b_alpha.
Verdict<std::size_t> is_invariant(const FinDimAlgebra& a, const Tensor2& t);

/// Delta(x) = x t.
Tensor2 delta_of(const FinDimAlgebra& a, const Tensor2& t, const Element& x);

/// Compares sum Delta(x1) (x) x2 with sum x1 (x) Delta(x2); returns the first
/// differing index triple.
Verdict<std::array<std::size_t, 3>> check_coassociativity(const FinDimAlgebra& a, const Tensor2& t);

/// Matrix of x -> x t; row alpha*d + beta, column gamma.
Matrix delta_matrix(const FinDimAlgebra& a, const Tensor2& t);
/// Rank of delta_matrix, computed sparsely.
std::size_t delta_rank(const FinDimAlgebra& a, const Tensor2& t);

enum class Side { Left, Right };
/// Left: (f (x) id) t.  Right: (id (x) f) t.
Element apply_functional(Side side, const Functional& f, const Tensor2& t);

/// Matrix of y -> x y in the basis (column j is x b_j).
Matrix left_multiplication(const FinDimAlgebra& a, const Element& x);

}  // namespace frobalg
