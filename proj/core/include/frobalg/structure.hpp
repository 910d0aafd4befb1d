#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frobalg/algebra.hpp"

namespace frobalg {

struct RadicalData {
  std::vector<Element> basis;          // reduced echelon basis of J
  std::size_t dim = 0;
  std::size_t nilpotency_index = 1;    // least k with J^k = 0
  std::string method;                  // "trace-form" or "frobenius-kernel"
};

/// Jacobson radical.
///
/// Uses the trace form in characteristic 0 or p > dim.  Commutative algebras
/// over small prime fields use the kernel of x -> x^(p^k) instead.  Anything
/// else throws UnsupportedField.
RadicalData radical(const FinDimAlgebra& a);

/// Corners e_j A e_i for a family of orthogonal idempotents.
class PeirceBasis {
 public:
  PeirceBasis() = default;
  PeirceBasis(const FinDimAlgebra& a, std::vector<Element> idempotents);

  std::size_t size() const noexcept { return idempotents_.size(); }
  const Element& idempotent(std::size_t i) const { return idempotents_.at(i); }

  /// Reduced echelon basis of e_j A e_i.
  const std::vector<SparseVector>& corner(std::size_t j, std::size_t i) const {
    return corners_[j * size() + i];
  }
  std::size_t corner_dim(std::size_t j, std::size_t i) const { return corner(j, i).size(); }

  /// e_j v e_i.
  SparseVector component(std::size_t j, std::size_t i, const SparseVector& v) const;

  /// Coordinates of v in the corner basis.  Throws BlockMismatch when v is
  /// not in e_j A e_i.
  std::vector<Scalar> coordinates(std::size_t j, std::size_t i, const SparseVector& v) const;
  bool in_corner(std::size_t j, std::size_t i, const SparseVector& v) const;

  /// Nonzero Peirce components of v, keyed by (j, i), as corner coordinates.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> decompose(const SparseVector& v) const;

  const FinDimAlgebra& algebra() const noexcept { return algebra_; }

 private:
  FinDimAlgebra algebra_;
  std::vector<Element> idempotents_;
  std::vector<std::vector<SparseVector>> corners_;
};

/// Reduced echelon basis of x A y.
std::vector<SparseVector> corner_basis(const FinDimAlgebra& a, const SparseVector& x, const SparseVector& y);

struct CanonicalDecomposition {
  std::vector<std::vector<Element>> classes;  // classes[i][copy]
  bool split_certified = true;

  std::size_t n() const noexcept { return classes.size(); }
  std::vector<std::size_t> multiplicities() const;
  const Element& rep(std::size_t i) const { return classes.at(i).front(); }
  Element class_sum(std::size_t i) const;
  std::vector<Element> representatives() const;
  bool is_basic() const;
  std::vector<std::string> flags() const;
};

/// Primitive orthogonal idempotents summing to 1, grouped by isomorphism class
/// of e A.  Classes and copies are sorted by coordinate vector, larger first.
CanonicalDecomposition canonical_decomposition(const FinDimAlgebra& a, std::uint64_t seed);
CanonicalDecomposition canonical_decomposition(const FinDimAlgebra& a, const RadicalData& rad,
                                               std::uint64_t seed);

/// Idempotence, orthogonality, completeness and class separation, checked
/// exactly.  The witness describes the first violation.
Verdict<std::string> verify_decomposition(const FinDimAlgebra& a, const CanonicalDecomposition& dec,
                                          const RadicalData& rad);

struct NakayamaData {
  std::vector<std::size_t> nu;                   // 0-based classes
  std::vector<std::size_t> nu_inverse;
  std::vector<std::vector<Element>> socles;      // basis of soc(e_{i1} A)
};

/// soc(e_{i1} A) = {a in e_{i1} A : a J = 0}; nu(i) is the unique class k with
/// soc . e_k != 0.  Throws NotSelfInjectiveLike.
NakayamaData nakayama(const FinDimAlgebra& a, const CanonicalDecomposition& dec, const RadicalData& rad);

/// Whether e A and (A f)^* are isomorphic right modules, decided by solving
/// the intertwiner equations and searching the solution space for an
/// invertible element.
bool dual_isomorphic(const FinDimAlgebra& a, const Element& e, const Element& f, std::uint64_t seed);

/// Fails with the first class i for which e_{i1} A is not isomorphic to
/// (A e_{nu(i),1})^*.
Verdict<std::size_t> verify_nakayama_duality(const FinDimAlgebra& a, const CanonicalDecomposition& dec,
                                             const NakayamaData& nak, std::uint64_t seed = 1);

/// For each class i, every class k with e_{i1} A isomorphic to (A e_{k1})^*.
std::vector<std::vector<std::size_t>> duality_pattern(const FinDimAlgebra& a, const CanonicalDecomposition& dec,
                                                      std::uint64_t seed = 1);

struct BasicReduction {
  FinDimAlgebra lambda;                  // e A e with e = sum of representatives
  std::vector<SparseVector> embedding;   // image in A of each basis vector of lambda
  CanonicalDecomposition decomposition;  // of lambda, all multiplicities 1
  bool identity = false;                 // lambda is A itself
};

BasicReduction basic_reduction(const FinDimAlgebra& a, const CanonicalDecomposition& dec);

struct IsoWitness {
  std::vector<std::vector<Element>> u;  // u[i][s] in e_{i1} A e_{is}
  std::vector<std::vector<Element>> v;  // v[i][s] in e_{is} A e_{i1}
};

/// Throws WitnessNotFound.
IsoWitness iso_witnesses(const FinDimAlgebra& a, const CanonicalDecomposition& dec, std::uint64_t seed);

}  // namespace frobalg
