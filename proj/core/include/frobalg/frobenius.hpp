#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frobalg/structure.hpp"

namespace frobalg {

struct FrobeniusPair {
  Functional epsilon;
  Tensor2 y;
};

/// Per class i, a basis of the part of e_{nu^-1 i} L e_i killed by J on both sides.
struct SmallSpaceData {
  std::vector<std::vector<SparseVector>> spaces;
};

SmallSpaceData small_spaces(const FinDimAlgebra& l, const CanonicalDecomposition& dec, const NakayamaData& nak,
                            const RadicalData& rad);

/// Gram matrix G(a, b) = eps(b_a b_b).
Matrix gram_matrix(const FinDimAlgebra& l, const Functional& eps);

/// Counit supported on the corners e_{nu^-1 i} L e_i, equal to 1 on the first
/// small-space vector of each class and 0 on a complement.  Throws NotBasic or
/// NotFrobenius.
Functional construct_counit(const FinDimAlgebra& l, const CanonicalDecomposition& dec, const NakayamaData& nak,
                            const RadicalData& rad, std::uint64_t seed);

/// Runs the structure analysis first; an algebra failing the socle test is
/// reported as NotFrobenius.
Functional construct_counit(const FinDimAlgebra& l, std::uint64_t seed);

/// y = sum_a b_a (x) b*_a with eps(b*_c b_a) = delta; coefficients are the
/// inverse Gram matrix.  Throws SingularGram.
Tensor2 dual_basis_tensor(const FinDimAlgebra& l, const Functional& eps);

/// Invariance of y and both counit laws.
Verdict<std::string> check_frobenius_pair(const FinDimAlgebra& l, const FrobeniusPair& pair);

struct ToppReport {
  bool core_laws = false;
  std::optional<std::string> core_witness;
  bool clause_a = false;
  std::optional<std::pair<std::size_t, std::size_t>> clause_a_witness;  // corner (j, i) where eps is nonzero
  bool clause_b = false;
  std::optional<std::array<std::size_t, 4>> clause_b_witness;           // blocks (j<-i) (x) (j'<-i')
  bool small_nondegenerate = false;
  std::optional<std::size_t> small_witness;                             // class
  bool all() const noexcept { return core_laws && clause_a && clause_b && small_nondegenerate; }
};

ToppReport verify_topp(const FinDimAlgebra& l, const FrobeniusPair& pair, const CanonicalDecomposition& dec,
                       const NakayamaData& nak, const RadicalData& rad);

/// eps'(a) = eps(a b), y' rebuilt from eps'.  Throws NotInvertible.
FrobeniusPair transport_pair(const FinDimAlgebra& l, const FrobeniusPair& pair, const Element& b);

/// The b with eps2(a) = eps1(a b) for all a.  Throws SingularGram.
Element relating_element(const FinDimAlgebra& l, const Functional& eps1, const Functional& eps2);

bool is_invertible(const FinDimAlgebra& l, const Element& b);

}  // namespace frobalg
