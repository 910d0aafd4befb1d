#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "frobalg/frobenius.hpp"
#include "frobalg/random.hpp"

namespace frobalg {

/// Basis vector phi^{t<-s}_{target<-source} of the amplified algebra: classes
/// are 0-based, copies 1-based, b indexes the basis of the corner
/// e_target L e_source.
struct AmpIndex {
  std::size_t source, target, s, t, b;
};

/// End_L of the sum of P_i^{m(i)} for a basic algebra L.
struct AmplifiedAlgebra {
  FinDimAlgebra base;
  CanonicalDecomposition base_dec;
  PeirceBasis corners;                // of base, w.r.t. its primitive idempotents
  std::vector<std::size_t> m;
  FinDimAlgebra algebra;
  std::vector<AmpIndex> index;        // basis of algebra, ordered by (target, t, source, s, b)

  std::size_t n() const noexcept { return m.size(); }
  /// Throws IndexOutOfRange.
  std::size_t index_of(std::size_t source, std::size_t target, std::size_t s, std::size_t t, std::size_t b) const;

  std::map<std::array<std::size_t, 5>, std::size_t> lookup;
};

/// Throws NotBasic or BadParams.
AmplifiedAlgebra amplify(const FinDimAlgebra& lambda, const CanonicalDecomposition& dec, std::vector<std::size_t> m);

/// phi^{t<-s} for phi in e_target L e_source.  Throws BlockMismatch or IndexOutOfRange.
Element lift(const AmplifiedAlgebra& amp, const Element& phi, std::size_t source, std::size_t target, std::size_t s,
             std::size_t t);

/// S(i) per class (0-based); pairs (s, s') with 1 <= s <= m(i), 1 <= s' <= m(nu^-1 i).
struct SpreadSpec {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs;

  static SpreadSpec singleton(std::size_t n);
  /// Diagonal where m(i) = m(nu^-1 i), all pairs otherwise.
  static SpreadSpec diagonal(const std::vector<std::size_t>& m, const NakayamaData& nak);
  static SpreadSpec full(const std::vector<std::size_t>& m, const NakayamaData& nak);
  /// Every S(i) nonempty, each admissible pair kept with probability 1/2.
  static SpreadSpec random_nonempty(const std::vector<std::size_t>& m, const NakayamaData& nak, Rng& rng);
  /// All 2^N specs over the N admissible pairs, in binary counting order.
  static std::vector<SpreadSpec> all(const std::vector<std::size_t>& m, const NakayamaData& nak);

  /// Sorts and deduplicates; throws IndexOutOfRange.
  void normalize(const std::vector<std::size_t>& m, const NakayamaData& nak);
  bool contains(std::size_t i, std::size_t s, std::size_t s2) const;
  friend bool operator==(const SpreadSpec&, const SpreadSpec&) = default;
};

/// Per class: whether S(i) is the graph of a bijection {1..m(i)} -> {1..m(nu^-1 i)}.
std::vector<bool> is_bijection_graph(const SpreadSpec& spec, const std::vector<std::size_t>& m,
                                     const NakayamaData& nak);

/// Per class: m(i) = m(nu^-1 i) and the 0/1 incidence matrix of S(i) is
/// invertible over the field.  Bijection graphs are the permutation matrices.
std::vector<bool> is_invertible_incidence(const SpreadSpec& spec, const std::vector<std::size_t>& m,
                                          const NakayamaData& nak, FieldSpec field);

/// Distributes each block y_{j<-i} (x) y_{nu^-1 i<-j} over copies:
/// x = sum_t sum_{(s,s') in S(i)} phi^{t<-s} (x) psi^{s'<-t}.  Throws BadBlockSupport.
Tensor2 spread(const AmplifiedAlgebra& amp, const Tensor2& y, const SpreadSpec& spec, const NakayamaData& nak);

/// eps_A(phi^{t<-s}_{j<-i}) = eps_L(phi) when j = nu^-1 i and (s, t) in S(i); zero
/// elsewhere.  Throws NotBijection.
Functional build_counit(const AmplifiedAlgebra& amp, const SpreadSpec& spec, const NakayamaData& nak,
                        const Functional& eps_lambda);

struct CounitSolution {
  std::optional<Functional> counit;
  std::size_t solution_dim = 0;  // dimension of the affine solution set when feasible
};

/// Solves (eps (x) id) x = 1 = (id (x) eps) x for eps.
CounitSolution counit_feasible(const FinDimAlgebra& a, const Tensor2& x);

/// (eps (x) id) x = 1 = (id (x) eps) x.
bool satisfies_counit_laws(const FinDimAlgebra& a, const Tensor2& x, const Functional& eps);

struct ComultiplicationReport {
  Tensor2 x;
  Verdict<std::size_t> invariant;
  Verdict<std::array<std::size_t, 3>> coassociative;
  std::size_t rank = 0;
  std::size_t dim = 0;
  bool injective = false;
  std::vector<bool> bijection;
  bool all_bijection = false;
  bool all_incidence_invertible = false;
  bool counital = false;
  std::optional<Functional> counit;
  bool counit_feasible = false;
  std::optional<Functional> oracle_counit;
  std::size_t counit_solution_dim = 0;

  /// Whether counit_feasible and the bijection test agree, and a built counit
  /// (when present) passes.
  bool counit_paths_agree() const noexcept {
    return counit_feasible == all_bijection && (!all_bijection || counital);
  }
};

/// Exact checks of x over a; candidate is verified against the counit laws.
ComultiplicationReport assess(const FinDimAlgebra& a, const Tensor2& x, const std::optional<Functional>& candidate);

ComultiplicationReport full_report(const AmplifiedAlgebra& amp, const Tensor2& x, const SpreadSpec& spec,
                                   const NakayamaData& nak, const Functional& eps_lambda);

}  // namespace frobalg
