#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "frobalg/amplify.hpp"

namespace frobalg {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct Analysis {
  FinDimAlgebra algebra;
  RadicalData rad;
  CanonicalDecomposition dec;
  NakayamaData nak;
  BasicReduction basic;
};

/// Validates the algebra, then computes J, the canonical decomposition, nu and
/// the basic reduction.  Throws InvalidAlgebra (with witness),
/// NotSelfInjectiveLike or UnsupportedField.
Analysis analyze(const FinDimAlgebra& a, std::uint64_t seed = kDefaultSeed);

/// Classes and nu are 1-based in the report.
nlohmann::json analysis_to_json(const Analysis& an);

/// Everything needed to spread comultiplications onto the input algebra.
struct Prepared {
  Analysis analysis;
  RadicalData lambda_rad;
  NakayamaData lambda_nak;
  FrobeniusPair pair;                 // on the basic algebra
  AmplifiedAlgebra amp;
  IsoWitness witnesses;
  std::vector<SparseVector> phi;      // image in A of each basis vector of amp.algebra
  Matrix phi_inverse;                 // column a: model coordinates of b_a
};

/// Throws NotSplitUnverified, NotFrobenius, WitnessNotFound, or
/// InvalidAlgebra when the transport map fails its isomorphism check.
Prepared prepare(const FinDimAlgebra& a, std::uint64_t seed = kDefaultSeed);
Prepared prepare(Analysis an, std::uint64_t seed = kDefaultSeed);

/// "singleton", "diagonal" or "full".  Throws BadParams.
SpreadSpec preset(const std::string& name, const std::vector<std::size_t>& m, const NakayamaData& nak);

/// (Phi (x) Phi) x for x over the model.
Tensor2 transport(const Prepared& p, const Tensor2& model_x);
/// eps o Phi^-1.
Functional transport_functional(const Prepared& p, const Functional& model_eps);

struct ComulResult {
  SpreadSpec spec;
  Tensor2 model_x;
  ComultiplicationReport report;  // on the input algebra
};

/// Spreads y over the model, transports to the input basis and runs every
/// exact check there.  Throws BadBlockSupport or IndexOutOfRange.
ComulResult comultiply(const Prepared& p, const SpreadSpec& spec);

/// Findings that contradict the theorems: lack of invariance or
/// coassociativity, or disagreement between the counit criterion and the
/// linear oracle.
bool theorem_violation(const ComulResult& r);

nlohmann::json comul_to_json(const Prepared& p, const ComulResult& r);

}  // namespace frobalg
