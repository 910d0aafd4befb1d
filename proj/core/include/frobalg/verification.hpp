#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "frobalg/families.hpp"
#include "frobalg/pipeline.hpp"

namespace frobalg {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> diagnostics;  // informational, never affect passed
  double seconds = 0;
};

/// One comultiplication checked during a corpus sweep.
struct SweepRow {
  std::string key;
  std::string spec_name;
  std::size_t dim = 0;
  std::vector<std::size_t> m;
  bool invariant = false;
  bool coassociative = false;
  std::size_t rank = 0;
  bool injective = false;
  bool all_bijection = false;
  bool all_incidence_invertible = false;
  bool counit_feasible = false;
  bool counital = false;
  std::string error;  // nonempty when the pipeline threw
};

struct VerifyOptions {
  std::string profile = "standard";
  std::uint64_t seed = kDefaultSeed;
  std::size_t random_specs = 10;
  std::size_t transports = 20;
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;
  std::vector<SweepRow> sweep;
  std::size_t corpus_size = 0;
  bool all_passed() const;
};

/// b_k -> b_{perm[k]}.  Throws BadParams unless perm is a permutation.
FinDimAlgebra permute_basis(const FinDimAlgebra& a, const std::vector<std::size_t>& perm);

/// Spread specs of the sweep: singleton, diagonal, full and count seeded
/// random nonempty specs, duplicates removed (first name kept).
std::vector<std::pair<std::string, SpreadSpec>> sweep_specs(const std::vector<std::size_t>& m,
                                                            const NakayamaData& nak, std::uint64_t seed,
                                                            std::size_t count);

/// Maps each basis vector of amplify(B_{n,l}, m) to its X_{i,k}^{r,s} index in
/// nsy(n, l, m).  Throws BlockMismatch when the vertex idempotents are not the
/// canonical ones.
std::vector<std::size_t> nsy_bijection(const AmplifiedAlgebra& amp, const NsyPresentation& nsy);

/// Closed forms of Delta(1) X_{i,j}^{r,s} and X_{i,j}^{r,s} Delta(1).
Tensor2 closed_form_right(const NsyPresentation& nsy, long i, std::size_t j, std::size_t r, std::size_t s);
Tensor2 closed_form_left(const NsyPresentation& nsy, long i, std::size_t j, std::size_t r, std::size_t s);

/// nu(i) from the paths of B_{n,l}: the unique maximal path from i ends at i + l - 1.
std::vector<std::size_t> socle_path_nakayama(std::size_t n, std::size_t l);

CriterionResult criterion_d1(std::uint64_t seed);
CriterionResult criterion_identities();
/// Criteria 3, 4 and 5 from one sweep; rows are appended to sweep.
std::vector<CriterionResult> criteria_sweep(const std::vector<CorpusEntry>& entries, const VerifyOptions& opt,
                                            std::vector<SweepRow>& sweep);
CriterionResult criterion_topp(const std::vector<CorpusEntry>& entries, const VerifyOptions& opt);
CriterionResult criterion_nakayama(const std::vector<CorpusEntry>& entries, const VerifyOptions& opt);
CriterionResult criterion_negative(const VerifyOptions& opt);
CriterionResult criterion_round_trip(const std::vector<CorpusEntry>& entries, const VerifyOptions& opt);

/// Every criterion, in order.
VerifyReport run_acceptance(const VerifyOptions& opt);

std::string format_result(const CriterionResult& r);
nlohmann::json report_to_json(const VerifyReport& rep);

}  // namespace frobalg
