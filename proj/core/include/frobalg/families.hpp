#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "frobalg/algebra.hpp"

namespace frobalg {

/// Lambda(m_0, ..., m_{n-1}) over B_{n,l} with basis X_{i,k}^{r,s}:
/// i in Z_n, 0 <= k < l, 0 <= r < m_i, 0 <= s < m_{i+k}.  All indices 0-based.
struct NsyPresentation {
  std::size_t n = 0, l = 0;
  std::vector<std::size_t> m;
  FinDimAlgebra algebra;

  std::size_t mult(long i) const { return m[wrap(i)]; }
  std::size_t wrap(long i) const { return static_cast<std::size_t>(((i % long(n)) + long(n)) % long(n)); }
  /// Basis index of X_{i,k}^{r,s}; i is reduced mod n.  Throws IndexOutOfRange.
  std::size_t index(long i, std::size_t k, std::size_t r, std::size_t s) const;

  std::vector<std::size_t> offsets;  // first index of each block (i, k)
};

/// B_{n,l}: paths p_{i,k} from vertex i of length k, e_i = p_{i,0}.  Throws BadParams.
FinDimAlgebra nakayama_algebra(std::size_t n, std::size_t l, FieldSpec field);

/// X_{i,k}^{r,s} X_{i',k'}^{r',s'} = X_{i,k+k'}^{r,s'} when i' = i+k, r' = s and
/// k+k' < l; zero otherwise.  Throws BadParams.
NsyPresentation nsy_algebra(std::size_t n, std::size_t l, std::vector<std::size_t> m, FieldSpec field);

/// sum_i sum_r sum_k X_{i,k}^{r,0} (x) X_{i+k-l+1,l-1-k}^{0,r}.
Tensor2 reference_d1_tensor(const NsyPresentation& nsy);

/// M_m(k) with basis E_{u,v} (1-based, row-major).
FinDimAlgebra matrix_algebra(std::size_t m, FieldSpec field);
/// k[x]/(x^k).
FinDimAlgebra truncated_polynomial(std::size_t k, FieldSpec field);
/// k[C_{d1} x ... x C_{dr}], basis in mixed radix (first factor slowest).
FinDimAlgebra group_algebra(const std::vector<std::size_t>& factors, FieldSpec field);
/// k x ... x k.
FinDimAlgebra product_of_fields(std::size_t count, FieldSpec field);
/// Path algebra of 1 -> 2: e1, e2, a with e1 a = a = a e2.  Not self-injective.
FinDimAlgebra path_algebra_a2(FieldSpec field);

struct FamilyParams {
  std::string family;                 // nsy, nakayama, matrix, truncated, group, fields, a2
  std::size_t n = 1, l = 1;
  std::vector<std::size_t> m;         // nsy multiplicities; matrix size / fields count in m[0]
  std::vector<std::size_t> factors;   // group
  FieldSpec field;
};

struct CorpusEntry {
  std::string key;
  FinDimAlgebra algebra;
  nlohmann::json provenance;
  std::optional<NsyPresentation> nsy;
};

/// Throws BadParams.
CorpusEntry generate_family(const FamilyParams& params);

/// "small" or "standard"; sorted by key.  Throws BadParams.
std::vector<CorpusEntry> corpus(const std::string& profile);

}  // namespace frobalg
