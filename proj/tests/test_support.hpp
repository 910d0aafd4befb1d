#pragma once

#include <cstdint>
#include <vector>

#include "frobalg/algebra.hpp"
#include "frobalg/random.hpp"

namespace frobalg::testing {

inline constexpr std::uint64_t kSeed = 20240611;

/// Dense coordinates of a sparse vector of length n.
inline std::vector<Scalar> dense(FieldSpec field, const SparseVector& v, std::size_t n) {
  std::vector<Scalar> out(n, field.zero());
  for (const auto& [k, c] : v) out[k] = c;
  return out;
}

/// Random sparse vector with roughly density * n nonzero entries.
inline SparseVector random_sparse(Rng& rng, FieldSpec field, std::size_t n, unsigned density_percent) {
  SparseVector v;
  for (std::size_t k = 0; k < n; ++k)
    if (rng.below(100) < density_percent) add_entry(v, k, rng.scalar(field));
  return v;
}

/// Random element with small coefficients.
inline Element random_element(Rng& rng, const FinDimAlgebra& a) {
  SparseVector v;
  for (std::size_t k = 0; k < a.dim(); ++k) add_entry(v, k, rng.scalar(a.field()));
  return Element(a.dim(), v);
}

}  // namespace frobalg::testing
