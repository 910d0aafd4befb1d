#include <doctest.h>

#include <algorithm>

#include "frobalg/errors.hpp"
#include "frobalg/families.hpp"
#include "frobalg/pipeline.hpp"
#include "frobalg/structure.hpp"
#include "frobalg/verification.hpp"
#include "test_support.hpp"

using namespace frobalg;
using frobalg::testing::kSeed;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Cycle lengths of a permutation, sorted.
std::vector<std::size_t> cycle_type(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j], ++len) seen[j] = true;
    out.push_back(len);
  }
  return sorted(out);
}

}  // namespace

TEST_CASE("GF(2)[C2] is isomorphic to GF(2)[x]/(x^2) via g -> 1 + x") {
  const FieldSpec f2 = FieldSpec::prime(2);
  FinDimAlgebra g = group_algebra({2}, f2);
  FinDimAlgebra t = truncated_polynomial(2, f2);
  // phi(1) = 1, phi(g) = 1 + x
  std::vector<SparseVector> phi = {{{0, f2(1)}}, {{0, f2(1)}, {1, f2(1)}}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      SparseVector image;
      for (const auto& [k, c] : g.product(i, j)) axpy(image, c, phi[k]);
      CHECK(multiply(t, phi[i], phi[j]) == image);
    }
  auto rg = radical(g), rt = radical(t);
  CHECK(rg.dim == 1);
  CHECK(rt.dim == 1);
  CHECK(rg.method == "frobenius-kernel");
  CHECK(rg.nilpotency_index == rt.nilpotency_index);
}

TEST_CASE("GF(3)[C3] is local with nilpotency index 3") {
  FinDimAlgebra a = group_algebra({3}, FieldSpec::prime(3));
  auto an = analyze(a, kSeed);
  CHECK(an.rad.dim == 2);
  CHECK(an.rad.nilpotency_index == 3);
  CHECK(an.dec.n() == 1);
  CHECK(an.dec.multiplicities() == std::vector<std::size_t>{1});
  CHECK(an.nak.nu == std::vector<std::size_t>{0});
}

TEST_CASE("Q[C2] and Q[C2 x C2] are semisimple") {
  auto an = analyze(group_algebra({2}, Q), kSeed);
  CHECK(an.rad.dim == 0);
  CHECK(an.rad.method == "trace-form");
  CHECK(an.dec.n() == 2);
  CHECK(an.dec.is_basic());
  auto an4 = analyze(group_algebra({2, 2}, Q), kSeed);
  CHECK(an4.rad.dim == 0);
  CHECK(an4.dec.n() == 4);
}

TEST_CASE("Nakayama permutation of B_{n,l} is i -> i + l - 1") {
  for (auto [n, l] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {3, 3}, {2, 3}, {1, 3}}) {
    auto an = analyze(nakayama_algebra(n, l, Q), kSeed);
    CHECK(an.rad.dim == n * (l - 1));
    CHECK(an.rad.nilpotency_index == l);
    CHECK(an.dec.n() == n);
    CHECK(cycle_type(an.nak.nu) == cycle_type(socle_path_nakayama(n, l)));
    CHECK(verify_nakayama_duality(an.algebra, an.dec, an.nak, kSeed).passed());
  }
  auto b22 = analyze(nakayama_algebra(2, 2, Q), kSeed);
  CHECK(b22.nak.nu == std::vector<std::size_t>{1, 0});
}

TEST_CASE("matrix algebras have one class of full multiplicity") {
  auto an = analyze(matrix_algebra(3, Q), kSeed);
  CHECK(an.dec.n() == 1);
  CHECK(an.dec.multiplicities() == std::vector<std::size_t>{3});
  CHECK(an.basic.lambda.dim() == 1);
  CHECK_FALSE(an.basic.identity);
  CHECK(verify_decomposition(an.algebra, an.dec, an.rad).passed());
}

TEST_CASE("iso witnesses satisfy u v = e_{i1} and v u = e_{is}") {
  auto nsy = nsy_algebra(2, 2, {2, 3}, Q);
  auto an = analyze(nsy.algebra, kSeed);
  auto w = iso_witnesses(an.algebra, an.dec, kSeed);
  for (std::size_t i = 0; i < an.dec.n(); ++i)
    for (std::size_t s = 0; s < an.dec.classes[i].size(); ++s) {
      CHECK(multiply(an.algebra, w.u[i][s], w.v[i][s]) == an.dec.classes[i][0]);
      CHECK(multiply(an.algebra, w.v[i][s], w.u[i][s]) == an.dec.classes[i][s]);
    }
}

TEST_CASE("the A2 path algebra is not self-injective") {
  FinDimAlgebra a = path_algebra_a2(Q);
  auto rad = radical(a);
  CHECK(rad.dim == 1);
  auto dec = canonical_decomposition(a, rad, kSeed);
  CHECK(dec.n() == 2);
  CHECK_THROWS_AS(nakayama(a, dec, rad), NotSelfInjectiveLike);
  auto pattern = duality_pattern(a, dec, kSeed);
  std::size_t matches = 0;
  for (const auto& row : pattern) matches += row.size();
  CHECK(matches < 2);
}

TEST_CASE("noncommutative algebras over small primes are unsupported") {
  CHECK_THROWS_AS(radical(matrix_algebra(2, FieldSpec::prime(2))), UnsupportedField);
  CHECK_NOTHROW(radical(matrix_algebra(2, FieldSpec::prime(7))));
}

TEST_CASE("property: structure is invariant under basis permutations") {
  Rng rng(kSeed + 30);
  std::vector<FinDimAlgebra> algebras = {nsy_algebra(2, 2, {1, 2}, Q).algebra, nsy_algebra(3, 2, {2, 1, 1}, Q).algebra,
                                         matrix_algebra(2, Q), group_algebra({3}, FieldSpec::prime(3))};
  for (const auto& a : algebras) {
    auto base = analyze(a, kSeed);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::size_t> perm(a.dim());
      for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
      std::shuffle(perm.begin(), perm.end(), rng.engine());
      auto an = analyze(permute_basis(a, perm), rng.next());
      CHECK(an.rad.dim == base.rad.dim);
      CHECK(an.rad.nilpotency_index == base.rad.nilpotency_index);
      CHECK(sorted(an.dec.multiplicities()) == sorted(base.dec.multiplicities()));
      CHECK(cycle_type(an.nak.nu) == cycle_type(base.nak.nu));
      CHECK(an.basic.lambda.dim() == base.basic.lambda.dim());
      CHECK(verify_decomposition(an.algebra, an.dec, an.rad).passed());
    }
  }
}

TEST_CASE("canonical decomposition is seed independent") {
  FinDimAlgebra a = nsy_algebra(2, 3, {2, 1}, Q).algebra;
  auto d1 = canonical_decomposition(a, 1);
  auto d2 = canonical_decomposition(a, 99);
  REQUIRE(d1.n() == d2.n());
  for (std::size_t i = 0; i < d1.n(); ++i) CHECK(d1.classes[i] == d2.classes[i]);
}
