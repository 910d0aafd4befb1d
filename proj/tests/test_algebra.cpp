#include <doctest.h>

#include "frobalg/errors.hpp"
#include "frobalg/families.hpp"
#include "test_support.hpp"

using namespace frobalg;
using frobalg::testing::kSeed;
using frobalg::testing::random_element;

namespace {

const FieldSpec Q = FieldSpec::rationals();

/// y = sum E_{uv} (x) E_{vu} on M_m; basis index (u, v) -> u*m + v.
Tensor2 matrix_casimir(std::size_t m) {
  Tensor2 y(m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) y.add(u * m + v, v * m + u, Q(1));
  return y;
}

}  // namespace

TEST_CASE("family algebras pass the unit and associativity checks") {
  for (const auto& a : {matrix_algebra(3, Q), truncated_polynomial(4, Q), group_algebra({2, 3}, Q),
                        product_of_fields(3, Q), path_algebra_a2(Q), nakayama_algebra(3, 2, Q),
                        nsy_algebra(2, 3, {1, 2}, FieldSpec::prime(5)).algebra}) {
    CHECK(check_unit(a).passed());
    CHECK(check_associativity(a).passed());
  }
}

TEST_CASE("a corrupted structure constant is reported with a witness") {
  FinDimAlgebra a = matrix_algebra(2, Q);
  a.mutable_product(1, 2) = SparseVector{{0, Q(2)}};  // E12 E21 = 2 E11
  auto v = check_associativity(a);
  REQUIRE_FALSE(v.passed());
  const auto [i, j, k] = *v.witness;
  CHECK(multiply(a, multiply(a, a.basis(i), a.basis(j)), a.basis(k)) !=
        multiply(a, a.basis(i), multiply(a, a.basis(j), a.basis(k))));

  FinDimAlgebra b = truncated_polynomial(3, Q);
  b.set_unit(SparseVector{{0, Q(1)}, {1, Q(1)}});
  auto u = check_unit(b);
  REQUIRE_FALSE(u.passed());
  CHECK(*u.witness == 0);
}

TEST_CASE("multiply rejects mismatched dimensions") {
  FinDimAlgebra a = matrix_algebra(2, Q);
  CHECK_THROWS_AS(multiply(a, Element(3), a.unit()), DimensionMismatch);
}

TEST_CASE("the matrix Casimir is invariant, coassociative and injective") {
  for (std::size_t m : {1U, 2U, 3U}) {
    FinDimAlgebra a = matrix_algebra(m, Q);
    Tensor2 y = matrix_casimir(m);
    CHECK(is_invariant(a, y).passed());
    CHECK(check_coassociativity(a, y).passed());
    CHECK(delta_rank(a, y) == m * m);
    CHECK(rank(delta_matrix(a, y)) == m * m);

    Functional trace(Q, m * m);
    for (std::size_t u = 0; u < m; ++u) trace.coeffs[u * m + u] = Q(1);
    CHECK(apply_functional(Side::Left, trace, y) == a.unit());
    CHECK(apply_functional(Side::Right, trace, y) == a.unit());
  }
}

TEST_CASE("invariance fails for a non-central tensor with a witness") {
  FinDimAlgebra a = matrix_algebra(2, Q);
  Tensor2 t(4);
  t.add(0, 0, Q(1));  // E11 (x) E11
  auto v = is_invariant(a, t);
  REQUIRE_FALSE(v.passed());
  const Element b = a.basis(*v.witness);
  CHECK(act_left(a, b, t) != act_right(a, t, b));
}

TEST_CASE("property: Delta(x) = x t is linear and a left module map") {
  Rng rng(kSeed + 20);
  FinDimAlgebra a = group_algebra({3}, Q);
  Tensor2 t(3);
  for (std::size_t g = 0; g < 3; ++g) t.add(g, (3 - g) % 3, Q(1));
  for (int trial = 0; trial < 25; ++trial) {
    Element x = random_element(rng, a), z = random_element(rng, a);
    Tensor2 lhs = delta_of(a, t, x + z);
    Tensor2 rhs = delta_of(a, t, x);
    for (const auto& [ab, c] : delta_of(a, t, z).coeffs) rhs.add(ab.first, ab.second, c);
    CHECK(lhs == rhs);
    CHECK(delta_of(a, t, multiply(a, z, x)) == act_left(a, z, delta_of(a, t, x)));
  }
}

TEST_CASE("left multiplication matrix columns are x b_j") {
  FinDimAlgebra a = truncated_polynomial(3, Q);
  Element x = a.basis(1);
  Matrix l = left_multiplication(a, x);
  CHECK(l(1, 0) == Q(1));
  CHECK(l(2, 1) == Q(1));
  CHECK(l(0, 2).is_zero());
  CHECK(rank(l) == 2);
}
