#include <doctest.h>

#include "frobalg/errors.hpp"
#include "frobalg/families.hpp"
#include "frobalg/frobenius.hpp"
#include "frobalg/pipeline.hpp"
#include "test_support.hpp"

using namespace frobalg;
using frobalg::testing::kSeed;
using frobalg::testing::random_element;

namespace {

const FieldSpec Q = FieldSpec::rationals();

FrobeniusPair pair_of(const FinDimAlgebra& l) {
  FrobeniusPair p;
  p.epsilon = construct_counit(l, kSeed);
  p.y = dual_basis_tensor(l, p.epsilon);
  return p;
}

}  // namespace

TEST_CASE("k[x]/(x^2) carries y = 1 (x) x + x (x) 1") {
  auto nsy = nsy_algebra(1, 2, {1}, Q);
  auto p = pair_of(nsy.algebra);
  CHECK(p.epsilon.coeffs == std::vector<Scalar>{Q(0), Q(1)});
  Tensor2 expected(2);
  expected.add(0, 1, Q(1));
  expected.add(1, 0, Q(1));
  CHECK(p.y == expected);
  CHECK(reference_d1_tensor(nsy) == expected);
  CHECK(check_frobenius_pair(nsy.algebra, p).passed());
}

TEST_CASE("constructed pairs satisfy the Frobenius laws and the structural clauses") {
  for (const auto& l : {nakayama_algebra(2, 2, Q), nakayama_algebra(3, 3, Q), nakayama_algebra(1, 4, Q),
                        group_algebra({3}, FieldSpec::prime(3)), group_algebra({2}, Q)}) {
    auto an = analyze(l, kSeed);
    auto p = pair_of(l);
    CHECK(check_frobenius_pair(l, p).passed());
    CHECK(rank(gram_matrix(l, p.epsilon)) == l.dim());
    auto rep = verify_topp(l, p, an.dec, an.nak, an.rad);
    CHECK(rep.all());
    auto small = small_spaces(l, an.dec, an.nak, an.rad);
    for (const auto& sp : small.spaces) CHECK(sp.size() == 1);
  }
}

TEST_CASE("non-Frobenius input is rejected") {
  CHECK_THROWS_AS(construct_counit(path_algebra_a2(Q), kSeed), NotFrobenius);
  FinDimAlgebra t = truncated_polynomial(3, Q);
  Functional zero(Q, 3);
  CHECK_THROWS_AS(dual_basis_tensor(t, zero), SingularGram);
}

TEST_CASE("relating element recovers the transport parameter") {
  Rng rng(kSeed + 40);
  FinDimAlgebra l = nakayama_algebra(3, 2, Q);
  auto p = pair_of(l);
  std::size_t used = 0;
  for (int trial = 0; trial < 30 && used < 10; ++trial) {
    Element b = random_element(rng, l);
    if (!is_invertible(l, b)) {
      CHECK_THROWS_AS(transport_pair(l, p, b), NotInvertible);
      continue;
    }
    ++used;
    auto q = transport_pair(l, p, b);
    CHECK(check_frobenius_pair(l, q).passed());
    CHECK(relating_element(l, p.epsilon, q.epsilon) == b);
  }
  CHECK(used == 10);
}

TEST_CASE("unit-preserving transport along a non-diagonal unit breaks the corner clause") {
  FinDimAlgebra l = nakayama_algebra(2, 2, Q);
  auto an = analyze(l, kSeed);
  auto p = pair_of(l);
  const std::size_t e0 = *l.index_of("p_{0,0}"), p01 = *l.index_of("p_{0,1}");
  CHECK_FALSE(p.epsilon.coeffs[p01].is_zero());

  Element b = l.unit() + l.basis(p01);
  REQUIRE(is_invertible(l, b));
  auto q = transport_pair(l, p, b);
  CHECK(check_frobenius_pair(l, q).passed());
  CHECK(q.epsilon.coeffs[e0] == p.epsilon.coeffs[p01]);
  auto rep = verify_topp(l, q, an.dec, an.nak, an.rad);
  CHECK(rep.core_laws);
  CHECK_FALSE(rep.clause_a);
  REQUIRE(rep.clause_a_witness.has_value());

  // A block-diagonal unit keeps every clause.
  Element d = l.basis(e0) + Q(2) * l.basis(*l.index_of("p_{1,0}"));
  auto r = transport_pair(l, p, d);
  CHECK(verify_topp(l, r, an.dec, an.nak, an.rad).all());
}
