#include <doctest.h>

#include <tuple>

#include "frobalg/errors.hpp"
#include "frobalg/families.hpp"
#include "frobalg/pipeline.hpp"
#include "frobalg/verification.hpp"
#include "test_support.hpp"

using namespace frobalg;
using frobalg::testing::kSeed;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct Basic {
  FinDimAlgebra b;
  RadicalData rad;
  CanonicalDecomposition dec;
  NakayamaData nak;
  FrobeniusPair pair;
};

Basic basic_nakayama(std::size_t n, std::size_t l) {
  Basic x;
  x.b = nakayama_algebra(n, l, Q);
  x.rad = radical(x.b);
  x.dec = canonical_decomposition(x.b, x.rad, kSeed);
  x.nak = nakayama(x.b, x.dec, x.rad);
  x.pair.epsilon = construct_counit(x.b, x.dec, x.nak, x.rad, kSeed);
  x.pair.y = dual_basis_tensor(x.b, x.pair.epsilon);
  return x;
}

/// Determinant of a 0/1 matrix by cofactor expansion (independent of elimination).
long det01(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  long d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      minor.emplace_back();
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) minor.back().push_back(m[r][k]);
    }
    d += (c % 2 == 0 ? 1 : -1) * m[0][c] * det01(minor);
  }
  return d;
}

}  // namespace

TEST_CASE("amplified B_{n,l} is isomorphic to the nsy presentation") {
  for (auto [n, l] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    Basic x = basic_nakayama(n, l);
    for (const auto& m : std::vector<std::vector<std::size_t>>{std::vector<std::size_t>(n, 1),
                                                               std::vector<std::size_t>(n, 2)}) {
      auto nsy = nsy_algebra(n, l, m, Q);
      auto amp = amplify(x.b, x.dec, m);
      REQUIRE(amp.algebra.dim() == nsy.algebra.dim());
      auto map = nsy_bijection(amp, nsy);
      for (std::size_t a = 0; a < amp.algebra.dim(); ++a)
        for (std::size_t b = 0; b < amp.algebra.dim(); ++b) {
          SparseVector mapped;
          for (const auto& [k, c] : amp.algebra.product(a, b)) mapped.emplace(map[k], c);
          CHECK(mapped == nsy.algebra.product(map[a], map[b]));
        }
      CHECK(check_associativity(amp.algebra).passed());
    }
  }
}

TEST_CASE("amplified basis order and lookup") {
  Basic x = basic_nakayama(2, 2);
  auto amp = amplify(x.b, x.dec, {1, 2});
  for (std::size_t k = 0; k < amp.index.size(); ++k) {
    const auto& ix = amp.index[k];
    CHECK(amp.index_of(ix.source, ix.target, ix.s, ix.t, ix.b) == k);
    if (k > 0) {
      const auto& p = amp.index[k - 1];
      CHECK(std::tie(p.target, p.t, p.source, p.s, p.b) < std::tie(ix.target, ix.t, ix.source, ix.s, ix.b));
    }
  }
  CHECK_THROWS_AS(amp.index_of(0, 0, 2, 1, 0), IndexOutOfRange);
  CHECK_THROWS_AS(lift(amp, x.b.basis(*x.b.index_of("p_{0,1}")), 0, 0, 1, 1), BlockMismatch);
  CHECK_THROWS_AS(amplify(matrix_algebra(2, Q), canonical_decomposition(matrix_algebra(2, Q), kSeed), {1}), NotBasic);
}

TEST_CASE("spread presets and enumeration") {
  Basic x = basic_nakayama(2, 2);  // nu swaps the two classes
  std::vector<std::size_t> m = {1, 2};
  auto diag = SpreadSpec::diagonal(m, x.nak);
  CHECK(diag.pairs[0].size() == 2);  // m(0) != m(nu^-1 0): full product
  CHECK(diag == SpreadSpec::full(m, x.nak));
  CHECK(SpreadSpec::singleton(2).pairs[1] == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}});
  CHECK(SpreadSpec::all(m, x.nak).size() == 16);

  auto eq = SpreadSpec::diagonal({2, 2}, x.nak);
  CHECK(eq.pairs[0] == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 2}});
  CHECK(is_bijection_graph(eq, {2, 2}, x.nak) == std::vector<bool>{true, true});
  CHECK(is_bijection_graph(SpreadSpec::full({2, 2}, x.nak), {2, 2}, x.nak) == std::vector<bool>{false, false});

  SpreadSpec bad = SpreadSpec::singleton(2);
  bad.pairs[0].emplace_back(3, 1);
  CHECK_THROWS_AS(bad.normalize(m, x.nak), IndexOutOfRange);

  Rng rng(kSeed + 50);
  for (int trial = 0; trial < 20; ++trial) {
    auto r = SpreadSpec::random_nonempty({2, 3}, x.nak, rng);
    for (const auto& s : r.pairs) CHECK_FALSE(s.empty());
    CHECK_NOTHROW(r.normalize({2, 3}, x.nak));
  }
}

TEST_CASE("property: every spread is invariant and coassociative") {
  Rng rng(kSeed + 51);
  for (auto [n, l] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {2, 3}}) {
    Basic x = basic_nakayama(n, l);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::size_t> m(n);
      for (auto& v : m) v = 1 + rng.below(2);
      auto amp = amplify(x.b, x.dec, m);
      auto spec = SpreadSpec::random_nonempty(m, x.nak, rng);
      spec.normalize(m, x.nak);
      Tensor2 t = spread(amp, x.pair.y, spec, x.nak);
      CHECK(is_invariant(amp.algebra, t).passed());
      CHECK(check_coassociativity(amp.algebra, t).passed());
      auto rep = full_report(amp, t, spec, x.nak, x.pair.epsilon);
      CHECK(rep.counit_feasible == rep.all_incidence_invertible);
      if (rep.all_bijection) CHECK(rep.counital);
    }
  }
}

TEST_CASE("the singleton spread is injective") {
  for (auto [n, l] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {1, 3}}) {
    Basic x = basic_nakayama(n, l);
    std::vector<std::size_t> m(n, 2);
    auto amp = amplify(x.b, x.dec, m);
    Tensor2 t = spread(amp, x.pair.y, SpreadSpec::singleton(n), x.nak);
    CHECK(delta_rank(amp.algebra, t) == amp.algebra.dim());
  }
}

TEST_CASE("spread rejects tensors outside the admissible blocks") {
  Basic x = basic_nakayama(2, 2);
  auto amp = amplify(x.b, x.dec, {1, 1});
  Tensor2 y(x.b.dim());
  const std::size_t e0 = *x.b.index_of("p_{0,0}");
  y.add(e0, e0, Q(1));
  CHECK_THROWS_AS(spread(amp, y, SpreadSpec::singleton(2), x.nak), BadBlockSupport);
  SpreadSpec two = SpreadSpec::full({2, 2}, x.nak);
  auto amp2 = amplify(x.b, x.dec, {2, 2});
  CHECK_THROWS_AS(build_counit(amp2, two, x.nak, x.pair.epsilon), NotBijection);
}

TEST_CASE("E11 (x) E11 + E21 (x) E12 on M_2 has no counit") {
  FinDimAlgebra a = matrix_algebra(2, Q);  // E11, E12, E21, E22
  Tensor2 t(4);
  t.add(0, 0, Q(1));
  t.add(2, 1, Q(1));
  CHECK_FALSE(counit_feasible(a, t).counit.has_value());
  auto rep = assess(a, t, std::nullopt);
  CHECK_FALSE(rep.counit_feasible);
  CHECK_FALSE(rep.counital);
}

TEST_CASE("over M_2 a counit exists exactly when the incidence matrix is invertible") {
  auto p = prepare(matrix_algebra(2, Q), kSeed);
  REQUIRE(p.amp.m == std::vector<std::size_t>{2});
  std::size_t feasible = 0, bijections = 0;
  for (const auto& spec : SpreadSpec::all(p.amp.m, p.lambda_nak)) {
    auto r = comultiply(p, spec);
    std::vector<std::vector<long>> inc(2, std::vector<long>(2, 0));
    for (const auto& [s, s2] : r.spec.pairs[0]) inc[s - 1][s2 - 1] = 1;
    const bool invertible = det01(inc) != 0;
    CHECK(r.report.counit_feasible == invertible);
    CHECK(r.report.all_incidence_invertible == invertible);
    CHECK(r.report.invariant.passed());
    CHECK(r.report.coassociative.passed());
    if (r.report.all_bijection) CHECK(r.report.counital);
    feasible += r.report.counit_feasible;
    bijections += r.report.all_bijection;
  }
  CHECK(bijections == 2);
  CHECK(feasible == 6);  // both permutation matrices and the four triangular patterns

  SpreadSpec tri;
  tri.pairs = {{{1, 1}, {2, 1}, {2, 2}}};
  auto r = comultiply(p, tri);
  REQUIRE(r.report.oracle_counit.has_value());
  CHECK(satisfies_counit_laws(p.analysis.algebra, r.report.x, *r.report.oracle_counit));
  CHECK(r.report.counit_feasible);
  CHECK_FALSE(r.report.all_bijection);
  CHECK(theorem_violation(r));
}
