#include <doctest.h>

#include "frobalg/errors.hpp"
#include "frobalg/linalg.hpp"
#include "test_support.hpp"

using namespace frobalg;
using frobalg::testing::dense;
using frobalg::testing::kSeed;
using frobalg::testing::random_sparse;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix mat(FieldSpec f, std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Scalar>> s;
  for (auto& r : rows) {
    s.emplace_back();
    for (long v : r) s.back().push_back(f(v));
  }
  return Matrix::from_rows(f, s);
}

Matrix from_sparse_rows(FieldSpec f, const std::vector<SparseVector>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m(r, c) = v;
  return m;
}

}  // namespace

TEST_CASE("scalar parsing and formatting") {
  CHECK(Q.parse("3/6").to_string() == "1/2");
  CHECK(Q.parse(" -4 ").to_string() == "-4");
  CHECK(Q.parse("0/5").is_zero());
  const FieldSpec f7 = FieldSpec::prime(7);
  CHECK(f7.parse("10") == f7(3));
  CHECK(f7.parse("1/2") == f7(4));
  CHECK(f7.parse("5 mod 7") == f7(5));
  CHECK(f7(-1).to_string() == "6 mod 7");
  CHECK_THROWS_AS(Q.parse("1 mod 7"), ParseError);
  CHECK_THROWS_AS(f7.parse("1 mod 5"), FieldMismatch);
  CHECK_THROWS_AS(Q.parse("abc"), ParseError);
  CHECK_THROWS_AS(FieldSpec::prime(9), ParseError);
  CHECK(FieldSpec::prime(7) == f7);
  CHECK(f7.name() == "GF(7)");
}

TEST_CASE("scalar arithmetic and field separation") {
  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK(f5(2) * f5(3) == f5(1));
  CHECK(f5(2).inverse() == f5(3));
  CHECK(Q(2) / Q(3) == Q(mpq_class(2, 3)));
  CHECK_THROWS_AS(Q.zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(f5(1) + FieldSpec::prime(7)(1), FieldMismatch);
  CHECK(f5(1) + Scalar(4) == f5.zero());  // untagged literals adapt
  CHECK(f5.coerce(Q(mpq_class(1, 2))) == f5(3));
}

TEST_CASE("rank, kernel and inverse of small matrices") {
  Matrix a = mat(Q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  auto ker = kernel_basis(a);
  REQUIRE(ker.size() == 1);
  for (std::size_t r = 0; r < 3; ++r) {
    Scalar s = Q.zero();
    for (std::size_t c = 0; c < 3; ++c) s += a(r, c) * ker[0][c];
    CHECK(s.is_zero());
  }
  CHECK_THROWS_AS(invert(a), SingularMatrix);

  Matrix b = mat(Q, {{2, 1}, {5, 3}});
  CHECK(invert(b) == mat(Q, {{3, -1}, {-5, 2}}));
  CHECK(b * invert(b) == Matrix::identity(Q, 2));

  const FieldSpec f2 = FieldSpec::prime(2);
  CHECK(rank(mat(f2, {{1, 1}, {1, 1}})) == 1);
  CHECK(rank(mat(f2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 2);  // rank 3 over Q
  CHECK(rank(mat(Q, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})) == 3);
}

TEST_CASE("solve_linear reports infeasibility and the kernel") {
  Matrix a = mat(Q, {{1, 1}, {2, 2}});
  CHECK_FALSE(solve_linear(a, mat(Q, {{1}, {3}})).has_value());
  auto sol = solve_linear(a, mat(Q, {{1}, {2}}));
  REQUIRE(sol.has_value());
  CHECK(a * sol->particular == mat(Q, {{1}, {2}}));
  CHECK(sol->kernel.size() == 1);
}

TEST_CASE("property: inverse of a random invertible matrix") {
  Rng rng(kSeed);
  for (FieldSpec f : {Q, FieldSpec::prime(3), FieldSpec::prime(101)}) {
    std::size_t checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = 1 + rng.below(6);
      Matrix m(f, n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.scalar(f);
      if (rank(m) < n) {
        CHECK_THROWS_AS(invert(m), SingularMatrix);
        continue;
      }
      Matrix inv = invert(m);
      CHECK(m * inv == Matrix::identity(f, n));
      CHECK(inv * m == Matrix::identity(f, n));
      ++checked;
    }
    CHECK(checked > 10);
  }
}

TEST_CASE("property: sparse echelon agrees with dense elimination") {
  Rng rng(kSeed + 1);
  for (FieldSpec f : {Q, FieldSpec::prime(2), FieldSpec::prime(5)}) {
    for (int trial = 0; trial < 80; ++trial) {
      std::size_t rows = 1 + rng.below(8), cols = 1 + rng.below(8);
      std::vector<SparseVector> vs;
      for (std::size_t r = 0; r < rows; ++r) vs.push_back(random_sparse(rng, f, cols, 40));
      Matrix m = from_sparse_rows(f, vs, cols);
      CHECK(span_rank(f, vs) == rank(m));

      SparseEchelon ech(f, true);
      for (const auto& v : vs) ech.insert(v);
      CHECK(ech.rank() == rank(m));
      CHECK(ech.dependencies().size() == rows - rank(m));
      for (const auto& dep : ech.dependencies()) {
        SparseVector sum;
        for (const auto& [q, c] : dep) axpy(sum, c, vs[q]);
        CHECK(sum.empty());
      }
      auto rel = relations(f, vs);
      CHECK(rel.size() == rows - rank(m));

      // Nullspace vectors are orthogonal to every row and span the dense kernel.
      auto null = sparse_nullspace(f, vs, cols);
      CHECK(null.size() == cols - rank(m));
      for (const auto& x : null)
        for (const auto& row : vs) {
          Scalar s = f.zero();
          for (const auto& [k, c] : row)
            if (auto it = x.find(k); it != x.end()) s += c * it->second;
          CHECK(s.is_zero());
        }
    }
  }
}

TEST_CASE("property: sparse_solve matches solve_linear") {
  Rng rng(kSeed + 2);
  for (FieldSpec f : {Q, FieldSpec::prime(3)}) {
    for (int trial = 0; trial < 80; ++trial) {
      std::size_t rows = 1 + rng.below(7), cols = 1 + rng.below(7);
      std::vector<SparseVector> vs;
      for (std::size_t r = 0; r < rows; ++r) vs.push_back(random_sparse(rng, f, cols, 50));
      std::vector<Scalar> rhs;
      for (std::size_t r = 0; r < rows; ++r) rhs.push_back(rng.coin() ? rng.scalar(f) : f.zero());
      Matrix a = from_sparse_rows(f, vs, cols);
      Matrix b(f, rows, 1);
      for (std::size_t r = 0; r < rows; ++r) b(r, 0) = rhs[r];

      auto sparse = sparse_solve(f, vs, rhs, cols);
      auto oracle = solve_linear(a, b);
      REQUIRE(sparse.has_value() == oracle.has_value());
      if (!sparse) continue;
      CHECK(sparse->kernel.size() == oracle->kernel.size());
      auto x = dense(f, sparse->particular, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        Scalar s = f.zero();
        for (std::size_t c = 0; c < cols; ++c) s += a(r, c) * x[c];
        CHECK(s == rhs[r]);
      }
    }
  }
}

TEST_CASE("solve_in_span expresses targets in the given vectors") {
  std::vector<SparseVector> vs = {{{0, Q(1)}, {1, Q(1)}}, {{1, Q(1)}, {2, Q(1)}}};
  auto c = solve_in_span(Q, vs, {{0, Q(1)}, {2, Q(-1)}});
  REQUIRE(c.has_value());
  SparseVector sum;
  for (const auto& [q, k] : *c) axpy(sum, k, vs[q]);
  CHECK(sum == SparseVector{{0, Q(1)}, {2, Q(-1)}});
  CHECK_FALSE(solve_in_span(Q, vs, {{0, Q(1)}}).has_value());
}
