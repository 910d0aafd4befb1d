#include <doctest.h>

#include "frobalg/errors.hpp"
#include "frobalg/poly.hpp"
#include "test_support.hpp"

using namespace frobalg;
using frobalg::testing::kSeed;

namespace {

Poly poly(FieldSpec f, std::vector<long> low_to_high) {
  std::vector<Scalar> c;
  for (long v : low_to_high) c.push_back(f(v));
  return Poly(f, c);
}

/// Irreducibility oracle for tiny prime fields: no monic factor of degree
/// at most deg/2 divides f.
bool irreducible_by_search(const Poly& f, unsigned long p) {
  const int d = f.degree();
  for (int k = 1; 2 * k <= d; ++k) {
    unsigned long count = 1;
    for (int e = 0; e < k; ++e) count *= p;
    for (unsigned long code = 0; code < count; ++code) {
      std::vector<long> c;
      unsigned long rest = code;
      for (int e = 0; e < k; ++e, rest /= p) c.push_back(static_cast<long>(rest % p));
      c.push_back(1);
      if ((f % poly(f.field(), c)).is_zero()) return false;
    }
  }
  return d >= 1;
}

}  // namespace

TEST_CASE("division, gcd and powmod") {
  const FieldSpec Q = FieldSpec::rationals();
  Poly a = poly(Q, {-1, 0, 0, 1});  // x^3 - 1
  Poly b = poly(Q, {-1, 1});        // x - 1
  auto qr = divmod(a, b);
  CHECK(qr.quotient == poly(Q, {1, 1, 1}));
  CHECK(qr.remainder.is_zero());
  CHECK(gcd(a, poly(Q, {-1, 0, 1})) == b);
  auto eg = extended_gcd(a, poly(Q, {1, 1}));
  CHECK(eg.gcd.is_one());
  CHECK(eg.s * a + eg.t * poly(Q, {1, 1}) == eg.gcd);
  CHECK_THROWS_AS(divmod(a, Poly(Q)), DivisionByZero);

  const FieldSpec f2 = FieldSpec::prime(2);
  Poly m = poly(f2, {1, 1, 1});
  CHECK(powmod(Poly::x(f2), 4, m) == Poly::x(f2));  // x^4 = x in GF(4)
  CHECK(poly(Q, {1, 2, 3}).derivative() == poly(Q, {2, 6}));
}

TEST_CASE("known factorizations") {
  const FieldSpec Q = FieldSpec::rationals();
  auto f = poly_factor(poly(Q, {-1, 0, 0, 0, 1}));  // x^4 - 1
  REQUIRE(f.size() == 3);
  CHECK(f[0].factor == poly(Q, {-1, 1}));
  CHECK(f[1].factor == poly(Q, {1, 1}));
  CHECK(f[2].factor == poly(Q, {1, 0, 1}));

  auto g = poly_factor(poly(Q, {0, 0, 2, 2}));  // 2 x^2 (x + 1)
  REQUIRE(g.size() == 2);
  CHECK(g[0].factor == poly(Q, {0, 1}));
  CHECK(g[0].multiplicity == 2);
  CHECK(g[1].factor == poly(Q, {1, 1}));

  const FieldSpec f2 = FieldSpec::prime(2);
  auto h = poly_factor(poly(f2, {0, 1, 0, 0, 1}));  // x^4 + x over GF(2)
  REQUIRE(h.size() == 3);
  CHECK(h[2].factor == poly(f2, {1, 1, 1}));

  const FieldSpec f3 = FieldSpec::prime(3);
  auto k = poly_factor(poly(f3, {-1, 0, 0, 1}));  // x^3 - 1 = (x - 1)^3
  REQUIRE(k.size() == 1);
  CHECK(k[0].multiplicity == 3);
}

TEST_CASE("property: factors multiply back and are irreducible") {
  Rng rng(kSeed + 10);
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t deg = 1 + rng.below(7);
      std::vector<Scalar> c;
      for (std::size_t e = 0; e < deg; ++e) c.push_back(rng.scalar(f));
      c.push_back(f(1 + static_cast<long>(rng.below(p - 1))));
      Poly poly_f(f, c);
      auto factors = poly_factor(poly_f, rng.next());
      CHECK(expand(f, poly_f.leading(), factors) == poly_f);
      for (const auto& pf : factors) {
        CHECK(pf.factor.leading().is_one());
        CHECK(irreducible_by_search(pf.factor, p));
      }
      auto again = poly_factor(poly_f, 1);  // seed-independent result
      REQUIRE(again.size() == factors.size());
      for (std::size_t q = 0; q < again.size(); ++q) {
        CHECK(again[q].factor == factors[q].factor);
        CHECK(again[q].multiplicity == factors[q].multiplicity);
      }
    }
  }
  const FieldSpec Q = FieldSpec::rationals();
  for (int trial = 0; trial < 30; ++trial) {
    Poly prod = Poly::constant(Q, Q(1 + static_cast<long>(rng.below(3))));
    for (std::size_t k = 0, n = 1 + rng.below(3); k < n; ++k)
      prod *= poly(Q, {static_cast<long>(rng.below(7)) - 3, 1});
    auto factors = poly_factor(prod, rng.next());
    CHECK(expand(Q, prod.leading(), factors) == prod);
    for (const auto& pf : factors) CHECK(pf.factor.degree() == 1);
  }
}
