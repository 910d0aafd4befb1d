#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobalg/scalar.hpp"

namespace frobalg {

/// Dense univariate polynomial, coefficients stored from low to high degree.
class Poly {
 public:
  explicit Poly(FieldSpec field = {});
  Poly(FieldSpec field, std::vector<Scalar> coeffs);

  static Poly constant(FieldSpec field, const Scalar& c);
  static Poly x(FieldSpec field);
  static Poly monomial(FieldSpec field, const Scalar& c, std::size_t degree);

  FieldSpec field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar coeff(std::size_t k) const;
  const Scalar& leading() const;

  Poly monic() const;
  Poly derivative() const;
  Scalar operator()(const Scalar& at) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Scalar& c);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Throws DivisionByZero on a zero divisor.
PolyDivision divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly gcd;  // monic
  Poly s;
  Poly t;    // s*a + t*b = gcd
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// base^exponent mod modulus.
Poly powmod(const Poly& base, const mpz_class& exponent, const Poly& modulus);

struct PolyFactor {
  Poly factor;  // monic irreducible
  unsigned multiplicity = 1;
};

/// Factorization into monic irreducibles over the polynomial's field, so
/// that f = leading(f) * prod factor^multiplicity.  Factors are sorted by
/// degree, then coefficients.  The seed drives the randomized equal-degree
/// splitting and never affects the result.
std::vector<PolyFactor> poly_factor(const Poly& f, std::uint64_t seed = 0x5eedf00dULL);

/// leading * prod factor^multiplicity.
Poly expand(FieldSpec field, const Scalar& leading, const std::vector<PolyFactor>& factors);

}  // namespace frobalg
