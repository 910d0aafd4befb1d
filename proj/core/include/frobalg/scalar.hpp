#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace frobalg {

class Scalar;

/// The ground field: either the rationals or a prime field GF(p).
///
/// Prime moduli are interned, so a FieldSpec is a cheap value type and two
/// specs compare equal exactly when they describe the same field.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return {}; }
  /// Throws ParseError when p is not prime.
  static FieldSpec prime(const mpz_class& p);
  static FieldSpec prime(unsigned long p) { return prime(mpz_class(p)); }

  bool is_rational() const noexcept { return modulus_ == nullptr; }
  bool is_prime() const noexcept { return modulus_ != nullptr; }

  /// 0 for the rationals.
  mpz_class characteristic() const;
  const mpz_class* modulus() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar operator()(long v) const;
  Scalar operator()(const mpq_class& v) const;
  /// Moves an arbitrary scalar into this field (reducing rationals mod p).
  Scalar coerce(const Scalar& s) const;

  /// Accepts "a", "a/b" and, for prime fields, "r mod p".
  Scalar parse(std::string_view text) const;

  /// "rational" or "GF(p)".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(const mpz_class* m) : modulus_(m) {}
  const mpz_class* modulus_ = nullptr;
};

/// An exact field element.
///
/// Rationals are normalized fractions of arbitrary size.  Prime-field values
/// are stored as integer residues in [0, p) together with the interned modulus.
/// An untagged scalar (for instance an integer literal) adapts to the field of
/// whatever it is combined with; combining two different prime fields throws
/// FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  const mpq_class& value() const noexcept { return value_; }
  const mpz_class* modulus() const noexcept { return modulus_; }

  /// Throws DivisionByZero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used for canonical sorting: numeric for rationals, by
  /// residue for prime fields.  Returns <0, 0, >0.
  friend int compare(const Scalar& a, const Scalar& b);

  /// "a", "a/b", or "r mod p".
  std::string to_string() const;

 private:
  friend class FieldSpec;
  void adopt(const mpz_class* m);
  void align_with(Scalar& other);
  void reduce();

  mpq_class value_;
  const mpz_class* modulus_ = nullptr;
};

}  // namespace frobalg
