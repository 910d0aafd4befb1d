#include "frobalg/scalar.hpp"

#include <mutex>
#include <set>

#include "frobalg/errors.hpp"

namespace frobalg {

namespace {

const mpz_class* intern_modulus(const mpz_class& p) {
  static std::mutex mu;
  static std::set<mpz_class> pool;
  std::lock_guard<std::mutex> lock(mu);
  return &*pool.insert(p).first;
}

mpz_class residue_of(const mpq_class& q, const mpz_class& p) {
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw DivisionByZero("denominator " + den.get_str() + " is not invertible mod " + p.get_str());
    }
    r *= inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpq_class parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty scalar");
  if (text.front() == '+') text.remove_prefix(1);
  auto slash = text.find('/');
  auto check_int = [](std::string_view s) {
    std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
    if (s.size() == start) return false;
    for (std::size_t k = start; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') return false;
    }
    return true;
  };
  if (slash == std::string_view::npos) {
    if (!check_int(text)) throw ParseError("malformed scalar '" + std::string(text) + "'");
    return mpq_class(mpz_class(std::string(text), 10));
  }
  auto num = trim(text.substr(0, slash));
  auto den = trim(text.substr(slash + 1));
  if (!check_int(num) || !check_int(den) || den.front() == '-') {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(mpz_class(std::string(num), 10), d);
  q.canonicalize();
  return q;
}

}  // namespace

// --- FieldSpec ---------------------------------------------------------------

FieldSpec FieldSpec::prime(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw ParseError("field characteristic " + p.get_str() + " is not prime");
  }
  return FieldSpec(intern_modulus(p));
}

mpz_class FieldSpec::characteristic() const { return modulus_ ? *modulus_ : mpz_class(0); }

Scalar FieldSpec::zero() const { return (*this)(0L); }
Scalar FieldSpec::one() const { return (*this)(1L); }

Scalar FieldSpec::operator()(long v) const {
  Scalar s(v);
  s.adopt(modulus_);
  return s;
}

Scalar FieldSpec::operator()(const mpq_class& v) const {
  Scalar s(v);
  s.adopt(modulus_);
  return s;
}

Scalar FieldSpec::coerce(const Scalar& s) const {
  if (s.modulus_ == modulus_) return s;
  if (s.modulus_ != nullptr) {
    throw FieldMismatch("cannot move " + s.to_string() + " into " + name());
  }
  Scalar out = s;
  out.adopt(modulus_);
  return out;
}

Scalar FieldSpec::parse(std::string_view text) const {
  text = trim(text);
  auto mod = text.find("mod");
  if (mod != std::string_view::npos) {
    if (!modulus_) throw ParseError("modular scalar '" + std::string(text) + "' in a rational field");
    mpz_class p(std::string(trim(text.substr(mod + 3))), 10);
    if (p != *modulus_) {
      throw FieldMismatch("scalar '" + std::string(text) + "' does not live in " + name());
    }
    text = text.substr(0, mod);
  }
  return (*this)(parse_rational(text));
}

std::string FieldSpec::name() const {
  return modulus_ ? "GF(" + modulus_->get_str() + ")" : std::string("rational");
}

// --- Scalar ------------------------------------------------------------------

void Scalar::adopt(const mpz_class* m) {
  if (m == modulus_) return;
  if (modulus_ != nullptr) throw FieldMismatch("scalar already belongs to a prime field");
  modulus_ = m;
  if (m) value_ = mpq_class(residue_of(value_, *m));
}

void Scalar::align_with(Scalar& other) {
  if (modulus_ == other.modulus_) return;
  if (modulus_ == nullptr) {
    adopt(other.modulus_);
  } else if (other.modulus_ == nullptr) {
    other.adopt(modulus_);
  } else {
    throw FieldMismatch("arithmetic between GF(" + modulus_->get_str() + ") and GF(" +
                        other.modulus_->get_str() + ")");
  }
}

void Scalar::reduce() {
  if (!modulus_) return;
  mpz_ptr num = value_.get_num_mpz_t();
  mpz_fdiv_r(num, num, modulus_->get_mpz_t());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar out = *this;
  if (!modulus_) {
    mpq_inv(out.value_.get_mpq_t(), value_.get_mpq_t());
    return out;
  }
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), modulus_->get_mpz_t());
  out.value_ = mpq_class(inv);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.value_ = -value_;
  out.reduce();
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (modulus_ != o.modulus_) {
    Scalar other = o;
    align_with(other);
    value_ += other.value_;
  } else {
    value_ += o.value_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (modulus_ != o.modulus_) {
    Scalar other = o;
    align_with(other);
    value_ -= other.value_;
  } else {
    value_ -= o.value_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (modulus_ != o.modulus_) {
    Scalar other = o;
    align_with(other);
    value_ *= other.value_;
  } else {
    value_ *= o.value_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  Scalar other = o;
  align_with(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
  Scalar x = a;
  Scalar y = b;
  x.align_with(y);
  return x.value_ == y.value_;
}

int compare(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return cmp(a.value_, b.value_);
  Scalar x = a;
  Scalar y = b;
  x.align_with(y);
  return cmp(x.value_, y.value_);
}

std::string Scalar::to_string() const {
  if (modulus_) return value_.get_num().get_str() + " mod " + modulus_->get_str();
  return value_.get_str();
}

}  // namespace frobalg
