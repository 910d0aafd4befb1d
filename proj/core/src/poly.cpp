#include "frobalg/poly.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <utility>

#include "frobalg/errors.hpp"

namespace frobalg {

Poly::Poly(FieldSpec field) : field_(field) {}

Poly::Poly(FieldSpec field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.coerce(c);
  trim();
}

Poly Poly::constant(FieldSpec field, const Scalar& c) { return Poly(field, {c}); }

Poly Poly::x(FieldSpec field) { return Poly(field, {field.zero(), field.one()}); }

Poly Poly::monomial(FieldSpec field, const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1, field.zero());
  v[degree] = c;
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }

const Scalar& Poly::leading() const {
  if (coeffs_.empty()) throw DivisionByZero("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * field_(static_cast<long>(k)));
  return Poly(field_, std::move(d));
}

Scalar Poly::operator()(const Scalar& at) const {
  Scalar acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly operator*(Poly a, const Scalar& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0 || !c.is_one()) out += "(" + c.to_string() + ")";
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  FieldSpec f = a.field();
  std::vector<Scalar> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly(f), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(da - db + 1), f.zero());
  Scalar inv = b.leading().inverse();
  for (int k = da; k >= db; --k) {
    Scalar c = rem[static_cast<std::size_t>(k)] * inv;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  FieldSpec f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto qr = divmod(r0, r1);
    r0 = std::exchange(r1, qr.remainder);
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
    t0 = std::exchange(t1, t0 - qr.quotient * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly powmod(const Poly& base, const mpz_class& exponent, const Poly& modulus) {
  FieldSpec f = base.field();
  Poly result = Poly::constant(f, f.one()) % modulus;
  Poly b = base % modulus;
  std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  if (exponent == 0) return result;
  for (std::size_t k = bits; k-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), k)) result = (result * b) % modulus;
  }
  return result;
}

Poly expand(FieldSpec field, const Scalar& leading, const std::vector<PolyFactor>& factors) {
  Poly out = Poly::constant(field, leading);
  for (const auto& pf : factors)
    for (unsigned k = 0; k < pf.multiplicity; ++k) out *= pf.factor;
  return out;
}

namespace {

using IntPoly = std::vector<mpz_class>;  // low -> high

Scalar random_scalar(FieldSpec f, std::mt19937_64& rng) {
  const mpz_class p = f.characteristic();
  mpz_class r = 0;
  std::size_t words = mpz_sizeinbase(p.get_mpz_t(), 2) / 64 + 2;
  for (std::size_t k = 0; k < words; ++k) {
    r <<= 64;
    r += mpz_class(std::to_string(rng()), 10);
  }
  return f(mpq_class(r));
}

Poly random_poly(FieldSpec f, int degree_below, std::mt19937_64& rng) {
  std::vector<Scalar> c;
  for (int k = 0; k < degree_below; ++k) c.push_back(random_scalar(f, rng));
  return Poly(f, std::move(c));
}

// p-th root of a polynomial in x^p over GF(p).
Poly pth_root(const Poly& c, unsigned long p) {
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < c.coeffs().size(); k += p) out.push_back(c.coeffs()[k]);
  return Poly(c.field(), std::move(out));
}

// Squarefree decomposition of a monic polynomial over GF(p).
std::vector<PolyFactor> squarefree_finite(const Poly& f) {
  std::vector<PolyFactor> out;
  FieldSpec fs = f.field();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    unsigned long p = fs.characteristic().get_ui();
    for (auto& pf : squarefree_finite(pth_root(c, p).monic())) {
      pf.multiplicity *= static_cast<unsigned>(p);
      out.push_back(pf);
    }
  }
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
  FieldSpec fs = f.field();
  mpz_class p = fs.characteristic();
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f;
  Poly xp = Poly::x(fs);
  Poly h = xp % rest;
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = powmod(h, p, rest);
    Poly g = gcd(rest, h - xp);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  FieldSpec fs = f.field();
  mpz_class p = fs.characteristic();
  for (;;) {
    Poly a = random_poly(fs, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly b(fs);
    if (p == 2) {
      Poly s = a % f;
      b = s;
      for (int k = 1; k < d; ++k) {
        s = (s * s) % f;
        b += s;
      }
    } else {
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = powmod(a, e, f) - Poly::constant(fs, fs.one());
    }
    Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

std::vector<Poly> factor_squarefree_finite(const Poly& f, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (auto& [g, d] : distinct_degree(f)) equal_degree(g, d, rng, out);
  return out;
}

// Yun's squarefree decomposition in characteristic zero (monic input).
std::vector<PolyFactor> squarefree_rational(const Poly& f) {
  std::vector<PolyFactor> out;
  Poly a = gcd(f, f.derivative());
  Poly b = f / a;
  Poly c = f.derivative() / a;
  Poly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

IntPoly to_primitive_integer(const Poly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
  IntPoly out;
  for (const auto& c : f.coeffs()) out.push_back(mpz_class(c.value() * l));
  mpz_class g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (out.back() < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

void make_primitive(IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.back() < 0) g = -g;
  if (g != 0)
    for (auto& c : p) c /= g;
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  IntPoly rem = a;
  IntPoly quot(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (rem[k] == 0) {
      if (k == b.size() - 1) break;
      continue;
    }
    if (!mpz_divisible_p(rem[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class q = rem[k] / b.back();
    quot[k - (b.size() - 1)] = q;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k - (b.size() - 1) + j] -= q * b[j];
    if (k == b.size() - 1) break;
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  while (!quot.empty() && quot.back() == 0) quot.pop_back();
  return quot;
}

Poly to_rational_monic(const IntPoly& p) {
  std::vector<Scalar> c;
  for (const auto& x : p) c.emplace_back(mpq_class(x));
  return Poly(FieldSpec::rationals(), std::move(c)).monic();
}

// Factors a primitive squarefree integer polynomial.  The modular
// factorization is taken over a single prime larger than twice the
// coefficient bound on any factor, so candidate factors are read off
// directly by symmetric lifting without Hensel lifting.
std::vector<IntPoly> factor_integer_squarefree(const IntPoly& g0, std::mt19937_64& rng) {
  std::size_t n = g0.size() - 1;
  if (n <= 1) return {g0};

  mpz_class norm2 = 0;
  for (const auto& c : g0) norm2 += c * c;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  mpz_class bound = root * abs(g0.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  mpz_class prime = 2 * bound + 1;

  FieldSpec fp;
  Poly gm;
  for (;;) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    if (mpz_divisible_p(g0.back().get_mpz_t(), prime.get_mpz_t())) continue;
    fp = FieldSpec::prime(prime);
    std::vector<Scalar> c;
    for (const auto& x : g0) c.push_back(fp(mpq_class(x)));
    gm = Poly(fp, std::move(c)).monic();
    if (gcd(gm, gm.derivative()).is_one()) break;
  }

  std::vector<Poly> modular = factor_squarefree_finite(gm, rng);
  std::sort(modular.begin(), modular.end(),
            [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  if (modular.size() == 1) return {g0};

  mpz_class half = prime / 2;
  std::vector<IntPoly> found;
  IntPoly g = g0;
  std::vector<Poly> remaining = modular;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool hit = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t k = 0; k < s; ++k) pick[k] = k;
    for (;;) {
      Poly prod = Poly::constant(fp, fp(mpq_class(g.back())));
      for (auto k : pick) prod *= remaining[k];
      IntPoly cand;
      for (std::size_t k = 0; k <= static_cast<std::size_t>(prod.degree()); ++k) {
        mpz_class v = prod.coeff(k).value().get_num();
        if (v > half) v -= prime;
        cand.push_back(v);
      }
      make_primitive(cand);
      if (auto q = exact_divide(g, cand)) {
        found.push_back(cand);
        g = *q;
        make_primitive(g);
        std::vector<Poly> next;
        for (std::size_t k = 0; k < remaining.size(); ++k)
          if (std::find(pick.begin(), pick.end(), k) == pick.end()) next.push_back(remaining[k]);
        remaining = std::move(next);
        hit = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && pick[k - 1] == remaining.size() - s + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (g.size() > 1) found.push_back(g);
  return found;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    int c = compare(a.coeffs()[k], b.coeffs()[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<PolyFactor> poly_factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw DivisionByZero("cannot factor the zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<PolyFactor> out;
  Poly m = f.monic();
  if (m.degree() == 0) return out;

  if (f.field().is_prime()) {
    for (const auto& sq : squarefree_finite(m)) {
      for (auto& irr : factor_squarefree_finite(sq.factor, rng)) out.push_back({irr, sq.multiplicity});
    }
  } else {
    for (const auto& sq : squarefree_rational(m)) {
      for (auto& ip : factor_integer_squarefree(to_primitive_integer(sq.factor), rng)) {
        out.push_back({to_rational_monic(ip), sq.multiplicity});
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (poly_less(a.factor, b.factor)) return true;
    if (poly_less(b.factor, a.factor)) return false;
    return a.multiplicity < b.multiplicity;
  });
  // identical irreducibles can only appear from different squarefree layers
  std::vector<PolyFactor> merged;
  for (auto& pf : out) {
    if (!merged.empty() && merged.back().factor == pf.factor) {
      merged.back().multiplicity += pf.multiplicity;
    } else {
      merged.push_back(std::move(pf));
    }
  }
  return merged;
}

}  // namespace frobalg
