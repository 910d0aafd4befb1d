#include "frobalg/structure.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "frobalg/errors.hpp"
#include "frobalg/poly.hpp"
#include "frobalg/random.hpp"

namespace frobalg {

namespace {

std::vector<SparseVector> reduced_span(FieldSpec field, const std::vector<SparseVector>& vectors) {
  SparseEchelon ech(field);
  for (const auto& v : vectors) ech.insert(v);
  return ech.reduced_basis();
}

bool is_commutative(const FinDimAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a.product(i, j) != a.product(j, i)) return false;
  return true;
}

SparseVector power(const FinDimAlgebra& a, const SparseVector& x, const mpz_class& e) {
  SparseVector result = a.unit().coeffs;
  SparseVector base = x;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = multiply(a, result, base);
    k >>= 1;
    if (k > 0) base = multiply(a, base, base);
  }
  return result;
}

SparseVector unit_vector(FieldSpec field, std::size_t k) { return SparseVector{{k, field.one()}}; }

/// Coordinates of v in a reduced echelon basis; nullopt when v is outside the span.
std::optional<std::vector<Scalar>> rref_coordinates(FieldSpec field, const std::vector<SparseVector>& basis,
                                                    const SparseVector& v) {
  std::vector<Scalar> out;
  out.reserve(basis.size());
  SparseVector rebuilt;
  for (const auto& w : basis) {
    auto it = v.find(w.begin()->first);
    Scalar c = it == v.end() ? field.zero() : it->second;
    out.push_back(c);
    axpy(rebuilt, c, w);
  }
  if (rebuilt != v) return std::nullopt;
  return out;
}

/// True when x precedes y: at the first index where they differ, x is larger.
bool lex_greater(const SparseVector& x, const SparseVector& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) return compare(i->second, Scalar(0)) > 0;
    if (i == x.end() || j->first < i->first) return compare(Scalar(0), j->second) > 0;
    int c = compare(i->second, j->second);
    if (c != 0) return c > 0;
    ++i;
    ++j;
  }
  return false;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// The semisimple quotient A/J, represented on the complement of the pivots
/// of the radical's echelon basis.
class Quotient {
 public:
  Quotient(const FinDimAlgebra& a, const RadicalData& rad) : a_(a), jech_(a.field()) {
    std::set<std::size_t> pivots;
    for (const auto& r : rad.basis) {
      jech_.insert(r.coeffs);
      pivots.insert(r.coeffs.begin()->first);
    }
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!pivots.count(k)) complement_.push_back(k);
  }

  SparseVector reduce(const SparseVector& v) const { return jech_.reduce(v).remainder; }
  SparseVector mul(const SparseVector& x, const SparseVector& y) const { return reduce(multiply(a_, x, y)); }
  const std::vector<std::size_t>& complement() const { return complement_; }

  std::vector<SparseVector> corner(const SparseVector& e, const SparseVector& f) const {
    std::vector<SparseVector> vs;
    for (auto k : complement_) vs.push_back(mul(mul(e, unit_vector(a_.field(), k)), f));
    return reduced_span(a_.field(), vs);
  }

 private:
  const FinDimAlgebra& a_;
  SparseEchelon jech_;
  std::vector<std::size_t> complement_;
};

/// Splits the idempotent e of the quotient using the minimal polynomial of
/// z in e Q e: a coprime factorization f g of it yields the idempotent
/// (t g)(z) where s f + t g = 1.
std::optional<SparseVector> try_split(const Quotient& q, FieldSpec field, const SparseVector& e,
                                      const SparseVector& z, std::uint64_t seed) {
  SparseEchelon pe(field, true);
  std::vector<SparseVector> powers{e};
  pe.insert(e);
  SparseVector cur = e;
  SparseVector dep;
  for (;;) {
    cur = q.mul(cur, z);
    powers.push_back(cur);
    if (!pe.insert(cur)) {
      dep = pe.dependencies().back();
      break;
    }
  }
  std::size_t deg = powers.size() - 1;
  if (deg <= 1) return std::nullopt;
  std::vector<Scalar> coeffs(deg + 1, field.zero());
  for (const auto& [k, c] : dep) coeffs[k] = c;
  Poly mu(field, coeffs);
  auto factors = poly_factor(mu, seed);
  if (factors.size() < 2) return std::nullopt;
  Poly f = Poly::constant(field, field.one());
  for (unsigned k = 0; k < factors[0].multiplicity; ++k) f *= factors[0].factor;
  Poly g = mu / f;
  auto eg = extended_gcd(f, g);
  Poly h = (eg.t * g) % mu;
  SparseVector eps;
  for (std::size_t k = 0; k < h.coeffs().size(); ++k) axpy(eps, h.coeffs()[k], powers[k]);
  return eps;
}

}  // namespace

// --- radical -----------------------------------------------------------------

RadicalData radical(const FinDimAlgebra& a) {
  const std::size_t d = a.dim();
  const FieldSpec field = a.field();
  RadicalData out;
  std::vector<SparseVector> kernel;
  if (field.is_rational() || field.characteristic() > d) {
    std::vector<Scalar> tr(d, field.zero());
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) {
        auto it = a.product(k, i).find(i);
        if (it != a.product(k, i).end()) tr[k] += it->second;
      }
    std::vector<SparseVector> rows(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Scalar s = field.zero();
        for (const auto& [k, c] : a.product(i, j)) s += c * tr[k];
        if (!s.is_zero()) rows[i].emplace(j, s);
      }
    kernel = sparse_nullspace(field, rows, d);
    out.method = "trace-form";
  } else if (is_commutative(a)) {
    const mpz_class p = field.characteristic();
    mpz_class q = p;
    while (q < d) q *= p;
    std::vector<SparseVector> images;
    for (std::size_t i = 0; i < d; ++i) images.push_back(power(a, unit_vector(field, i), q));
    kernel = relations(field, images);
    out.method = "frobenius-kernel";
  } else {
    throw UnsupportedField("radical of a noncommutative algebra needs characteristic 0 or p > dim (" +
                           field.name() + ", dim " + std::to_string(d) + ")");
  }

  auto basis = reduced_span(field, kernel);
  SparseEchelon jech(field);
  for (const auto& r : basis) jech.insert(r);
  for (const auto& r : basis) {
    for (std::size_t k = 0; k < d; ++k) {
      auto bk = unit_vector(field, k);
      if (!jech.contains(multiply(a, bk, r)) || !jech.contains(multiply(a, r, bk))) {
        throw InvalidAlgebra("radical candidate is not a two-sided ideal");
      }
    }
  }
  out.dim = basis.size();
  if (!basis.empty()) {
    std::vector<SparseVector> cur = basis;
    std::size_t k = 1;
    while (!cur.empty()) {
      std::vector<SparseVector> prods;
      for (const auto& x : cur)
        for (const auto& y : basis) prods.push_back(multiply(a, x, y));
      cur = reduced_span(field, prods);
      if (++k > d + 1) throw InvalidAlgebra("radical candidate is not nilpotent");
    }
    out.nilpotency_index = k;
  }
  for (auto& r : basis) out.basis.emplace_back(d, std::move(r));
  return out;
}

// --- Peirce ------------------------------------------------------------------

std::vector<SparseVector> corner_basis(const FinDimAlgebra& a, const SparseVector& x, const SparseVector& y) {
  std::vector<SparseVector> vs;
  vs.reserve(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    auto left = multiply(a, x, unit_vector(a.field(), k));
    if (!left.empty()) vs.push_back(multiply(a, left, y));
  }
  return reduced_span(a.field(), vs);
}

PeirceBasis::PeirceBasis(const FinDimAlgebra& a, std::vector<Element> idempotents)
    : algebra_(a), idempotents_(std::move(idempotents)) {
  const std::size_t n = idempotents_.size();
  corners_.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<SparseVector> left;
    for (std::size_t k = 0; k < a.dim(); ++k) left.push_back(multiply(a, idempotents_[j].coeffs, unit_vector(a.field(), k)));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<SparseVector> vs;
      for (const auto& l : left)
        if (!l.empty()) vs.push_back(multiply(a, l, idempotents_[i].coeffs));
      corners_[j * n + i] = reduced_span(a.field(), vs);
    }
  }
}

SparseVector PeirceBasis::component(std::size_t j, std::size_t i, const SparseVector& v) const {
  return multiply(algebra_, multiply(algebra_, idempotents_.at(j).coeffs, v), idempotents_.at(i).coeffs);
}

std::vector<Scalar> PeirceBasis::coordinates(std::size_t j, std::size_t i, const SparseVector& v) const {
  auto c = rref_coordinates(algebra_.field(), corner(j, i), v);
  if (!c) {
    throw BlockMismatch("element is not in the corner e_" + std::to_string(j + 1) + " A e_" + std::to_string(i + 1));
  }
  return *c;
}

bool PeirceBasis::in_corner(std::size_t j, std::size_t i, const SparseVector& v) const {
  return rref_coordinates(algebra_.field(), corner(j, i), v).has_value();
}

std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> PeirceBasis::decompose(
    const SparseVector& v) const {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> out;
  for (std::size_t j = 0; j < size(); ++j) {
    auto left = multiply(algebra_, idempotents_[j].coeffs, v);
    if (left.empty()) continue;
    for (std::size_t i = 0; i < size(); ++i) {
      auto c = multiply(algebra_, left, idempotents_[i].coeffs);
      if (!c.empty()) out.emplace(std::make_pair(j, i), coordinates(j, i, c));
    }
  }
  return out;
}

// --- canonical decomposition -------------------------------------------------

std::vector<std::size_t> CanonicalDecomposition::multiplicities() const {
  std::vector<std::size_t> m;
  for (const auto& c : classes) m.push_back(c.size());
  return m;
}

Element CanonicalDecomposition::class_sum(std::size_t i) const {
  Element s(classes.at(i).front().dim);
  for (const auto& e : classes[i]) s += e;
  return s;
}

std::vector<Element> CanonicalDecomposition::representatives() const {
  std::vector<Element> out;
  for (const auto& c : classes) out.push_back(c.front());
  return out;
}

bool CanonicalDecomposition::is_basic() const {
  return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() == 1; });
}

std::vector<std::string> CanonicalDecomposition::flags() const {
  std::vector<std::string> f;
  f.emplace_back(split_certified ? "split" : "not-split-unverified");
  if (is_basic()) f.emplace_back("basic");
  return f;
}

CanonicalDecomposition canonical_decomposition(const FinDimAlgebra& a, std::uint64_t seed) {
  return canonical_decomposition(a, radical(a), seed);
}

CanonicalDecomposition canonical_decomposition(const FinDimAlgebra& a, const RadicalData& rad,
                                               std::uint64_t seed) {
  const std::size_t d = a.dim();
  const FieldSpec field = a.field();
  Quotient q(a, rad);
  Rng rng(seed);

  struct Piece {
    SparseVector e;
    bool certified;
  };
  std::vector<SparseVector> pending{q.reduce(a.unit().coeffs)};
  std::vector<Piece> done;
  std::size_t budget = 32 * d;
  while (!pending.empty()) {
    SparseVector e = std::move(pending.back());
    pending.pop_back();
    auto basis = q.corner(e, e);
    if (basis.size() <= 1) {
      done.push_back({e, true});
      continue;
    }
    bool split = false;
    for (std::size_t attempt = 0; budget > 0; ++attempt) {
      --budget;
      SparseVector z;
      if (attempt < basis.size()) {
        z = basis[attempt];
      } else {
        for (const auto& w : basis) axpy(z, rng.scalar(field), w);
      }
      if (z.empty()) continue;
      if (auto eps = try_split(q, field, e, z, seed + attempt)) {
        SparseVector rest = e;
        axpy(rest, field(-1), *eps);
        pending.push_back(std::move(rest));
        pending.push_back(std::move(*eps));
        split = true;
        break;
      }
    }
    if (!split) done.push_back({e, false});
  }

  // group primitive idempotents of the quotient: same class iff f_k Q f_l != 0
  const std::size_t r = done.size();
  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = k + 1; l < r; ++l) {
      bool linked = false;
      for (auto b : q.complement()) {
        auto bk = unit_vector(field, b);
        if (!q.mul(q.mul(done[k].e, bk), done[l].e).empty() || !q.mul(q.mul(done[l].e, bk), done[k].e).empty()) {
          linked = true;
          break;
        }
      }
      if (linked) parent[find_root(parent, k)] = find_root(parent, l);
    }
  }

  // lift sequentially: a <- (1-F) a (1-F), then a <- 3a^2 - 2a^3 until idempotent
  const SparseVector one = a.unit().coeffs;
  SparseVector total;
  std::vector<SparseVector> lifted;
  for (std::size_t k = 0; k + 1 < r; ++k) {
    SparseVector c = one;
    axpy(c, field(-1), total);
    SparseVector x = multiply(a, multiply(a, c, done[k].e), c);
    for (std::size_t it = 0;; ++it) {
      SparseVector x2 = multiply(a, x, x);
      if (x2 == x) break;
      if (it > 64) throw InvalidAlgebra("idempotent lifting did not converge");
      SparseVector x3 = multiply(a, x2, x);
      SparseVector next = scaled(x2, field(3));
      axpy(next, field(-2), x3);
      x = std::move(next);
    }
    axpy(total, field.one(), x);
    lifted.push_back(std::move(x));
  }
  {
    SparseVector last = one;
    axpy(last, field(-1), total);
    lifted.push_back(std::move(last));
  }

  std::map<std::size_t, std::vector<SparseVector>> groups;
  for (std::size_t k = 0; k < r; ++k) groups[find_root(parent, k)].push_back(lifted[k]);
  std::vector<std::vector<SparseVector>> classes;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end(), lex_greater);
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return lex_greater(x.front(), y.front()); });

  CanonicalDecomposition dec;
  dec.split_certified = std::all_of(done.begin(), done.end(), [](const Piece& p) { return p.certified; });
  for (auto& c : classes) {
    std::vector<Element> es;
    for (auto& v : c) es.emplace_back(d, std::move(v));
    dec.classes.push_back(std::move(es));
  }
  return dec;
}

Verdict<std::string> verify_decomposition(const FinDimAlgebra& a, const CanonicalDecomposition& dec,
                                          const RadicalData& rad) {
  std::vector<std::pair<std::size_t, std::size_t>> ids;
  std::vector<const Element*> es;
  for (std::size_t i = 0; i < dec.n(); ++i)
    for (std::size_t s = 0; s < dec.classes[i].size(); ++s) {
      ids.emplace_back(i, s);
      es.push_back(&dec.classes[i][s]);
    }
  auto name = [&](std::size_t k) {
    return "e_{" + std::to_string(ids[k].first + 1) + "," + std::to_string(ids[k].second + 1) + "}";
  };
  Element sum(a.dim());
  for (std::size_t k = 0; k < es.size(); ++k) {
    sum += *es[k];
    for (std::size_t l = 0; l < es.size(); ++l) {
      Element p = multiply(a, *es[k], *es[l]);
      if (k == l && p != *es[k]) return {name(k) + " is not idempotent"};
      if (k != l && !p.is_zero()) return {name(k) + " and " + name(l) + " are not orthogonal"};
    }
  }
  if (sum != a.unit()) return {std::string("idempotents do not sum to 1")};
  Quotient q(a, rad);
  for (std::size_t k = 0; k < es.size(); ++k) {
    auto ek = q.reduce(es[k]->coeffs);
    if (dec.split_certified && q.corner(ek, ek).size() != 1) return {name(k) + " is not primitive"};
    for (std::size_t l = 0; l < es.size(); ++l) {
      if (k == l) continue;
      bool linked = !q.corner(ek, q.reduce(es[l]->coeffs)).empty();
      bool same = ids[k].first == ids[l].first;
      if (linked != same) return {name(k) + " and " + name(l) + " are grouped inconsistently"};
    }
  }
  return {};
}

// --- Nakayama permutation ----------------------------------------------------

NakayamaData nakayama(const FinDimAlgebra& a, const CanonicalDecomposition& dec, const RadicalData& rad) {
  const std::size_t d = a.dim();
  const std::size_t n = dec.n();
  const FieldSpec field = a.field();
  NakayamaData out;
  out.nu.assign(n, 0);
  std::vector<Element> sums;
  for (std::size_t k = 0; k < n; ++k) sums.push_back(dec.class_sum(k));

  auto top_dim = [&](std::size_t k) {
    std::vector<SparseVector> ej;
    for (const auto& r : rad.basis) ej.push_back(multiply(a, dec.rep(k).coeffs, r.coeffs));
    return corner_basis(a, dec.rep(k).coeffs, a.unit().coeffs).size() - span_rank(field, ej);
  };

  for (std::size_t i = 0; i < n; ++i) {
    auto w = corner_basis(a, dec.rep(i).coeffs, a.unit().coeffs);
    std::vector<SparseVector> soc;
    if (rad.basis.empty()) {
      soc = w;
    } else {
      std::vector<SparseVector> stacked;
      for (const auto& wq : w) {
        SparseVector big;
        for (std::size_t t = 0; t < rad.basis.size(); ++t)
          for (const auto& [k, c] : multiply(a, wq, rad.basis[t].coeffs)) big.emplace(t * d + k, c);
        stacked.push_back(std::move(big));
      }
      for (const auto& rel : relations(field, stacked)) {
        SparseVector s;
        for (const auto& [q, c] : rel) axpy(s, c, w[q]);
        soc.push_back(std::move(s));
      }
      soc = reduced_span(field, soc);
    }
    if (soc.empty()) throw NotSelfInjectiveLike("socle of P_" + std::to_string(i + 1) + " is zero");
    std::vector<std::size_t> hits;
    for (std::size_t k = 0; k < n; ++k) {
      bool nonzero = std::any_of(soc.begin(), soc.end(),
                                 [&](const SparseVector& s) { return !multiply(a, s, sums[k].coeffs).empty(); });
      if (nonzero) hits.push_back(k);
    }
    if (hits.size() != 1) {
      throw NotSelfInjectiveLike("socle of P_" + std::to_string(i + 1) + " meets " + std::to_string(hits.size()) +
                                 " classes");
    }
    if (soc.size() != top_dim(hits[0])) {
      throw NotSelfInjectiveLike("socle of P_" + std::to_string(i + 1) + " is not simple");
    }
    out.nu[i] = hits[0];
    std::vector<Element> socle;
    for (auto& s : soc) socle.emplace_back(d, std::move(s));
    out.socles.push_back(std::move(socle));
  }
  out.nu_inverse.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (out.nu_inverse[out.nu[i]] != n) {
      throw NotSelfInjectiveLike("Nakayama map is not a bijection: classes " + std::to_string(out.nu_inverse[out.nu[i]] + 1) +
                                 " and " + std::to_string(i + 1) + " both map to " + std::to_string(out.nu[i] + 1));
    }
    out.nu_inverse[out.nu[i]] = i;
  }
  return out;
}

bool dual_isomorphic(const FinDimAlgebra& a, const Element& e, const Element& f, std::uint64_t seed) {
  const FieldSpec field = a.field();
  const SparseVector one = a.unit().coeffs;
  auto w = corner_basis(a, e.coeffs, one);
  auto x = corner_basis(a, one, f.coeffs);
  const std::size_t p = w.size();
  if (p != x.size()) return false;
  auto coords = [&](const std::vector<SparseVector>& basis, const SparseVector& v) {
    auto c = rref_coordinates(field, basis, v);
    if (!c) throw InvalidAlgebra("one-sided ideal is not closed under multiplication");
    return *c;
  };
  std::vector<SparseVector> rows;
  for (std::size_t g = 0; g < a.dim(); ++g) {
    auto bg = unit_vector(field, g);
    std::vector<std::vector<Scalar>> r, l;
    for (const auto& wr : w) r.push_back(coords(w, multiply(a, wr, bg)));
    for (const auto& xs : x) l.push_back(coords(x, multiply(a, bg, xs)));
    for (std::size_t p0 = 0; p0 < p; ++p0)
      for (std::size_t q0 = 0; q0 < p; ++q0) {
        SparseVector row;
        for (std::size_t t = 0; t < p; ++t) {
          add_entry(row, t * p + q0, r[p0][t]);
          add_entry(row, p0 * p + t, -l[q0][t]);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  auto kernel = sparse_nullspace(field, rows, p * p);
  if (kernel.empty()) return p == 0;
  auto invertible = [&](const SparseVector& b) {
    Matrix m(field, p, p);
    for (const auto& [k, c] : b) m(k / p, k % p) = c;
    return rank(m) == p;
  };
  for (const auto& b : kernel)
    if (invertible(b)) return true;
  SparseVector all;
  for (const auto& b : kernel) axpy(all, field.one(), b);
  if (invertible(all)) return true;
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < 32 * a.dim(); ++attempt) {
    SparseVector b;
    for (const auto& k : kernel) axpy(b, rng.scalar(field), k);
    if (invertible(b)) return true;
  }
  return false;
}

Verdict<std::size_t> verify_nakayama_duality(const FinDimAlgebra& a, const CanonicalDecomposition& dec,
                                             const NakayamaData& nak, std::uint64_t seed) {
  for (std::size_t i = 0; i < dec.n(); ++i)
    if (!dual_isomorphic(a, dec.rep(i), dec.rep(nak.nu[i]), seed)) return {i};
  return {};
}

std::vector<std::vector<std::size_t>> duality_pattern(const FinDimAlgebra& a, const CanonicalDecomposition& dec,
                                                      std::uint64_t seed) {
  std::vector<std::vector<std::size_t>> out(dec.n());
  for (std::size_t i = 0; i < dec.n(); ++i)
    for (std::size_t k = 0; k < dec.n(); ++k)
      if (dual_isomorphic(a, dec.rep(i), dec.rep(k), seed)) out[i].push_back(k);
  return out;
}

// --- basic reduction ---------------------------------------------------------

BasicReduction basic_reduction(const FinDimAlgebra& a, const CanonicalDecomposition& dec) {
  BasicReduction out;
  const FieldSpec field = a.field();
  if (dec.is_basic()) {
    out.lambda = a;
    for (std::size_t k = 0; k < a.dim(); ++k) out.embedding.push_back(unit_vector(field, k));
    out.decomposition = dec;
    out.identity = true;
    return out;
  }
  const std::size_t n = dec.n();
  PeirceBasis peirce(a, dec.representatives());
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> corner_of;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> offset;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      offset[{j, i}] = out.embedding.size();
      const auto& basis = peirce.corner(j, i);
      for (std::size_t q = 0; q < basis.size(); ++q) {
        const auto& v = basis[q];
        if (v.size() == 1 && v.begin()->second.is_one()) {
          labels.push_back(a.label(v.begin()->first));
        } else {
          labels.push_back("L_{" + std::to_string(j + 1) + "<-" + std::to_string(i + 1) + "," + std::to_string(q + 1) + "}");
        }
        out.embedding.push_back(v);
        corner_of.emplace_back(j, i);
      }
    }
  const std::size_t dl = out.embedding.size();
  std::vector<SparseVector> table(dl * dl);
  for (std::size_t x = 0; x < dl; ++x)
    for (std::size_t y = 0; y < dl; ++y) {
      if (corner_of[x].second != corner_of[y].first) continue;
      auto prod = multiply(a, out.embedding[x], out.embedding[y]);
      if (prod.empty()) continue;
      std::size_t j = corner_of[x].first, i = corner_of[y].second;
      auto c = peirce.coordinates(j, i, prod);
      for (std::size_t q = 0; q < c.size(); ++q)
        if (!c[q].is_zero()) table[x * dl + y].emplace(offset[{j, i}] + q, c[q]);
    }
  SparseVector unit;
  std::vector<Element> reps;
  for (std::size_t i = 0; i < n; ++i) {
    auto c = peirce.coordinates(i, i, dec.rep(i).coeffs);
    SparseVector e;
    for (std::size_t q = 0; q < c.size(); ++q)
      if (!c[q].is_zero()) e.emplace(offset[{i, i}] + q, c[q]);
    for (const auto& [k, v] : e) add_entry(unit, k, v);
    reps.emplace_back(dl, std::move(e));
  }
  out.lambda = FinDimAlgebra(field, std::move(labels), std::move(table), std::move(unit));
  out.decomposition.split_certified = dec.split_certified;
  for (auto& e : reps) out.decomposition.classes.push_back({std::move(e)});
  return out;
}

// --- isomorphism witnesses ---------------------------------------------------

IsoWitness iso_witnesses(const FinDimAlgebra& a, const CanonicalDecomposition& dec, std::uint64_t seed) {
  const FieldSpec field = a.field();
  IsoWitness out;
  Rng rng(seed);
  for (std::size_t i = 0; i < dec.n(); ++i) {
    const Element& e1 = dec.rep(i);
    std::vector<Element> us{e1}, vs{e1};
    for (std::size_t s = 1; s < dec.classes[i].size(); ++s) {
      const Element& es = dec.classes[i][s];
      auto ubasis = corner_basis(a, e1.coeffs, es.coeffs);
      auto vbasis = corner_basis(a, es.coeffs, e1.coeffs);
      bool found = false;
      for (std::size_t attempt = 0; attempt < 32 * a.dim() && !found; ++attempt) {
        SparseVector u;
        if (attempt < ubasis.size()) {
          u = ubasis[attempt];
        } else {
          for (const auto& w : ubasis) axpy(u, rng.scalar(field), w);
        }
        if (u.empty()) continue;
        std::vector<SparseVector> images;
        for (const auto& w : vbasis) images.push_back(multiply(a, u, w));
        auto c = solve_in_span(field, images, e1.coeffs);
        if (!c) continue;
        SparseVector v;
        for (const auto& [q, x] : *c) axpy(v, x, vbasis[q]);
        if (multiply(a, v, u) != es.coeffs) {
          throw WitnessNotFound("u v = e_{" + std::to_string(i + 1) + ",1} but v u != e_{" + std::to_string(i + 1) + "," +
                                std::to_string(s + 1) + "}; idempotent is not primitive");
        }
        us.emplace_back(a.dim(), std::move(u));
        vs.emplace_back(a.dim(), std::move(v));
        found = true;
      }
      if (!found) {
        throw WitnessNotFound("no isomorphism e_{" + std::to_string(i + 1) + ",1}A -> e_{" + std::to_string(i + 1) + "," +
                              std::to_string(s + 1) + "}A within budget");
      }
    }
    out.u.push_back(std::move(us));
    out.v.push_back(std::move(vs));
  }
  return out;
}

}  // namespace frobalg
