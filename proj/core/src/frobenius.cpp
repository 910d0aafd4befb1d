#include "frobalg/frobenius.hpp"

#include <map>

#include "frobalg/errors.hpp"
#include "frobalg/random.hpp"

namespace frobalg {

namespace {

/// Basis of {z in span(w) : J z = 0 and z J = 0}.
std::vector<SparseVector> two_sided_annihilated(const FinDimAlgebra& l, const std::vector<SparseVector>& w,
                                                const RadicalData& rad) {
  if (rad.basis.empty()) return w;
  const std::size_t d = l.dim();
  std::vector<SparseVector> stacked;
  for (const auto& wq : w) {
    SparseVector big;
    for (std::size_t t = 0; t < rad.basis.size(); ++t) {
      for (const auto& [k, c] : multiply(l, rad.basis[t].coeffs, wq)) big.emplace((2 * t) * d + k, c);
      for (const auto& [k, c] : multiply(l, wq, rad.basis[t].coeffs)) big.emplace((2 * t + 1) * d + k, c);
    }
    stacked.push_back(std::move(big));
  }
  SparseEchelon out(l.field());
  for (const auto& rel : relations(l.field(), stacked)) {
    SparseVector z;
    for (const auto& [q, c] : rel) axpy(z, c, w[q]);
    out.insert(z);
  }
  return out.reduced_basis();
}

}  // namespace

SmallSpaceData small_spaces(const FinDimAlgebra& l, const CanonicalDecomposition& dec, const NakayamaData& nak,
                            const RadicalData& rad) {
  SmallSpaceData out;
  for (std::size_t i = 0; i < dec.n(); ++i) {
    auto w = corner_basis(l, dec.rep(nak.nu_inverse[i]).coeffs, dec.rep(i).coeffs);
    out.spaces.push_back(two_sided_annihilated(l, w, rad));
  }
  return out;
}

Matrix gram_matrix(const FinDimAlgebra& l, const Functional& eps) {
  const std::size_t d = l.dim();
  Matrix g(l.field(), d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) g(a, b) = eps(l.product(a, b));
  return g;
}

bool is_invertible(const FinDimAlgebra& l, const Element& b) {
  return rank(left_multiplication(l, b)) == l.dim();
}

Functional construct_counit(const FinDimAlgebra& l, const CanonicalDecomposition& dec, const NakayamaData& nak,
                            const RadicalData& rad, std::uint64_t seed) {
  if (!dec.is_basic()) throw NotBasic("construct_counit needs a basic algebra");
  const FieldSpec field = l.field();
  const std::size_t n = dec.n();
  const std::size_t d = l.dim();
  PeirceBasis peirce(l, dec.representatives());
  auto small = small_spaces(l, dec, nak, rad);

  // per class: small basis extended by corner vectors to a basis of the corner
  std::vector<std::vector<SparseVector>> extended(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (small.spaces[i].empty()) throw NotFrobenius("small space of class " + std::to_string(i + 1) + " is zero");
    SparseEchelon ech(field);
    for (const auto& z : small.spaces[i]) {
      ech.insert(z);
      extended[i].push_back(z);
    }
    for (const auto& w : peirce.corner(nak.nu_inverse[i], i))
      if (ech.insert(w)) extended[i].push_back(w);
  }
  // coordinates of each basis vector's relevant Peirce components
  std::vector<std::vector<SparseVector>> coords(n, std::vector<SparseVector>(d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < d; ++a) {
      auto c = peirce.component(nak.nu_inverse[i], i, SparseVector{{a, field.one()}});
      if (c.empty()) continue;
      auto sol = solve_in_span(field, extended[i], c);
      if (!sol) throw BlockMismatch("Peirce component outside its corner");
      coords[i][a] = *sol;
    }
  }

  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < 32 * d; ++attempt) {
    std::vector<std::vector<Scalar>> values(n);
    for (std::size_t i = 0; i < n; ++i) {
      values[i].assign(extended[i].size(), field.zero());
      for (std::size_t q = 0; q < small.spaces[i].size(); ++q) {
        if (attempt == 0) {
          values[i][q] = q == 0 ? field.one() : field.zero();
        } else {
          values[i][q] = rng.scalar(field);
        }
      }
    }
    Functional eps(field, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [q, c] : coords[i][a]) eps.coeffs[a] += c * values[i][q];
    if (rank(gram_matrix(l, eps)) == d) return eps;
    // with one-dimensional small spaces every rescaling gives the same Gram rank
    bool all_one = true;
    for (const auto& s : small.spaces) all_one = all_one && s.size() == 1;
    if (all_one) break;
  }
  throw NotFrobenius("no counit supported on the Nakayama corners has an invertible Gram matrix");
}

Functional construct_counit(const FinDimAlgebra& l, std::uint64_t seed) {
  auto rad = radical(l);
  auto dec = canonical_decomposition(l, rad, seed);
  if (!dec.is_basic()) throw NotBasic("construct_counit needs a basic algebra");
  NakayamaData nak;
  try {
    nak = nakayama(l, dec, rad);
  } catch (const NotSelfInjectiveLike& e) {
    throw NotFrobenius(std::string("not Frobenius: ") + e.what());
  }
  return construct_counit(l, dec, nak, rad, seed);
}

Tensor2 dual_basis_tensor(const FinDimAlgebra& l, const Functional& eps) {
  Matrix inv;
  try {
    inv = invert(gram_matrix(l, eps));
  } catch (const SingularMatrix&) {
    throw SingularGram("Gram matrix of the functional is singular");
  }
  Tensor2 y(l.dim());
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t c = 0; c < l.dim(); ++c) y.add(a, c, inv(a, c));
  return y;
}

Verdict<std::string> check_frobenius_pair(const FinDimAlgebra& l, const FrobeniusPair& pair) {
  if (auto w = is_invariant(l, pair.y); !w) return {"y is not invariant under " + l.label(*w.witness)};
  if (apply_functional(Side::Left, pair.epsilon, pair.y) != l.unit()) return {std::string("(eps x id) y != 1")};
  if (apply_functional(Side::Right, pair.epsilon, pair.y) != l.unit()) return {std::string("(id x eps) y != 1")};
  return {};
}

ToppReport verify_topp(const FinDimAlgebra& l, const FrobeniusPair& pair, const CanonicalDecomposition& dec,
                       const NakayamaData& nak, const RadicalData& rad) {
  ToppReport rep;
  const FieldSpec field = l.field();
  const std::size_t n = dec.n();
  auto core = check_frobenius_pair(l, pair);
  rep.core_laws = core.passed();
  rep.core_witness = core.witness;

  PeirceBasis peirce(l, dec.representatives());
  rep.clause_a = true;
  for (std::size_t j = 0; j < n && rep.clause_a; ++j)
    for (std::size_t i = 0; i < n && rep.clause_a; ++i) {
      if (j == nak.nu_inverse[i]) continue;
      for (const auto& w : peirce.corner(j, i))
        if (!pair.epsilon(w).is_zero()) {
          rep.clause_a = false;
          rep.clause_a_witness = std::make_pair(j, i);
          break;
        }
    }

  // accumulate y in Peirce coordinates before testing support
  std::map<std::array<std::size_t, 6>, Scalar> blocks;
  std::map<std::size_t, std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>>> parts;
  auto part = [&](std::size_t a) -> const auto& {
    auto it = parts.find(a);
    if (it == parts.end()) it = parts.emplace(a, peirce.decompose(SparseVector{{a, field.one()}})).first;
    return it->second;
  };
  for (const auto& [ab, c] : pair.y.coeffs) {
    for (const auto& [k1, v1] : part(ab.first))
      for (const auto& [k2, v2] : part(ab.second))
        for (std::size_t q1 = 0; q1 < v1.size(); ++q1)
          for (std::size_t q2 = 0; q2 < v2.size(); ++q2) {
            Scalar s = c * v1[q1] * v2[q2];
            if (s.is_zero()) continue;
            std::array<std::size_t, 6> key{k1.first, k1.second, q1, k2.first, k2.second, q2};
            auto [it, ins] = blocks.try_emplace(key, s);
            if (!ins) it->second += s;
          }
  }
  rep.clause_b = true;
  for (const auto& [key, c] : blocks) {
    if (c.is_zero()) continue;
    std::size_t j = key[0], i = key[1], j2 = key[3], i2 = key[4];
    if (i2 != j || j2 != nak.nu_inverse[i]) {
      rep.clause_b = false;
      rep.clause_b_witness = std::array<std::size_t, 4>{j, i, j2, i2};
      break;
    }
  }

  // small-space subcheck: (d, d') -> eps(z0 d d') on a basis of e_i L e_i mod J
  auto small = small_spaces(l, dec, nak, rad);
  rep.small_nondegenerate = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (small.spaces[i].empty()) {
      rep.small_nondegenerate = false;
      rep.small_witness = i;
      break;
    }
    const SparseVector& z0 = small.spaces[i].front();
    SparseEchelon ech(field);
    for (const auto& r : rad.basis) ech.insert(r.coeffs);
    std::vector<SparseVector> dbasis;
    for (const auto& w : peirce.corner(i, i))
      if (ech.insert(w)) dbasis.push_back(w);
    Matrix g(field, dbasis.size(), dbasis.size());
    for (std::size_t k = 0; k < dbasis.size(); ++k) {
      auto zk = multiply(l, z0, dbasis[k]);
      for (std::size_t m = 0; m < dbasis.size(); ++m) g(k, m) = pair.epsilon(multiply(l, zk, dbasis[m]));
    }
    if (rank(g) != dbasis.size()) {
      rep.small_nondegenerate = false;
      rep.small_witness = i;
      break;
    }
  }
  return rep;
}

FrobeniusPair transport_pair(const FinDimAlgebra& l, const FrobeniusPair& pair, const Element& b) {
  if (!is_invertible(l, b)) throw NotInvertible("transport element is not invertible");
  FrobeniusPair out;
  out.epsilon = Functional(l.field(), l.dim());
  for (std::size_t a = 0; a < l.dim(); ++a)
    out.epsilon.coeffs[a] = pair.epsilon(multiply(l, SparseVector{{a, l.field().one()}}, b.coeffs));
  out.y = dual_basis_tensor(l, out.epsilon);
  if (auto v = check_frobenius_pair(l, out); !v) throw NotFrobenius("transported pair: " + *v.witness);
  return out;
}

Element relating_element(const FinDimAlgebra& l, const Functional& eps1, const Functional& eps2) {
  // eps2(b_a) = sum_c b_c eps1(b_a b_c) = (G b)_a
  Matrix inv;
  try {
    inv = invert(gram_matrix(l, eps1));
  } catch (const SingularMatrix&) {
    throw SingularGram("Gram matrix of the reference functional is singular");
  }
  Element b(l.dim());
  for (std::size_t c = 0; c < l.dim(); ++c) {
    Scalar s = l.field().zero();
    for (std::size_t a = 0; a < l.dim(); ++a) s += inv(c, a) * eps2.coeffs[a];
    add_entry(b.coeffs, c, s);
  }
  return b;
}

}  // namespace frobalg
