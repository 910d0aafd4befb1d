#include "frobalg/amplify.hpp"

#include <algorithm>
#include <set>

#include "frobalg/errors.hpp"

namespace frobalg {

namespace {

std::string corner_label(const FinDimAlgebra& base, const SparseVector& w, std::size_t j, std::size_t i,
                         std::size_t b) {
  if (w.size() == 1 && w.begin()->second.is_one()) return base.label(w.begin()->first);
  return "[" + std::to_string(j + 1) + "<-" + std::to_string(i + 1) + "]#" + std::to_string(b + 1);
}

}  // namespace

std::size_t AmplifiedAlgebra::index_of(std::size_t source, std::size_t target, std::size_t s, std::size_t t,
                                       std::size_t b) const {
  auto it = lookup.find({source, target, s, t, b});
  if (it == lookup.end()) {
    throw IndexOutOfRange("no basis vector for source " + std::to_string(source + 1) + " copy " + std::to_string(s) +
                          ", target " + std::to_string(target + 1) + " copy " + std::to_string(t));
  }
  return it->second;
}

AmplifiedAlgebra amplify(const FinDimAlgebra& lambda, const CanonicalDecomposition& dec, std::vector<std::size_t> m) {
  if (!dec.is_basic()) throw NotBasic("amplify needs a basic algebra with its primitive idempotents");
  if (m.size() != dec.n()) throw BadParams("multiplicity vector has the wrong length");
  for (auto x : m)
    if (x == 0) throw BadParams("multiplicities must be positive");
  const FieldSpec field = lambda.field();
  AmplifiedAlgebra amp;
  amp.base = lambda;
  amp.base_dec = dec;
  amp.corners = PeirceBasis(lambda, dec.representatives());
  amp.m = std::move(m);
  const std::size_t n = amp.m.size();

  std::vector<std::string> labels;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t t = 1; t <= amp.m[j]; ++t)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 1; s <= amp.m[i]; ++s) {
          const auto& basis = amp.corners.corner(j, i);
          for (std::size_t b = 0; b < basis.size(); ++b) {
            amp.lookup.emplace(std::array<std::size_t, 5>{i, j, s, t, b}, amp.index.size());
            amp.index.push_back({i, j, s, t, b});
            labels.push_back(corner_label(lambda, basis[b], j, i, b) + "^{" + std::to_string(t) + "<-" +
                             std::to_string(s) + "}");
          }
        }

  // products of corner basis vectors, in corner coordinates
  std::map<std::array<std::size_t, 5>, std::vector<Scalar>> prod_cache;
  auto corner_product = [&](std::size_t j, std::size_t i, std::size_t b, std::size_t i2, std::size_t b2)
      -> const std::vector<Scalar>& {
    std::array<std::size_t, 5> key{j, i, b, i2, b2};
    auto it = prod_cache.find(key);
    if (it == prod_cache.end()) {
      auto p = multiply(lambda, amp.corners.corner(j, i)[b], amp.corners.corner(i, i2)[b2]);
      it = prod_cache.emplace(key, amp.corners.coordinates(j, i2, p)).first;
    }
    return it->second;
  };

  const std::size_t d = amp.index.size();
  std::vector<SparseVector> table(d * d);
  for (std::size_t x = 0; x < d; ++x) {
    const AmpIndex& p = amp.index[x];
    for (std::size_t y = 0; y < d; ++y) {
      const AmpIndex& q = amp.index[y];
      if (p.source != q.target || p.s != q.t) continue;
      const auto& c = corner_product(p.target, p.source, p.b, q.source, q.b);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) table[x * d + y].emplace(amp.index_of(q.source, p.target, q.s, p.t, k), c[k]);
    }
  }
  SparseVector unit;
  for (std::size_t i = 0; i < n; ++i) {
    auto c = amp.corners.coordinates(i, i, dec.rep(i).coeffs);
    for (std::size_t t = 1; t <= amp.m[i]; ++t)
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) unit.emplace(amp.index_of(i, i, t, t, k), c[k]);
  }
  amp.algebra = FinDimAlgebra(field, std::move(labels), std::move(table), std::move(unit));
  return amp;
}

Element lift(const AmplifiedAlgebra& amp, const Element& phi, std::size_t source, std::size_t target, std::size_t s,
             std::size_t t) {
  if (source >= amp.n() || target >= amp.n()) throw IndexOutOfRange("class index out of range");
  if (s < 1 || s > amp.m[source] || t < 1 || t > amp.m[target]) throw IndexOutOfRange("copy index out of range");
  auto c = amp.corners.coordinates(target, source, phi.coeffs);
  Element out(amp.algebra.dim());
  for (std::size_t b = 0; b < c.size(); ++b)
    if (!c[b].is_zero()) out.coeffs.emplace(amp.index_of(source, target, s, t, b), c[b]);
  return out;
}

// --- SpreadSpec --------------------------------------------------------------

SpreadSpec SpreadSpec::singleton(std::size_t n) {
  SpreadSpec spec;
  spec.pairs.assign(n, {{1, 1}});
  return spec;
}

SpreadSpec SpreadSpec::diagonal(const std::vector<std::size_t>& m, const NakayamaData& nak) {
  SpreadSpec spec;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::size_t m2 = m[nak.nu_inverse[i]];
    std::vector<std::pair<std::size_t, std::size_t>> s;
    if (m[i] == m2) {
      for (std::size_t k = 1; k <= m[i]; ++k) s.emplace_back(k, k);
    } else {
      for (std::size_t a = 1; a <= m[i]; ++a)
        for (std::size_t b = 1; b <= m2; ++b) s.emplace_back(a, b);
    }
    spec.pairs.push_back(std::move(s));
  }
  return spec;
}

SpreadSpec SpreadSpec::full(const std::vector<std::size_t>& m, const NakayamaData& nak) {
  SpreadSpec spec;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::pair<std::size_t, std::size_t>> s;
    for (std::size_t a = 1; a <= m[i]; ++a)
      for (std::size_t b = 1; b <= m[nak.nu_inverse[i]]; ++b) s.emplace_back(a, b);
    spec.pairs.push_back(std::move(s));
  }
  return spec;
}

SpreadSpec SpreadSpec::random_nonempty(const std::vector<std::size_t>& m, const NakayamaData& nak, Rng& rng) {
  SpreadSpec spec;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::size_t m2 = m[nak.nu_inverse[i]];
    std::vector<std::pair<std::size_t, std::size_t>> s;
    while (s.empty()) {
      for (std::size_t a = 1; a <= m[i]; ++a)
        for (std::size_t b = 1; b <= m2; ++b)
          if (rng.coin()) s.emplace_back(a, b);
    }
    spec.pairs.push_back(std::move(s));
  }
  return spec;
}

std::vector<SpreadSpec> SpreadSpec::all(const std::vector<std::size_t>& m, const NakayamaData& nak) {
  std::vector<std::array<std::size_t, 3>> slots;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t a = 1; a <= m[i]; ++a)
      for (std::size_t b = 1; b <= m[nak.nu_inverse[i]]; ++b) slots.push_back({i, a, b});
  if (slots.size() > 20) throw BadParams("too many admissible pairs to enumerate every spec");
  std::vector<SpreadSpec> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    SpreadSpec spec;
    spec.pairs.resize(m.size());
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask & (std::size_t{1} << k)) spec.pairs[slots[k][0]].emplace_back(slots[k][1], slots[k][2]);
    out.push_back(std::move(spec));
  }
  return out;
}

void SpreadSpec::normalize(const std::vector<std::size_t>& m, const NakayamaData& nak) {
  if (pairs.size() != m.size()) throw IndexOutOfRange("spread spec has the wrong number of classes");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (const auto& [s, s2] : pairs[i]) {
      if (s < 1 || s > m[i] || s2 < 1 || s2 > m[nak.nu_inverse[i]]) {
        throw IndexOutOfRange("pair (" + std::to_string(s) + "," + std::to_string(s2) + ") out of range for class " +
                              std::to_string(i + 1));
      }
    }
    std::sort(pairs[i].begin(), pairs[i].end());
    pairs[i].erase(std::unique(pairs[i].begin(), pairs[i].end()), pairs[i].end());
  }
}

bool SpreadSpec::contains(std::size_t i, std::size_t s, std::size_t s2) const {
  const auto& p = pairs.at(i);
  return std::find(p.begin(), p.end(), std::make_pair(s, s2)) != p.end();
}

std::vector<bool> is_bijection_graph(const SpreadSpec& spec, const std::vector<std::size_t>& m,
                                     const NakayamaData& nak) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::size_t m2 = m[nak.nu_inverse[i]];
    std::set<std::pair<std::size_t, std::size_t>> pairs(spec.pairs.at(i).begin(), spec.pairs.at(i).end());
    std::set<std::size_t> left, right;
    for (const auto& [a, b] : pairs) {
      left.insert(a);
      right.insert(b);
    }
    out.push_back(m[i] == m2 && pairs.size() == m[i] && left.size() == m[i] && right.size() == m2);
  }
  return out;
}

std::vector<bool> is_invertible_incidence(const SpreadSpec& spec, const std::vector<std::size_t>& m,
                                          const NakayamaData& nak, FieldSpec field) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::size_t m2 = m[nak.nu_inverse[i]];
    if (m[i] != m2) {
      out.push_back(false);
      continue;
    }
    Matrix inc(field, m[i], m2);
    for (const auto& [a, b] : spec.pairs.at(i)) inc(a - 1, b - 1) = field.one();
    out.push_back(rank(inc) == m[i]);
  }
  return out;
}

// --- spreading ---------------------------------------------------------------

Tensor2 spread(const AmplifiedAlgebra& amp, const Tensor2& y, const SpreadSpec& spec, const NakayamaData& nak) {
  const FieldSpec field = amp.base.field();
  if (y.dim != amp.base.dim()) throw DimensionMismatch("spread: tensor does not live over the basic algebra");
  SpreadSpec s = spec;
  s.normalize(amp.m, nak);

  std::map<std::size_t, std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>>> parts;
  auto part = [&](std::size_t a) -> const auto& {
    auto it = parts.find(a);
    if (it == parts.end()) it = parts.emplace(a, amp.corners.decompose(SparseVector{{a, field.one()}})).first;
    return it->second;
  };
  std::map<std::array<std::size_t, 6>, Scalar> blocks;
  for (const auto& [ab, c] : y.coeffs)
    for (const auto& [k1, v1] : part(ab.first))
      for (const auto& [k2, v2] : part(ab.second))
        for (std::size_t q1 = 0; q1 < v1.size(); ++q1)
          for (std::size_t q2 = 0; q2 < v2.size(); ++q2) {
            Scalar x = c * v1[q1] * v2[q2];
            if (x.is_zero()) continue;
            std::array<std::size_t, 6> key{k1.first, k1.second, q1, k2.first, k2.second, q2};
            auto [it, ins] = blocks.try_emplace(key, x);
            if (!ins) it->second += x;
          }

  Tensor2 out(amp.algebra.dim());
  for (const auto& [key, c] : blocks) {
    if (c.is_zero()) continue;
    const std::size_t j = key[0], i = key[1], q1 = key[2], j2 = key[3], i2 = key[4], q2 = key[5];
    if (i2 != j || j2 != nak.nu_inverse[i]) {
      throw BadBlockSupport("y has a component in block (" + std::to_string(j + 1) + "<-" + std::to_string(i + 1) +
                            ") x (" + std::to_string(j2 + 1) + "<-" + std::to_string(i2 + 1) + ")");
    }
    for (std::size_t t = 1; t <= amp.m[j]; ++t)
      for (const auto& [sa, sb] : s.pairs[i])
        out.add(amp.index_of(i, j, sa, t, q1), amp.index_of(j, j2, t, sb, q2), c);
  }
  return out;
}

Functional build_counit(const AmplifiedAlgebra& amp, const SpreadSpec& spec, const NakayamaData& nak,
                        const Functional& eps_lambda) {
  SpreadSpec s = spec;
  s.normalize(amp.m, nak);
  auto bij = is_bijection_graph(s, amp.m, nak);
  for (std::size_t i = 0; i < bij.size(); ++i)
    if (!bij[i]) throw NotBijection("S(" + std::to_string(i + 1) + ") is not the graph of a bijection");
  Functional eps(amp.algebra.field(), amp.algebra.dim());
  for (std::size_t x = 0; x < amp.index.size(); ++x) {
    const AmpIndex& p = amp.index[x];
    if (p.target != nak.nu_inverse[p.source] || !s.contains(p.source, p.s, p.t)) continue;
    eps.coeffs[x] = eps_lambda(amp.corners.corner(p.target, p.source)[p.b]);
  }
  return eps;
}

bool satisfies_counit_laws(const FinDimAlgebra& a, const Tensor2& x, const Functional& eps) {
  return apply_functional(Side::Left, eps, x) == a.unit() && apply_functional(Side::Right, eps, x) == a.unit();
}

CounitSolution counit_feasible(const FinDimAlgebra& a, const Tensor2& x) {
  const std::size_t d = a.dim();
  const SparseVector unit = a.unit().coeffs;
  std::map<std::size_t, SparseVector> left_rows, right_rows;  // keyed by output coordinate
  for (const auto& [ab, c] : x.coeffs) {
    add_entry(left_rows[ab.second], ab.first, c);
    add_entry(right_rows[ab.first], ab.second, c);
  }
  for (const auto& [k, v] : unit) {
    left_rows[k];
    right_rows[k];
  }
  std::vector<SparseVector> rows;
  std::vector<Scalar> rhs;
  auto take = [&](const std::map<std::size_t, SparseVector>& rs) {
    for (const auto& [k, r] : rs) {
      auto it = unit.find(k);
      rows.push_back(r);
      rhs.push_back(it == unit.end() ? a.field().zero() : it->second);
    }
  };
  take(left_rows);
  take(right_rows);
  CounitSolution out;
  auto sol = sparse_solve(a.field(), rows, rhs, d);
  if (!sol) return out;
  Functional eps(a.field(), d);
  for (const auto& [k, c] : sol->particular) eps.coeffs[k] = c;
  out.counit = std::move(eps);
  out.solution_dim = sol->kernel.size();
  return out;
}

ComultiplicationReport assess(const FinDimAlgebra& a, const Tensor2& x, const std::optional<Functional>& candidate) {
  ComultiplicationReport rep;
  rep.x = x;
  rep.dim = a.dim();
  rep.invariant = is_invariant(a, x);
  rep.coassociative = check_coassociativity(a, x);
  rep.rank = delta_rank(a, x);
  rep.injective = rep.rank == rep.dim;
  if (candidate) {
    rep.counit = candidate;
    rep.counital = satisfies_counit_laws(a, x, *candidate);
  }
  auto oracle = counit_feasible(a, x);
  rep.counit_feasible = oracle.counit.has_value();
  rep.oracle_counit = oracle.counit;
  rep.counit_solution_dim = oracle.solution_dim;
  return rep;
}

ComultiplicationReport full_report(const AmplifiedAlgebra& amp, const Tensor2& x, const SpreadSpec& spec,
                                   const NakayamaData& nak, const Functional& eps_lambda) {
  auto bij = is_bijection_graph(spec, amp.m, nak);
  bool all = std::all_of(bij.begin(), bij.end(), [](bool b) { return b; });
  std::optional<Functional> candidate;
  if (all) candidate = build_counit(amp, spec, nak, eps_lambda);
  auto rep = assess(amp.algebra, x, candidate);
  rep.bijection = std::move(bij);
  rep.all_bijection = all;
  auto inc = is_invertible_incidence(spec, amp.m, nak, amp.algebra.field());
  rep.all_incidence_invertible = std::all_of(inc.begin(), inc.end(), [](bool b) { return b; });
  return rep;
}

}  // namespace frobalg
