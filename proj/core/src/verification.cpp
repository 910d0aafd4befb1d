#include "frobalg/verification.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "frobalg/errors.hpp"
#include "frobalg/io.hpp"
#include "frobalg/random.hpp"

namespace frobalg {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string vec_string(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

Tensor2 relabel(const Tensor2& t, const std::vector<std::size_t>& map, std::size_t dim) {
  Tensor2 out(dim);
  for (const auto& [ab, c] : t.coeffs) out.add(map[ab.first], map[ab.second], c);
  return out;
}

std::string tensor_diff(const FinDimAlgebra& a, const Tensor2& got, const Tensor2& want) {
  for (const auto& [ab, c] : got.coeffs) {
    auto it = want.coeffs.find(ab);
    if (it == want.coeffs.end() || it->second != c) {
      return a.label(ab.first) + " (x) " + a.label(ab.second) + " has coefficient " + c.to_string() + ", expected " +
             (it == want.coeffs.end() ? std::string("0") : it->second.to_string());
    }
  }
  for (const auto& [ab, c] : want.coeffs)
    if (!got.coeffs.count(ab))
      return a.label(ab.first) + " (x) " + a.label(ab.second) + " is missing (expected " + c.to_string() + ")";
  return "equal";
}

/// Iso-invariant pieces of the structure analysis of one corpus algebra.
struct BasicData {
  FinDimAlgebra lambda;
  CanonicalDecomposition dec;
  RadicalData rad;
  NakayamaData nak;
};

BasicData basic_data(const Analysis& an) {
  BasicData b;
  b.lambda = an.basic.lambda;
  b.dec = an.basic.decomposition;
  b.rad = an.basic.identity ? an.rad : radical(b.lambda);
  b.nak = an.basic.identity ? an.nak : nakayama(b.lambda, b.dec, b.rad);
  return b;
}

Element random_invertible(const FinDimAlgebra& l, Rng& rng, const std::vector<SparseVector>& span) {
  for (std::size_t attempt = 0; attempt < 64; ++attempt) {
    Element b(l.dim());
    for (const auto& w : span) axpy(b.coeffs, rng.scalar(l.field()), w);
    if (!b.is_zero() && is_invertible(l, b)) return b;
  }
  throw WitnessNotFound("no invertible element found in the sampled span");
}

SweepRow make_row(const std::string& key, const std::string& spec_name, const ComulResult& r,
                  const std::vector<std::size_t>& m) {
  SweepRow row;
  row.key = key;
  row.spec_name = spec_name;
  row.dim = r.report.dim;
  row.m = m;
  row.invariant = r.report.invariant.passed();
  row.coassociative = r.report.coassociative.passed();
  row.rank = r.report.rank;
  row.injective = r.report.injective;
  row.all_bijection = r.report.all_bijection;
  row.all_incidence_invertible = r.report.all_incidence_invertible;
  row.counit_feasible = r.report.counit_feasible;
  row.counital = r.report.counital;
  return row;
}

bool counit_row_ok(const SweepRow& row) {
  return row.error.empty() && row.counit_feasible == row.all_bijection && (!row.all_bijection || row.counital);
}

std::uint64_t mix(std::uint64_t seed, std::size_t k) { return seed * 0x9e3779b97f4a7c15ULL + k + 1; }

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) { return r.passed; });
}

FinDimAlgebra permute_basis(const FinDimAlgebra& a, const std::vector<std::size_t>& perm) {
  const std::size_t d = a.dim();
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted.size() != d || sorted[k] != k) throw BadParams("not a permutation of the basis");
  auto move = [&](const SparseVector& v) {
    SparseVector out;
    for (const auto& [k, c] : v) out.emplace(perm[k], c);
    return out;
  };
  std::vector<std::string> labels(d);
  std::vector<SparseVector> table(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    labels[perm[i]] = a.label(i);
    for (std::size_t j = 0; j < d; ++j) table[perm[i] * d + perm[j]] = move(a.product(i, j));
  }
  return FinDimAlgebra(a.field(), std::move(labels), std::move(table), move(a.unit().coeffs));
}

std::vector<std::pair<std::string, SpreadSpec>> sweep_specs(const std::vector<std::size_t>& m,
                                                            const NakayamaData& nak, std::uint64_t seed,
                                                            std::size_t count) {
  std::vector<std::pair<std::string, SpreadSpec>> out;
  auto push = [&](std::string name, SpreadSpec s) {
    s.normalize(m, nak);
    for (const auto& [n2, s2] : out)
      if (s2 == s) return;
    out.emplace_back(std::move(name), std::move(s));
  };
  push("singleton", SpreadSpec::singleton(m.size()));
  push("diagonal", SpreadSpec::diagonal(m, nak));
  push("full", SpreadSpec::full(m, nak));
  Rng rng(seed);
  for (std::size_t k = 0; k < count; ++k) push("random" + std::to_string(k + 1), SpreadSpec::random_nonempty(m, nak, rng));
  return out;
}

std::vector<std::size_t> nsy_bijection(const AmplifiedAlgebra& amp, const NsyPresentation& nsy) {
  const std::size_t l = nsy.l;
  for (std::size_t i = 0; i < amp.n(); ++i) {
    const auto& e = amp.base_dec.rep(i).coeffs;
    if (e.size() != 1 || e.begin()->first != i * l || !e.begin()->second.is_one())
      throw BlockMismatch("class " + std::to_string(i + 1) + " is not the vertex idempotent e_" + std::to_string(i));
  }
  std::vector<std::size_t> map;
  for (const AmpIndex& x : amp.index) {
    const auto& w = amp.corners.corner(x.target, x.source)[x.b];
    if (w.size() != 1 || !w.begin()->second.is_one()) throw BlockMismatch("corner basis vector is not a path");
    const std::size_t p = w.begin()->first, i = p / l, k = p % l;
    if (i != x.target || nsy.wrap(long(i + k)) != x.source) throw BlockMismatch("path lies in the wrong corner");
    map.push_back(nsy.index(long(i), k, x.t - 1, x.s - 1));
  }
  return map;
}

Tensor2 closed_form_right(const NsyPresentation& nsy, long i, std::size_t j, std::size_t r, std::size_t s) {
  Tensor2 t(nsy.algebra.dim());
  const long l = long(nsy.l);
  for (long k = long(j); k <= l - 1; ++k)
    t.add(nsy.index(i, std::size_t(k), r, 0), nsy.index(i + k - l + 1, std::size_t(l - 1 - k + long(j)), 0, s),
          nsy.algebra.field().one());
  return t;
}

Tensor2 closed_form_left(const NsyPresentation& nsy, long i, std::size_t j, std::size_t r, std::size_t s) {
  Tensor2 t(nsy.algebra.dim());
  const long l = long(nsy.l);
  for (long k = 0; k <= l - 1 - long(j); ++k)
    t.add(nsy.index(i, std::size_t(k) + j, r, 0), nsy.index(i + k + long(j) - l + 1, std::size_t(l - 1 - k), 0, s),
          nsy.algebra.field().one());
  return t;
}

std::vector<std::size_t> socle_path_nakayama(std::size_t n, std::size_t l) {
  // walk from i along the arrow i -> i+1 while the path stays nonzero
  std::vector<std::size_t> nu(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t vertex = i;
    for (std::size_t length = 0; length + 1 < l; ++length) vertex = (vertex + 1) % n;
    nu[i] = vertex;
  }
  return nu;
}

// --- criterion 1 ---------------------------------------------------------------

CriterionResult criterion_d1(std::uint64_t seed) {
  CriterionResult res{1, "reference tensor regression: diagonal spread equals the closed-form tensor", false, {}, {}, 0};
  const auto t0 = Clock::now();
  const FieldSpec q = FieldSpec::rationals();
  std::size_t cases = 0, diagonal_ok = 0, singleton_ok = 0, certified = 0;
  std::vector<std::string> failures;
  try {
    for (const auto& [n, l] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
      FinDimAlgebra b = nakayama_algebra(n, l, q);
      auto rad = radical(b);
      auto dec = canonical_decomposition(b, rad, seed);
      auto nak = nakayama(b, dec, rad);
      FrobeniusPair pair{construct_counit(b, dec, nak, rad, seed), {}};
      pair.y = dual_basis_tensor(b, pair.epsilon);
      std::vector<std::size_t> m(n, 1);
      while (true) {
        ++cases;
        auto nsy = nsy_algebra(n, l, m, q);
        auto amp = amplify(b, dec, m);
        auto map = nsy_bijection(amp, nsy);
        bool iso = amp.algebra.dim() == nsy.algebra.dim();
        for (std::size_t x = 0; iso && x < amp.algebra.dim(); ++x)
          for (std::size_t y = 0; iso && y < amp.algebra.dim(); ++y) {
            SparseVector mapped;
            for (const auto& [k, c] : amp.algebra.product(x, y)) mapped.emplace(map[k], c);
            iso = mapped == nsy.algebra.product(map[x], map[y]);
          }
        if (iso) ++certified;
        const Tensor2 ref = reference_d1_tensor(nsy);
        const std::size_t d = nsy.algebra.dim();
        const Tensor2 diag = relabel(spread(amp, pair.y, SpreadSpec::diagonal(m, nak), nak), map, d);
        const Tensor2 single = relabel(spread(amp, pair.y, SpreadSpec::singleton(n), nak), map, d);
        const std::string tag = "nsy(" + std::to_string(n) + "," + std::to_string(l) + ";" + vec_string(m) + ")";
        if (iso && diag == ref) {
          ++diagonal_ok;
        } else {
          failures.push_back(tag + ": " + (iso ? tensor_diff(nsy.algebra, diag, ref) : "basis bijection is not an isomorphism"));
        }
        if (single == ref) ++singleton_ok;
        std::size_t k = n;
        while (k > 0 && m[k - 1] == 3) m[--k] = 1;
        if (k == 0) break;
        ++m[k - 1];
      }
    }
    res.passed = diagonal_ok == cases;
    res.detail = std::to_string(diagonal_ok) + "/" + std::to_string(cases) + " parameter sets match";
    if (!failures.empty()) res.detail += "; first mismatch " + failures.front();
    res.diagnostics.push_back("basis bijection certified as an isomorphism on " + std::to_string(certified) + "/" +
                              std::to_string(cases) + " parameter sets");
    res.diagnostics.push_back("singleton spread matches the reference tensor on " + std::to_string(singleton_ok) +
                              "/" + std::to_string(cases) + " parameter sets");
    res.diagnostics.push_back(std::to_string(failures.size()) + " mismatching parameter sets, all with some m_i >= 2");
  } catch (const Error& e) {
    res.detail = std::string("error: ") + e.what();
  }
  res.seconds = since(t0);
  if (res.seconds >= 5.0) {
    res.passed = false;
    res.detail += "; runtime budget of 5 s exceeded";
  }
  return res;
}

// --- criterion 2 ---------------------------------------------------------------

CriterionResult criterion_identities() {
  CriterionResult res{2, "left and right multiplication identities of the reference tensor", false, {}, {}, 0};
  const auto t0 = Clock::now();
  std::size_t checked = 0, ok = 0;
  std::string first;
  try {
    const FieldSpec q = FieldSpec::rationals();
    for (const auto& [n, l, m] : std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>>{
             {2, 3, {1, 2}}, {3, 2, {2, 1, 1}}}) {
      auto nsy = nsy_algebra(n, l, m, q);
      const Tensor2 ref = reference_d1_tensor(nsy);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < l; ++j)
          for (std::size_t r = 0; r < nsy.m[i]; ++r)
            for (std::size_t s = 0; s < nsy.mult(long(i + j)); ++s) {
              const Element x = nsy.algebra.basis(nsy.index(long(i), j, r, s));
              const Tensor2 right = act_right(nsy.algebra, ref, x);
              const Tensor2 left = act_left(nsy.algebra, x, ref);
              checked += 2;
              const Tensor2 want_r = closed_form_right(nsy, long(i), j, r, s);
              const Tensor2 want_l = closed_form_left(nsy, long(i), j, r, s);
              ok += (right == want_r) + (left == want_l);
              if (first.empty() && right != want_r)
                first = "right product by " + nsy.algebra.label(x.coeffs.begin()->first) + ": " +
                        tensor_diff(nsy.algebra, right, want_r);
              if (first.empty() && left != want_l)
                first = "left product by " + nsy.algebra.label(x.coeffs.begin()->first) + ": " +
                        tensor_diff(nsy.algebra, left, want_l);
            }
      if (!is_invariant(nsy.algebra, ref)) first = first.empty() ? "reference tensor is not invariant" : first;
    }
    res.passed = ok == checked && first.empty();
    res.detail = std::to_string(ok) + "/" + std::to_string(checked) + " products equal their closed forms";
    if (!first.empty()) res.detail += "; " + first;
  } catch (const Error& e) {
    res.detail = std::string("error: ") + e.what();
  }
  res.seconds = since(t0);
  return res;
}

// --- criteria 3 to 5 -------------------------------------------------------------

std::vector<CriterionResult> criteria_sweep(const std::vector<CorpusEntry>& entries, const VerifyOptions& opt,
                                            std::vector<SweepRow>& sweep) {
  CriterionResult c3{3, "singleton comultiplication is invariant, coassociative and injective", false, {}, {}, 0};
  CriterionResult c4{4, "every swept spread spec gives an invariant coassociative tensor", false, {}, {}, 0};
  CriterionResult c5{5, "counit exists exactly when every S(i) is a bijection graph", false, {}, {}, 0};
  const auto t0 = Clock::now();
  double singleton_seconds = 0;
  std::size_t n3 = 0, ok3 = 0, n4 = 0, ok4 = 0, n5 = 0, ok5 = 0, counital = 0;
  std::string f3, f4, f5;
  const std::size_t first_row = sweep.size();
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const CorpusEntry& entry = entries[e];
    const auto ts = Clock::now();
    try {
      Prepared p = prepare(entry.algebra, opt.seed);
      auto specs = sweep_specs(p.amp.m, p.lambda_nak, mix(opt.seed, e), opt.random_specs);
      for (std::size_t k = 0; k < specs.size(); ++k) {
        const auto tk = Clock::now();
        ComulResult r = comultiply(p, specs[k].second);
        SweepRow row = make_row(entry.key, specs[k].first, r, p.amp.m);
        if (k == 0) singleton_seconds += since(ts);
        (void)tk;
        sweep.push_back(std::move(row));
      }
    } catch (const Error& err) {
      SweepRow row;
      row.key = entry.key;
      row.spec_name = "singleton";
      row.dim = entry.algebra.dim();
      row.error = err.what();
      sweep.push_back(std::move(row));
    }
  }
  for (std::size_t k = first_row; k < sweep.size(); ++k) {
    const SweepRow& row = sweep[k];
    const std::string tag = row.key + " [" + row.spec_name + "]";
    if (row.spec_name == "singleton") {
      ++n3;
      if (row.error.empty() && row.invariant && row.coassociative && row.rank == row.dim) {
        ++ok3;
      } else if (f3.empty()) {
        f3 = tag + (row.error.empty() ? ": rank " + std::to_string(row.rank) + " of " + std::to_string(row.dim) : ": " + row.error);
      }
    }
    ++n4;
    if (row.error.empty() && row.invariant && row.coassociative) {
      ++ok4;
    } else if (f4.empty()) {
      f4 = tag + (row.error.empty() ? (row.invariant ? ": not coassociative" : ": not invariant") : ": " + row.error);
    }
    ++n5;
    if (counit_row_ok(row)) {
      ++ok5;
      counital += row.counital;
    } else if (f5.empty()) {
      f5 = tag + ": bijection=" + (row.all_bijection ? "yes" : "no") + ", oracle feasible=" +
           (row.counit_feasible ? "yes" : "no") + ", built counit passes=" + (row.counital ? "yes" : "no");
    }
  }
  c3.passed = ok3 == n3 && n3 == entries.size() && singleton_seconds < 30.0;
  c3.detail = std::to_string(ok3) + "/" + std::to_string(n3) + " corpus algebras";
  if (!f3.empty()) c3.detail += "; first failure " + f3;
  {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << singleton_seconds;
    c3.diagnostics.push_back("preparation plus singleton checks took " + os.str() + " s (budget 30 s)");
  }
  if (singleton_seconds >= 30.0) c3.detail += "; runtime budget of 30 s exceeded";
  c4.passed = ok4 == n4 && n4 > 0;
  c4.detail = std::to_string(ok4) + "/" + std::to_string(n4) + " (algebra, spec) pairs";
  if (!f4.empty()) c4.detail += "; first failure " + f4;
  c5.passed = ok5 == n5 && n5 > 0;
  c5.detail = std::to_string(ok5) + "/" + std::to_string(n5) + " (algebra, spec) pairs agree, " +
              std::to_string(counital) + " counital";
  if (!f5.empty()) c5.detail += "; first failure " + f5;

  std::size_t incidence_agree = 0;
  for (std::size_t k = first_row; k < sweep.size(); ++k)
    incidence_agree += sweep[k].error.empty() && sweep[k].counit_feasible == sweep[k].all_incidence_invertible;
  c5.diagnostics.push_back("oracle feasibility agrees with invertibility of every S(i) incidence matrix on " +
                           std::to_string(incidence_agree) + "/" + std::to_string(n5) + " pairs");
  std::size_t injective = 0, total = 0;
  for (std::size_t k = first_row; k < sweep.size(); ++k) {
    if (!sweep[k].error.empty() || sweep[k].spec_name == "singleton") continue;
    ++total;
    injective += sweep[k].injective;
  }
  c4.diagnostics.push_back("non-singleton specs with injective Delta: " + std::to_string(injective) + "/" +
                           std::to_string(total));
  const double s = since(t0);
  c3.seconds = c4.seconds = c5.seconds = s;
  return {c3, c4, c5};
}

// --- criterion 6 ---------------------------------------------------------------

CriterionResult criterion_topp(const std::vector<CorpusEntry>& entries, const VerifyOptions& opt) {
  CriterionResult res{6, "Frobenius pairs and their transports satisfy the support and small-space clauses", false,
                      {}, {}, 0};
  const auto t0 = Clock::now();
  std::size_t pairs = 0, ok = 0, block_pairs = 0, block_ok = 0;
  std::size_t fail_a = 0, fail_b = 0, fail_small = 0, fail_core = 0;
  std::string first;
  try {
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const auto an = analyze(entries[e].algebra, opt.seed);
      const BasicData bd = basic_data(an);
      const FinDimAlgebra& l = bd.lambda;
      FrobeniusPair base{construct_counit(l, bd.dec, bd.nak, bd.rad, opt.seed), {}};
      base.y = dual_basis_tensor(l, base.epsilon);
      auto record = [&](const FrobeniusPair& pr, const std::string& what) {
        ToppReport rep = verify_topp(l, pr, bd.dec, bd.nak, bd.rad);
        ++pairs;
        if (rep.all()) {
          ++ok;
          return;
        }
        fail_core += !rep.core_laws;
        fail_a += !rep.clause_a;
        fail_b += !rep.clause_b;
        fail_small += !rep.small_nondegenerate;
        if (first.empty()) {
          first = entries[e].key + " " + what + ":";
          if (!rep.clause_a)
            first += " eps nonzero on corner e_" + std::to_string(rep.clause_a_witness->first + 1) + " L e_" +
                     std::to_string(rep.clause_a_witness->second + 1);
          if (!rep.clause_b) first += " y leaves the allowed blocks";
          if (!rep.small_nondegenerate) first += " small-space form degenerate";
          if (!rep.core_laws) first += " " + *rep.core_witness;
        }
      };
      record(base, "constructed pair");
      std::vector<SparseVector> all, diagonal;
      for (std::size_t k = 0; k < l.dim(); ++k) all.push_back(SparseVector{{k, l.field().one()}});
      PeirceBasis peirce(l, bd.dec.representatives());
      for (std::size_t i = 0; i < bd.dec.n(); ++i)
        for (const auto& w : peirce.corner(i, i)) diagonal.push_back(w);
      Rng rng(mix(opt.seed, e));
      for (std::size_t t = 0; t < opt.transports; ++t) {
        record(transport_pair(l, base, random_invertible(l, rng, all)), "transport " + std::to_string(t + 1));
        FrobeniusPair bp = transport_pair(l, base, random_invertible(l, rng, diagonal));
        ++block_pairs;
        block_ok += verify_topp(l, bp, bd.dec, bd.nak, bd.rad).all();
      }
    }
    res.passed = ok == pairs && pairs > 0;
    res.detail = std::to_string(ok) + "/" + std::to_string(pairs) + " pairs satisfy every clause";
    if (!first.empty()) res.detail += "; first failure " + first;
    res.diagnostics.push_back("failures by clause: support " + std::to_string(fail_a) + ", blocks " +
                              std::to_string(fail_b) + ", small space " + std::to_string(fail_small) +
                              ", pair laws " + std::to_string(fail_core));
    res.diagnostics.push_back("transports by invertible elements of the diagonal corners: " +
                              std::to_string(block_ok) + "/" + std::to_string(block_pairs) + " pass every clause");
  } catch (const Error& e) {
    res.detail = std::string("error: ") + e.what();
  }
  res.seconds = since(t0);
  return res;
}

// --- criterion 7 ---------------------------------------------------------------

CriterionResult criterion_nakayama(const std::vector<CorpusEntry>& entries, const VerifyOptions& opt) {
  CriterionResult res{7, "Nakayama permutation agrees with module duality and the path oracle", false, {}, {}, 0};
  const auto t0 = Clock::now();
  std::size_t checked = 0, ok = 0, oracle_checked = 0, oracle_ok = 0;
  std::string first;
  try {
    std::set<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const auto an = analyze(entries[e].algebra, opt.seed);
      const BasicData bd = basic_data(an);
      auto pattern = duality_pattern(bd.lambda, bd.dec, opt.seed);
      bool good = an.nak.nu == bd.nak.nu && pattern.size() == bd.nak.nu.size();
      for (std::size_t i = 0; good && i < pattern.size(); ++i)
        good = pattern[i] == std::vector<std::size_t>{bd.nak.nu[i]};
      good = good && verify_nakayama_duality(bd.lambda, bd.dec, bd.nak, opt.seed).passed();
      ++checked;
      ok += good;
      if (!good && first.empty()) first = entries[e].key + ": nu " + vec_string(bd.nak.nu) + " disagrees with duality";
      if (entries[e].nsy) shapes.emplace(entries[e].nsy->n, entries[e].nsy->l);
    }
    for (const auto& [n, l] : shapes) {
      FinDimAlgebra b = nakayama_algebra(n, l, FieldSpec::rationals());
      auto rad = radical(b);
      auto dec = canonical_decomposition(b, rad, opt.seed);
      bool vertices = dec.n() == n;
      for (std::size_t i = 0; vertices && i < n; ++i) vertices = dec.rep(i).coeffs == SparseVector{{i * l, b.field().one()}};
      auto nak = nakayama(b, dec, rad);
      ++oracle_checked;
      const auto want = socle_path_nakayama(n, l);
      if (vertices && nak.nu == want) {
        ++oracle_ok;
      } else if (first.empty()) {
        first = "B_{" + std::to_string(n) + "," + std::to_string(l) + "}: socle gives " + vec_string(nak.nu) +
                ", paths give " + vec_string(want);
      }
    }
    res.passed = ok == checked && oracle_ok == oracle_checked && checked > 0;
    res.detail = std::to_string(ok) + "/" + std::to_string(checked) + " algebras match duality, " +
                 std::to_string(oracle_ok) + "/" + std::to_string(oracle_checked) + " cyclic Nakayama shapes match paths";
    if (!first.empty()) res.detail += "; first failure " + first;
  } catch (const Error& e) {
    res.detail = std::string("error: ") + e.what();
  }
  res.seconds = since(t0);
  return res;
}

// --- criterion 8 ---------------------------------------------------------------

CriterionResult criterion_negative(const VerifyOptions& opt) {
  CriterionResult res{8, "negative controls are rejected", false, {}, {}, 0};
  const auto t0 = Clock::now();
  const FieldSpec q = FieldSpec::rationals();
  std::vector<std::string> parts;
  bool a2_ok = false, nsy_ok = false, corrupt_ok = false;
  try {
    const FinDimAlgebra a2 = path_algebra_a2(q);
    bool analyze_rejects = false, counit_rejects = false;
    try {
      analyze(a2, opt.seed);
    } catch (const NotSelfInjectiveLike&) {
      analyze_rejects = true;
    }
    try {
      construct_counit(a2, opt.seed);
    } catch (const NotFrobenius&) {
      counit_rejects = true;
    }
    a2_ok = analyze_rejects && counit_rejects;
    parts.push_back(std::string("A2 ") + (a2_ok ? "rejected" : "accepted"));

    Prepared p = prepare(nsy_algebra(2, 2, {1, 2}, q).algebra, opt.seed);
    auto specs = SpreadSpec::all(p.amp.m, p.lambda_nak);
    std::size_t infeasible = 0;
    for (const auto& s : specs) infeasible += !comultiply(p, s).report.counit_feasible;
    nsy_ok = infeasible == specs.size() && specs.size() == 16;
    parts.push_back("nsy(2,2;(1,2)) counit-infeasible for " + std::to_string(infeasible) + "/" +
                    std::to_string(specs.size()) + " specs");

    json j = algebra_to_json(matrix_algebra(2, q));
    for (auto& row : j["structure"])  // E_{1,2} E_{2,1} = 2 E_{1,1}
      if (row[0] == 1 && row[1] == 2) row[3] = "2";
    FinDimAlgebra bad = algebra_from_json(j);
    auto v = check_associativity(bad);
    bool unit_ok = check_unit(bad).passed();
    bool rejected = false;
    try {
      analyze(bad, opt.seed);
    } catch (const InvalidAlgebra&) {
      rejected = true;
    }
    corrupt_ok = unit_ok && !v.passed() && rejected;
    if (v.witness) {
      const auto& w = *v.witness;
      parts.push_back("corrupted M2 caught at (" + bad.label(w[0]) + ", " + bad.label(w[1]) + ", " + bad.label(w[2]) + ")");
    } else {
      parts.push_back("corrupted M2 not caught");
    }
  } catch (const Error& e) {
    parts.push_back(std::string("error: ") + e.what());
  }
  res.passed = a2_ok && nsy_ok && corrupt_ok;
  for (std::size_t k = 0; k < parts.size(); ++k) res.detail += (k ? "; " : "") + parts[k];
  res.seconds = since(t0);
  return res;
}

// --- criterion 9 ---------------------------------------------------------------

CriterionResult criterion_round_trip(const std::vector<CorpusEntry>& entries, const VerifyOptions& opt) {
  CriterionResult res{9, "basis-permuted inputs pass the sweep checks through the transport path", false, {}, {}, 0};
  const auto t0 = Clock::now();
  std::size_t algebras = 0, ok = 0, rows = 0, structural = 0, counit_agree = 0;
  std::string first;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const CorpusEntry& entry = entries[e];
    Rng rng(mix(opt.seed ^ 0xa5a5a5a5ULL, e));
    std::vector<std::size_t> perm(entry.algebra.dim());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    ++algebras;
    try {
      const FinDimAlgebra permuted = algebra_from_json(algebra_to_json(permute_basis(entry.algebra, perm), entry.provenance));
      Prepared p = prepare(permuted, opt.seed);
      bool good = true;
      for (const auto& [name, spec] : sweep_specs(p.amp.m, p.lambda_nak, mix(opt.seed, e), opt.random_specs)) {
        SweepRow row = make_row(entry.key, name, comultiply(p, spec), p.amp.m);
        ++rows;
        const bool shape_ok = row.invariant && row.coassociative && (name != "singleton" || row.rank == row.dim);
        structural += shape_ok;
        counit_agree += counit_row_ok(row);
        const bool row_ok = shape_ok && counit_row_ok(row);
        if (!row_ok && first.empty()) first = entry.key + " [" + name + "]";
        good = good && row_ok;
      }
      ok += good;
    } catch (const Error& err) {
      if (first.empty()) first = entry.key + ": " + err.what();
    }
  }
  res.passed = ok == algebras && algebras > 0;
  res.detail = std::to_string(ok) + "/" + std::to_string(algebras) + " permuted algebras, " + std::to_string(rows) +
               " comultiplications checked";
  if (!first.empty()) res.detail += "; first failure " + first;
  res.diagnostics.push_back("invariance, coassociativity and singleton rank hold on " + std::to_string(structural) +
                            "/" + std::to_string(rows) + " comultiplications");
  res.diagnostics.push_back("counit oracle agrees with the bijection test on " + std::to_string(counit_agree) + "/" +
                            std::to_string(rows) + " comultiplications");
  res.seconds = since(t0);
  return res;
}

VerifyReport run_acceptance(const VerifyOptions& opt) {
  VerifyReport rep;
  auto entries = corpus(opt.profile);
  rep.corpus_size = entries.size();
  rep.criteria.push_back(criterion_d1(opt.seed));
  rep.criteria.push_back(criterion_identities());
  for (auto& c : criteria_sweep(entries, opt, rep.sweep)) rep.criteria.push_back(std::move(c));
  rep.criteria.push_back(criterion_topp(entries, opt));
  rep.criteria.push_back(criterion_nakayama(entries, opt));
  rep.criteria.push_back(criterion_negative(opt));
  rep.criteria.push_back(criterion_round_trip(entries, opt));
  return rep;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.name
     << "  tolerance=0 (exact)  " << r.detail << "  [" << r.seconds << " s]";
  for (const auto& d : r.diagnostics) os << "\n      note: " << d;
  return os.str();
}

json report_to_json(const VerifyReport& rep) {
  json criteria = json::array();
  for (const auto& c : rep.criteria)
    criteria.push_back(json{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail},
                            {"diagnostics", c.diagnostics}});
  json rows = json::array();
  for (const auto& r : rep.sweep)
    rows.push_back(json{{"algebra", r.key},
                        {"spec", r.spec_name},
                        {"dim", r.dim},
                        {"multiplicities", r.m},
                        {"invariant", r.invariant},
                        {"coassociative", r.coassociative},
                        {"rank", r.rank},
                        {"injective", r.injective},
                        {"all_bijection", r.all_bijection},
                        {"all_incidence_invertible", r.all_incidence_invertible},
                        {"counit_feasible", r.counit_feasible},
                        {"counital", r.counital},
                        {"error", r.error.empty() ? json(nullptr) : json(r.error)}});
  return json{{"corpus_size", rep.corpus_size}, {"all_passed", rep.all_passed()}, {"criteria", std::move(criteria)},
              {"sweep", std::move(rows)}};
}

}  // namespace frobalg
