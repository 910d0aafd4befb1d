#include "frobalg/pipeline.hpp"

#include <algorithm>

#include "frobalg/errors.hpp"
#include "frobalg/io.hpp"

namespace frobalg {

using nlohmann::json;

namespace {

SparseVector embed(const BasicReduction& br, const SparseVector& v) {
  SparseVector out;
  for (const auto& [q, c] : v) axpy(out, c, br.embedding[q]);
  return out;
}

json element_json(const FinDimAlgebra& a, const Element& e) {
  json out = json::array();
  for (std::size_t k = 0; k < a.dim(); ++k) out.push_back(a.field().coerce(e.coeff(k)).to_string());
  return out;
}

json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

}  // namespace

Analysis analyze(const FinDimAlgebra& a, std::uint64_t seed) {
  if (auto v = check_unit(a); !v) {
    throw InvalidAlgebra("unit check fails at basis vector " + std::to_string(*v.witness) + " (" +
                         a.label(*v.witness) + ")");
  }
  if (auto v = check_associativity(a); !v) {
    const auto& w = *v.witness;
    throw InvalidAlgebra("associativity fails at (" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " +
                         std::to_string(w[2]) + ")");
  }
  Analysis an;
  an.algebra = a;
  an.rad = radical(a);
  an.dec = canonical_decomposition(a, an.rad, seed);
  an.nak = nakayama(a, an.dec, an.rad);
  an.basic = basic_reduction(a, an.dec);
  return an;
}

json analysis_to_json(const Analysis& an) {
  json idempotents = json::array();
  for (const auto& cls : an.dec.classes) {
    json c = json::array();
    for (const auto& e : cls) c.push_back(element_json(an.algebra, e));
    idempotents.push_back(std::move(c));
  }
  return json{{"dim", an.algebra.dim()},
              {"n", an.dec.n()},
              {"multiplicities", an.dec.multiplicities()},
              {"nakayama", one_based(an.nak.nu)},
              {"idempotents", std::move(idempotents)},
              {"radical_dim", an.rad.dim},
              {"radical_method", an.rad.method},
              {"nilpotency_index", an.rad.nilpotency_index},
              {"flags", an.dec.flags()},
              {"basic_reduction",
               {{"dim", an.basic.lambda.dim()}, {"identity", an.basic.identity}, {"basis", an.basic.lambda.labels()}}}};
}

Prepared prepare(const FinDimAlgebra& a, std::uint64_t seed) { return prepare(analyze(a, seed), seed); }

Prepared prepare(Analysis an, std::uint64_t seed) {
  if (!an.dec.split_certified) {
    throw NotSplitUnverified("the decomposition is not certified split; comultiplications are not constructed");
  }
  Prepared p;
  p.analysis = std::move(an);
  const FinDimAlgebra& a = p.analysis.algebra;
  const BasicReduction& br = p.analysis.basic;
  const FinDimAlgebra& lambda = br.lambda;
  const FieldSpec field = a.field();

  p.lambda_rad = br.identity ? p.analysis.rad : radical(lambda);
  try {
    p.lambda_nak = br.identity ? p.analysis.nak : nakayama(lambda, br.decomposition, p.lambda_rad);
  } catch (const NotSelfInjectiveLike& e) {
    throw NotFrobenius(std::string("basic algebra: ") + e.what());
  }
  p.pair.epsilon = construct_counit(lambda, br.decomposition, p.lambda_nak, p.lambda_rad, seed);
  p.pair.y = dual_basis_tensor(lambda, p.pair.epsilon);
  p.amp = amplify(lambda, br.decomposition, p.analysis.dec.multiplicities());
  p.witnesses = iso_witnesses(a, p.analysis.dec, seed);

  // Phi(phi^{t<-s}_{j<-i}) = v_{jt} phi u_{is}
  const std::size_t d = p.amp.algebra.dim();
  if (d != a.dim()) throw InvalidAlgebra("amplified model has dimension " + std::to_string(d) + ", input has " + std::to_string(a.dim()));
  for (const AmpIndex& x : p.amp.index) {
    const SparseVector phi = embed(br, p.amp.corners.corner(x.target, x.source)[x.b]);
    p.phi.push_back(multiply(a, multiply(a, p.witnesses.v[x.target][x.t - 1].coeffs, phi),
                             p.witnesses.u[x.source][x.s - 1].coeffs));
  }
  Matrix m(field, d, d);
  for (std::size_t x = 0; x < d; ++x)
    for (const auto& [k, c] : p.phi[x]) m(k, x) = c;
  try {
    p.phi_inverse = invert(m);
  } catch (const SingularMatrix&) {
    throw InvalidAlgebra("transport map to the amplified model is not bijective");
  }
  auto image = [&](const SparseVector& v) {
    SparseVector out;
    for (const auto& [k, c] : v) axpy(out, c, p.phi[k]);
    return out;
  };
  if (image(p.amp.algebra.unit().coeffs) != a.unit().coeffs) {
    throw InvalidAlgebra("transport map does not preserve the unit");
  }
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      if (multiply(a, p.phi[x], p.phi[y]) != image(p.amp.algebra.product(x, y))) {
        throw InvalidAlgebra("transport map is not multiplicative at " + p.amp.algebra.label(x) + " * " +
                             p.amp.algebra.label(y));
      }
  return p;
}

SpreadSpec preset(const std::string& name, const std::vector<std::size_t>& m, const NakayamaData& nak) {
  if (name == "singleton") return SpreadSpec::singleton(m.size());
  if (name == "diagonal") return SpreadSpec::diagonal(m, nak);
  if (name == "full") return SpreadSpec::full(m, nak);
  throw BadParams("unknown preset '" + name + "'");
}

Tensor2 transport(const Prepared& p, const Tensor2& model_x) {
  Tensor2 out(p.analysis.algebra.dim());
  for (const auto& [ab, c] : model_x.coeffs)
    for (const auto& [k1, c1] : p.phi[ab.first])
      for (const auto& [k2, c2] : p.phi[ab.second]) out.add(k1, k2, c * c1 * c2);
  return out;
}

Functional transport_functional(const Prepared& p, const Functional& model_eps) {
  const std::size_t d = p.analysis.algebra.dim();
  Functional out(p.analysis.algebra.field(), d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t k = 0; k < d; ++k)
      if (!p.phi_inverse(k, a).is_zero()) out.coeffs[a] += p.phi_inverse(k, a) * model_eps.coeffs[k];
  return out;
}

ComulResult comultiply(const Prepared& p, const SpreadSpec& spec) {
  ComulResult r;
  r.spec = spec;
  r.spec.normalize(p.amp.m, p.lambda_nak);
  r.model_x = spread(p.amp, p.pair.y, r.spec, p.lambda_nak);
  Tensor2 x = transport(p, r.model_x);
  auto bij = is_bijection_graph(r.spec, p.amp.m, p.lambda_nak);
  const bool all = std::all_of(bij.begin(), bij.end(), [](bool b) { return b; });
  std::optional<Functional> candidate;
  if (all) candidate = transport_functional(p, build_counit(p.amp, r.spec, p.lambda_nak, p.pair.epsilon));
  r.report = assess(p.analysis.algebra, x, candidate);
  r.report.bijection = std::move(bij);
  r.report.all_bijection = all;
  auto inc = is_invertible_incidence(r.spec, p.amp.m, p.lambda_nak, p.analysis.algebra.field());
  r.report.all_incidence_invertible = std::all_of(inc.begin(), inc.end(), [](bool b) { return b; });
  return r;
}

bool theorem_violation(const ComulResult& r) {
  return !r.report.invariant.passed() || !r.report.coassociative.passed() || !r.report.counit_paths_agree();
}

json comul_to_json(const Prepared& p, const ComulResult& r) {
  const auto& rep = r.report;
  const FinDimAlgebra& a = p.analysis.algebra;
  json inv_w = nullptr, coassoc_w = nullptr;
  if (rep.invariant.witness) inv_w = a.label(*rep.invariant.witness);
  if (rep.coassociative.witness) coassoc_w = *rep.coassociative.witness;
  std::vector<bool> bij = rep.bijection;
  return json{{"dim", rep.dim},
              {"multiplicities", p.amp.m},
              {"nakayama", one_based(p.lambda_nak.nu)},
              {"spec", spec_to_json(r.spec)},
              {"pair", pair_to_json(p.pair)},
              {"x", tensor_to_json(rep.x)},
              {"invariant", rep.invariant.passed()},
              {"invariant_witness", inv_w},
              {"coassociative", rep.coassociative.passed()},
              {"coassociative_witness", coassoc_w},
              {"rank", rep.rank},
              {"injective", rep.injective},
              {"bijection", bij},
              {"all_bijection", rep.all_bijection},
              {"all_incidence_invertible", rep.all_incidence_invertible},
              {"counital", rep.counital},
              {"counit", rep.counit ? functional_to_json(*rep.counit) : json(nullptr)},
              {"counit_feasible", rep.counit_feasible},
              {"counit_solution_dim", rep.counit_solution_dim},
              {"counit_paths_agree", rep.counit_paths_agree()}};
}

}  // namespace frobalg
