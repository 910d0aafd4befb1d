#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "frobalg/errors.hpp"
#include "frobalg/families.hpp"
#include "frobalg/io.hpp"
#include "frobalg/pipeline.hpp"
#include "frobalg/verification.hpp"
#include "test_support.hpp"

using namespace frobalg;
using nlohmann::json;
using frobalg::testing::kSeed;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::size_t nsy_dim(std::size_t n, std::size_t l, const std::vector<std::size_t>& m) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < l; ++k) d += m[i] * m[(i + k) % n];
  return d;
}

}  // namespace

TEST_CASE("family dimensions") {
  CHECK(nsy_algebra(2, 2, {1, 2}, Q).algebra.dim() == 9);
  for (auto [n, l] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 3}, {3, 2}})
    for (const auto& m : {std::vector<std::size_t>{1, 2, 3}, std::vector<std::size_t>{3, 1, 2}}) {
      std::vector<std::size_t> mm(m.begin(), m.begin() + static_cast<long>(n));
      CHECK(nsy_algebra(n, l, mm, Q).algebra.dim() == nsy_dim(n, l, mm));
    }
  CHECK(nakayama_algebra(3, 2, Q).dim() == 6);
  CHECK(matrix_algebra(3, Q).dim() == 9);
  CHECK(group_algebra({2, 3}, Q).dim() == 6);
  CHECK(group_algebra({2, 3}, Q).label(4) == "g1*g2");
  CHECK(truncated_polynomial(4, Q).label(3) == "x^3");
  CHECK(path_algebra_a2(Q).labels() == std::vector<std::string>{"e1", "e2", "a"});
}

TEST_CASE("nsy index and reference tensor") {
  auto nsy = nsy_algebra(2, 2, {1, 2}, Q);
  CHECK(nsy.algebra.label(nsy.index(1, 1, 1, 0)) == "X_{1,1}^{1,0}");
  CHECK(nsy.index(3, 0, 0, 0) == nsy.index(1, 0, 0, 0));
  CHECK_THROWS_AS(nsy.index(0, 2, 0, 0), IndexOutOfRange);
  CHECK_THROWS_AS(nsy.index(0, 0, 1, 0), IndexOutOfRange);
  Tensor2 ref = reference_d1_tensor(nsy);
  CHECK(is_invariant(nsy.algebra, ref).passed());
  CHECK(check_coassociativity(nsy.algebra, ref).passed());
}

TEST_CASE("generate_family validates parameters") {
  CHECK_THROWS_AS(generate_family({"nsy", 2, 2, {1}, {}, Q}), BadParams);
  CHECK_THROWS_AS(generate_family({"nsy", 0, 2, {}, {}, Q}), BadParams);
  CHECK_THROWS_AS(generate_family({"bogus", 1, 1, {1}, {}, Q}), BadParams);
  CHECK_THROWS_AS(corpus("huge"), BadParams);
  auto e = generate_family({"nsy", 2, 2, {1, 2}, {}, Q});
  CHECK(e.key == "nsy(2,2;1,2)");
  CHECK(e.nsy.has_value());
  CHECK(generate_family({"group", 1, 1, {}, {2}, FieldSpec::prime(2)}).key.find("@GF(2)") != std::string::npos);
}

TEST_CASE("corpus profiles") {
  auto small = corpus("small");
  auto standard = corpus("standard");
  CHECK(small.size() == 13);
  CHECK(standard.size() == 85);
  std::size_t max_dim = 0, nsy = 0;
  for (const auto& e : standard) {
    max_dim = std::max(max_dim, e.algebra.dim());
    nsy += e.nsy.has_value();
  }
  CHECK(max_dim == 81);
  CHECK(nsy == 81);
  CHECK(std::is_sorted(standard.begin(), standard.end(),
                       [](const CorpusEntry& a, const CorpusEntry& b) { return a.key < b.key; }));
}

TEST_CASE("algebra JSON round trip is exact") {
  for (const auto& a : {nsy_algebra(2, 3, {2, 1}, Q).algebra, group_algebra({3}, FieldSpec::prime(3)),
                        matrix_algebra(2, FieldSpec::prime(7))}) {
    json j = algebra_to_json(a, json{{"family", "test"}});
    FinDimAlgebra b = algebra_from_json(j);
    CHECK(b.field() == a.field());
    CHECK(b.labels() == a.labels());
    CHECK(b.unit() == a.unit());
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < a.dim(); ++y) CHECK(b.product(x, y) == a.product(x, y));
    CHECK(algebra_to_json(b, json{{"family", "test"}}) == j);
    CHECK(json::parse(j.dump()) == j);
  }
}

TEST_CASE("malformed JSON is rejected") {
  json good = algebra_to_json(truncated_polynomial(2, Q));
  json bad = good;
  bad["structure"].push_back(json::array({0, 0}));
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
  bad = good;
  bad["structure"].push_back(json::array({0, 0, 9, "1"}));
  CHECK_THROWS_AS(algebra_from_json(bad), DimensionMismatch);
  bad = good;
  bad["field"] = "complex";
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
  CHECK_THROWS_AS(field_from_json(json{{"prime", "8"}}), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/algebra.json"), ParseError);
  CHECK_THROWS_AS(spec_from_json(json{{"classes", json::array({json{{"i", 3}, {"pairs", json::array()}}})}}, 2),
                  IndexOutOfRange);
}

TEST_CASE("tensor, functional and spec JSON round trips") {
  const FieldSpec f5 = FieldSpec::prime(5);
  Tensor2 t(3);
  t.add(0, 2, f5(3));
  t.add(1, 1, f5(4));
  CHECK(tensor_from_json(tensor_to_json(t), f5, 3) == t);
  Functional f(Q, std::vector<Scalar>{Q(mpq_class(1, 3)), Q(0), Q(-2)});
  CHECK(functional_from_json(functional_to_json(f), Q) == f);

  SpreadSpec spec;
  spec.pairs = {{{1, 1}, {2, 2}}, {}, {{1, 3}}};
  json j = spec_to_json(spec);
  CHECK(j["classes"][0]["i"] == 1);
  CHECK(spec_from_json(j, 3) == spec);
}

TEST_CASE("file round trip") {
  auto path = std::filesystem::temp_directory_path() / "frobalg_io_test.json";
  json j = algebra_to_json(nsy_algebra(1, 2, {2}, Q).algebra);
  write_json_file(path, j);
  CHECK(read_json_file(path) == j);
  std::filesystem::remove(path);
}

TEST_CASE("analysis JSON is deterministic and one-based") {
  auto a = nsy_algebra(2, 2, {1, 2}, Q).algebra;
  json j1 = analysis_to_json(analyze(a, kSeed));
  json j2 = analysis_to_json(analyze(a, kSeed));
  CHECK(j1 == j2);
  CHECK(j1["n"] == 2);
  CHECK(j1["radical_dim"] == 4);
  CHECK(j1["nakayama"] == json::array({2, 1}));
  CHECK(j1["multiplicities"] == json::array({1, 2}));

  json m2 = analysis_to_json(analyze(matrix_algebra(2, Q), kSeed));
  CHECK(m2["multiplicities"] == json::array({2}));
  CHECK(m2["nakayama"] == json::array({1}));
}

TEST_CASE("comultiplication JSON for M_2 with the diagonal spec") {
  auto p = prepare(matrix_algebra(2, Q), kSeed);
  auto r = comultiply(p, preset("diagonal", p.amp.m, p.lambda_nak));
  json j = comul_to_json(p, r);
  CHECK(j["counital"] == true);
  CHECK(j["invariant"] == true);
  CHECK(j["coassociative"] == true);
  CHECK(j["injective"] == true);
  CHECK(j["counit"] == json::array({"1", "0", "0", "1"}));
  CHECK_FALSE(theorem_violation(r));
  CHECK_THROWS_AS(preset("sideways", p.amp.m, p.lambda_nak), BadParams);
}

TEST_CASE("pipeline errors") {
  CHECK_THROWS_AS(prepare(path_algebra_a2(Q), kSeed), NotSelfInjectiveLike);
  FinDimAlgebra bad = matrix_algebra(2, Q);
  bad.mutable_product(1, 2) = SparseVector{{0, Q(2)}};
  CHECK_THROWS_AS(analyze(bad, kSeed), InvalidAlgebra);
}

TEST_CASE("permute_basis validates its permutation") {
  auto a = truncated_polynomial(3, Q);
  CHECK_THROWS_AS(permute_basis(a, {0, 0, 1}), BadParams);
  auto b = permute_basis(a, {2, 0, 1});
  CHECK(check_associativity(b).passed());
  CHECK(check_unit(b).passed());
}

TEST_CASE("verification criteria that hold on small inputs") {
  VerifyOptions opt;
  opt.profile = "small";
  CHECK(criterion_identities().passed);
  CHECK(criterion_negative(opt).passed);
  auto entries = corpus("small");
  CHECK(criterion_nakayama(entries, opt).passed);
  // The counit clause of the round trip fails on mixed multiplicities; the
  // structural clause must hold everywhere.
  auto rt = criterion_round_trip(entries, opt);
  REQUIRE_FALSE(rt.diagnostics.empty());
  const std::string& structural = rt.diagnostics.front();
  auto slash = structural.rfind('/');
  auto space = structural.rfind(' ', slash);
  auto end = structural.find(' ', slash);
  CHECK(structural.substr(space + 1, slash - space - 1) == structural.substr(slash + 1, end - slash - 1));
}
