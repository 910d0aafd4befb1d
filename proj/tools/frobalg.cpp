#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frobalg/errors.hpp"
#include "frobalg/io.hpp"
#include "frobalg/verification.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 consistent, 1 operational error, 2 theorem-violating finding.
constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kFinding = 2;

struct Config {
  std::string input;
  std::string family;
  std::size_t n = 1, l = 1;
  std::string m;
  std::string factors;
  unsigned long prime = 0;
  bool rational = false;
  std::string spec_path;
  std::string preset = "singleton";
  std::uint64_t seed = frobalg::kDefaultSeed;
  std::string profile = "small";
  std::string output;
  std::string report;
};

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw frobalg::BadParams(std::string("bad entry '") + item + "' in --" + what);
    }
  }
  return out;
}

frobalg::FieldSpec field_of(const Config& c) {
  if (c.prime != 0 && c.rational) throw frobalg::BadParams("--prime and --rational are exclusive");
  return c.prime != 0 ? frobalg::FieldSpec::prime(c.prime) : frobalg::FieldSpec::rationals();
}

frobalg::CorpusEntry family_entry(const Config& c) {
  frobalg::FamilyParams p;
  p.family = c.family;
  p.n = c.n;
  p.l = c.l;
  p.m = parse_list(c.m, "m");
  p.factors = parse_list(c.factors, "factors");
  p.field = field_of(c);
  if (p.family == "nsy" && p.m.empty()) p.m.assign(p.n, 1);
  return frobalg::generate_family(p);
}

/// The algebra named by --input or by the family flags.
frobalg::CorpusEntry load(const Config& c) {
  if (!c.input.empty() && !c.family.empty()) throw frobalg::BadParams("give either --input or --family");
  if (!c.input.empty()) {
    json j = frobalg::read_json_file(c.input);
    frobalg::CorpusEntry e;
    e.key = std::filesystem::path(c.input).filename().string();
    e.algebra = frobalg::algebra_from_json(j);
    if (j.contains("provenance")) e.provenance = j["provenance"];
    return e;
  }
  if (!c.family.empty()) return family_entry(c);
  throw frobalg::BadParams("no algebra given: use --input FILE or --family NAME");
}

void emit(const Config& c, const json& j) {
  if (c.output.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    frobalg::write_json_file(c.output, j);
  }
}

int cmd_generate(const Config& c) {
  if (c.family.empty()) throw frobalg::BadParams("generate needs --family");
  auto e = family_entry(c);
  emit(c, frobalg::algebra_to_json(e.algebra, e.provenance));
  return kOk;
}

int cmd_analyze(const Config& c) {
  auto e = load(c);
  emit(c, frobalg::analysis_to_json(frobalg::analyze(e.algebra, c.seed)));
  return kOk;
}

int cmd_comul(const Config& c) {
  auto e = load(c);
  auto p = frobalg::prepare(e.algebra, c.seed);
  frobalg::SpreadSpec spec = c.spec_path.empty()
                                 ? frobalg::preset(c.preset, p.amp.m, p.lambda_nak)
                                 : frobalg::spec_from_json(frobalg::read_json_file(c.spec_path), p.amp.n());
  auto r = frobalg::comultiply(p, spec);
  emit(c, frobalg::comul_to_json(p, r));
  if (frobalg::theorem_violation(r)) {
    const auto& rep = r.report;
    std::cerr << "finding: ";
    if (!rep.invariant.passed()) {
      std::cerr << "x is not invariant under " << e.algebra.label(*rep.invariant.witness) << "\n";
    } else if (!rep.coassociative.passed()) {
      const auto& w = *rep.coassociative.witness;
      std::cerr << "coassociativity fails at (" << w[0] << ", " << w[1] << ", " << w[2] << ")\n";
    } else {
      std::cerr << "counit " << (rep.counit_feasible ? "exists" : "does not exist") << " although S "
                << (rep.all_bijection ? "is" : "is not") << " a bijection graph in every class; spec "
                << frobalg::spec_to_json(r.spec).dump() << "\n";
    }
    return kFinding;
  }
  return kOk;
}

void print_table(const std::vector<frobalg::SweepRow>& rows) {
  struct Summary {
    std::size_t dim = 0, specs = 0, structural = 0, counit_agree = 0;
    std::string error;
  };
  std::map<std::string, Summary> by_key;
  for (const auto& r : rows) {
    auto& s = by_key[r.key];
    s.dim = r.dim;
    if (!r.error.empty()) {
      s.error = r.error;
      continue;
    }
    ++s.specs;
    s.structural += r.invariant && r.coassociative && (r.spec_name != "singleton" || r.rank == r.dim);
    s.counit_agree += r.counit_feasible == r.all_bijection && (!r.all_bijection || r.counital);
  }
  std::cout << std::left << std::setw(28) << "algebra" << std::setw(6) << "dim" << std::setw(7) << "specs"
            << std::setw(12) << "structure" << "counit test\n";
  for (const auto& [key, s] : by_key) {
    std::cout << std::left << std::setw(28) << key << std::setw(6) << s.dim;
    if (!s.error.empty()) {
      std::cout << "error: " << s.error << "\n";
      continue;
    }
    std::cout << std::setw(7) << s.specs << std::setw(12)
              << (std::to_string(s.structural) + "/" + std::to_string(s.specs))
              << (std::to_string(s.counit_agree) + "/" + std::to_string(s.specs)) << "\n";
  }
}

int cmd_verify(const Config& c) {
  frobalg::VerifyOptions opt;
  opt.profile = c.profile;
  opt.seed = c.seed;
  frobalg::VerifyReport rep;
  if (!c.input.empty() || !c.family.empty()) {
    auto e = load(c);
    frobalg::analyze(e.algebra, c.seed);  // surfaces invalid input with its witness
    rep.corpus_size = 1;
    for (auto& r : frobalg::criteria_sweep({e}, opt, rep.sweep)) rep.criteria.push_back(std::move(r));
  } else {
    rep = frobalg::run_acceptance(opt);
  }
  print_table(rep.sweep);
  std::cout << "\n";
  for (const auto& r : rep.criteria) std::cout << frobalg::format_result(r) << "\n";
  if (!c.report.empty()) frobalg::write_json_file(c.report, frobalg::report_to_json(rep));
  for (const auto& r : rep.criteria) {
    if (!r.passed) {
      std::cerr << "first failure: criterion " << r.id << ": " << r.detail << "\n";
      return kFinding;
    }
  }
  return kOk;
}

void add_algebra_flags(CLI::App* cmd, Config& c) {
  cmd->add_option("--input", c.input, "Algebra JSON file");
  cmd->add_option("--family", c.family, "nsy, nakayama, matrix, truncated, group, fields or a2");
  cmd->add_option("--n", c.n, "Number of vertices");
  cmd->add_option("--l", c.l, "Loewy length");
  cmd->add_option("--m", c.m, "Comma-separated multiplicities (matrix size, truncation degree or field count)");
  cmd->add_option("--factors", c.factors, "Comma-separated cyclic factor orders for group algebras");
  cmd->add_option("--prime", c.prime, "Work over GF(p)");
  cmd->add_flag("--rational", c.rational, "Work over the rationals (default)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius and self-injective algebras: structure, Frobenius pairs and spread comultiplications"};
  app.require_subcommand(1);
  Config c;
  app.add_option("--seed", c.seed, "Seed for every randomized search")->capture_default_str();
  app.add_option("-o,--output", c.output, "Write JSON here instead of stdout");

  auto* gen = app.add_subcommand("generate", "Emit a family algebra as JSON");
  add_algebra_flags(gen, c);
  auto* ana = app.add_subcommand("analyze", "Radical, canonical decomposition, Nakayama permutation");
  add_algebra_flags(ana, c);
  auto* com = app.add_subcommand("comul", "Spread a comultiplication onto the algebra and check it");
  add_algebra_flags(com, c);
  com->add_option("--preset", c.preset, "singleton, diagonal or full")->capture_default_str();
  com->add_option("--spec", c.spec_path, "Spread spec JSON file (overrides --preset)");
  auto* ver = app.add_subcommand("verify", "Run the acceptance checks over a corpus or one algebra");
  add_algebra_flags(ver, c);
  ver->add_option("--profile", c.profile, "small or standard")->capture_default_str();
  ver->add_option("--report", c.report, "Write the JSON report here");
  for (auto* sub : {gen, ana, com, ver}) {
    sub->add_option("--seed", c.seed, "Seed for every randomized search");
    sub->add_option("-o,--output", c.output, "Write JSON here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }
  try {
    if (*gen) return cmd_generate(c);
    if (*ana) return cmd_analyze(c);
    if (*com) return cmd_comul(c);
    if (*ver) return cmd_verify(c);
  } catch (const frobalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
