#include <cstdlib>
#include <iostream>
#include <string>

#include "frobalg/errors.hpp"
#include "frobalg/io.hpp"
#include "frobalg/verification.hpp"

int main(int argc, char** argv) {
  frobalg::VerifyOptions opt;
  std::string report;
  for (int k = 1; k < argc; ++k) {
    std::string arg = argv[k];
    if (arg == "--profile" && k + 1 < argc) {
      opt.profile = argv[++k];
    } else if (arg == "--seed" && k + 1 < argc) {
      opt.seed = std::stoull(argv[++k]);
    } else if (arg == "--report" && k + 1 < argc) {
      report = argv[++k];
    } else {
      std::cerr << "usage: acceptance [--profile small|standard] [--seed N] [--report out.json]\n";
      return 1;
    }
  }
  try {
    auto rep = frobalg::run_acceptance(opt);
    std::cout << "acceptance suite, profile " << opt.profile << " (" << rep.corpus_size << " algebras), seed "
              << opt.seed << "\n";
    std::size_t passed = 0;
    for (const auto& c : rep.criteria) {
      std::cout << frobalg::format_result(c) << "\n";
      passed += c.passed;
    }
    std::cout << passed << "/" << rep.criteria.size() << " criteria passed\n";
    if (!report.empty()) frobalg::write_json_file(report, frobalg::report_to_json(rep));
    return rep.all_passed() ? 0 : 2;
  } catch (const frobalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
