// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtscreen/errors.hpp"
#include "qtscreen/io.hpp"
#include "qtscreen/verify.hpp"

using namespace qtscreen;

namespace {

struct Run {
  std::string suite;
  std::string cartan;
  int samples = 0;  // 0 keeps the configured default
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Run> runs;
};

std::vector<Criterion> criteria() {
  const std::vector<std::string> four{"sl2", "A2", "B2", "G2"};
  auto over = [](const std::vector<std::string>& suites, const std::vector<std::string>& types) {
    std::vector<Run> runs;
    for (const auto& s : suites)
      for (const auto& c : types) runs.push_back({s, c, 0});
    return runs;
  };
  return {
      {1, "gaussian binomials", over({"binom"}, {"A2"})},
      {2, "leibniz rules", over({"leibniz"}, {"A2", "A3", "B2", "G2"})},
      {3, "bicharacters", over({"bicharacter"}, {"A2", "A3", "B2", "G2"})},
      {4, "kernels", over({"kernel-hat", "kernel-y", "kernel-classical"}, four)},
      {5, "commutative diagrams", over({"diagrams"}, four)},
      {6, "quotient normal forms", over({"quotient"}, four)},
      {7, "involutions", over({"involution"}, four)},
      {8, "monomial order", over({"order"}, {"A2", "B2", "G2"})},
      {9, "twisted powers, rescaled expansions, ordered factorization",
       [] {
         std::vector<Run> runs{{"lemma7", "sl2", 0}, {"lemma7", "A2", 0}, {"lemma13", "A2", 50},
                               {"lemma13", "A3", 50}, {"prop4", "sl2", 0}, {"prop4", "A2", 0}};
         return runs;
       }()},
      {10, "pinned values", over({"pinned"}, {"A2"})},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  RunConfig base;
  std::string window = "-6:6";
  bool verbose = false;
  app.add_option("--seed", base.seed, "Random seed");
  app.add_option("--samples", base.samples, "Samples per property")->check(CLI::PositiveNumber);
  app.add_option("--window", window, "Lattice window kmin:kmax");
  app.add_flag("-v,--verbose", verbose, "Print every suite run");
  CLI11_PARSE(app, argc, argv);

  try {
    base.window = parse_window(window);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  bool all_ok = true;
  for (const auto& c : criteria()) {
    bool ok = true;
    int checks = 0;
    std::string first_failure;
    for (const auto& run : c.runs) {
      RunConfig cfg = base;
      cfg.cartan = run.cartan;
      if (run.samples > 0) cfg.samples = std::min(run.samples, base.samples);
      const SuiteReport r = run_suite(run.suite, cfg);
      checks += r.passed + r.failed;
      // The A2 factorizations are recorded, not asserted.
      if (r.suite == "prop4" && run.cartan == "A2" && r.details.contains("sampled_matched")) {
        std::cout << "  A2 ordered factorization: " << r.details["sampled_matched"] << "/" << r.details["sampled_total"]
                  << " sampled monomials matched\n";
      }
      if (verbose) std::cout << "  " << run.suite << " " << run.cartan << ": " << r.passed << " passed, " << r.failed << " failed\n";
      if (!r.ok()) {
        ok = false;
        if (first_failure.empty()) first_failure = run.suite + " " + run.cartan + ": " + r.counterexample.dump();
      }
    }
    all_ok = all_ok && ok;
    std::cout << "criterion " << c.number << " (" << c.title << "): " << (ok ? "PASS" : "FAIL") << " [" << checks
              << " checks]\n";
    if (!ok) std::cout << "  first counterexample: " << first_failure << "\n";
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "total time: " << seconds << " s\n";
  return all_ok ? 0 : 1;
}
