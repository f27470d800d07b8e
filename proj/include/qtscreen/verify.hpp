#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qtscreen/io.hpp"

namespace qtscreen {

struct RunConfig {
  std::string cartan = "A2";
  Window window{-6, 6};
  std::uint64_t seed = 1;
  int samples = 200;

  Json to_json() const;
};

/// Deterministic random instances. Exponents are uniform in [0, 3] for the
/// hat ring and [-3, 3] for Y-monomials, over the window, with at most 6
/// factor draws per monomial (3 for dominant monomials, whose expansions are
/// capped at 64 terms by resampling).
class Sampler {
 public:
  Sampler(const CartanData& cd, Window window, std::uint64_t seed) : cd_(cd), window_(window), rng_(seed) {}

  int uniform(int lo, int hi);
  int node() { return uniform(1, cd_.rank()); }
  int lattice() { return uniform(window_.kmin, window_.kmax); }

  TPoly coefficient();
  HatMonomial hat_monomial(int max_draws = 6);
  YMonomial y_monomial(int max_draws = 6);
  HatMonomial dominant_hat(int i);
  YMonomial dominant_y(int i);
  /// Either not i-dominant or with a capped expansion.
  HatMonomial bounded_hat(int i);
  YMonomial bounded_y(int i);
  HatMonomial non_dominant_hat(int i);
  YMonomial non_dominant_y(int i);
  /// Pure W monomial.
  HatMonomial pure_w(int max_draws = 3);
  HatElement hat_element(int max_terms = 3);
  YElement y_element(int max_terms = 3);
  ClassicalElement classical_element(int max_terms = 3);

  std::mt19937_64& engine() { return rng_; }

 private:
  const CartanData& cd_;
  Window window_;
  std::mt19937_64 rng_;
};

/// Pass/fail tally for one named property.
struct PropertyTally {
  std::string property;
  int passed = 0;
  int failed = 0;
};

struct SuiteReport {
  std::string suite;
  Json config;
  std::vector<PropertyTally> properties;
  int passed = 0;
  int failed = 0;
  Json counterexample;  // null when every check passed
  Json details;         // suite-specific extra output, null if none

  bool ok() const { return failed == 0; }
  Json to_json() const;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one suite; throws InputError for unknown names or unusable configs.
SuiteReport run_suite(const std::string& name, const RunConfig& config);

/// Fixed instances whose factorization outcomes are recorded as a golden file.
Json prop4_outcomes(const CartanData& cd, const std::vector<std::pair<int, HatMonomial>>& instances);
/// The instances recorded for A2.
std::vector<std::pair<int, HatMonomial>> prop4_a2_instances();

}  // namespace qtscreen
