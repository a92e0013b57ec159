#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordercraft/io.hpp"
#include "ordercraft/poset.hpp"

namespace oc {

// i < j with probability p for every i < j, then transitively closed.
Poset random_poset(std::size_t n, double p, std::uint64_t seed);
// Union-closed family of downsets of a random poset, containing the empty set,
// with at most max(n, 2) members; ordered by inclusion.
Poset random_join_semilattice(std::size_t n, std::uint64_t seed);

struct SuiteOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::size_t max_n = 0;  // 0 selects the suite default
  unsigned jobs = 0;      // 0 uses the hardware concurrency
  bool inject_fault = false;
};

struct SuiteFailure {
  std::size_t trial = 0;
  std::string message;
  Json bundle;  // {"suite", "trial", "inputs"}; replayable
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t max_n = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0;
};

std::vector<std::string> suite_names();
std::size_t default_max_n(const std::string& suite);
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

// Inputs a suite draws for one trial.
Json suite_inputs(const std::string& name, std::uint64_t seed, std::size_t trial, std::size_t max_n,
                  bool inject_fault = false);
// Runs a suite's check on stored inputs; a message describes the failure.
std::optional<std::string> suite_check(const std::string& name, const Json& inputs);
std::optional<std::string> replay(const Json& bundle);

Json to_json(const SuiteReport& r);

}  // namespace oc
