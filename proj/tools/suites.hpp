#pragma once

// Property suites behind `permclass verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "permclass/class_engine.hpp"

namespace permclass::suites {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  // First failure, if any.
  std::string detail;

  bool pass() const noexcept { return failures == 0; }
};

const std::vector<std::string>& names();

// Throws InvalidWord for an unknown suite name.
SuiteResult run(const std::string& name, std::uint64_t seed, const EngineOptions& options);

SuiteResult pseudo_parity();
SuiteResult shadowing(const EngineOptions& options);
SuiteResult oracle(std::uint64_t seed, const EngineOptions& options);
SuiteResult symmetry(const EngineOptions& options);
SuiteResult certificates(std::uint64_t seed, const EngineOptions& options);
SuiteResult prefix_chain(std::uint64_t seed, int samples = 1000);
SuiteResult lexmin(const EngineOptions& options);

}  // namespace permclass::suites
