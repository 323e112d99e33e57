#pragma once

// {12..k, k..21}-equivalence: pattern sets, class-count predictions, the
// prefix normalization chain and small-scale theorem checks.

#include <cstdint>
#include <string>
#include <vector>

#include "permclass/class_engine.hpp"
#include "permclass/pattern_engine.hpp"

namespace permclass {

struct EsConfig {
  int k = 0;
  int n = 0;
  // n >= 3k^2 - 4k + 3: proven one/two-class regime.
  std::int64_t threshold_proven = 0;
  // n >= 3k^2 - 6k + 6: every class reaches a permutation starting with 1.
  std::int64_t threshold_leading_one = 0;
  // k^2 - 2k + 3 for odd k, k^2 - 2k + 2 for even k.
  std::int64_t threshold_conjectured = 0;
  int predicted = 0;
};

// Throws OutOfRange for k < 3.
EsConfig es_config(int k, int n);

ReplacementSet es_pattern_set(int k);

// 1 when k mod 4 is 2 or 3, otherwise 2.
int predicted_classes(int k);

struct ChainResult {
  Permutation result;
  std::vector<Move> moves;
};

// Rewrites a permutation starting with 1 2 .. (2k-2) into 12..n or 2134..n.
// Each pass fixes the first position holding the wrong letter using four
// replacements and swaps the first two letters. Every move is checked
// against a fresh occurrence listing before it is applied. Throws
// PrefixError when the prefix is missing.
ChainResult normalize_prefix_chain(const Permutation& a, int k);

// Every nontrivial representative satisfies |a_i - i| <= (k-1)^2.
bool verify_lexmin_bound(const ClassPartition& partition, int k);

enum class Regime { AboveProvenThreshold, AboveConjecturedThreshold, BelowThresholds };

const char* to_string(Regime r);

struct EsReport {
  int k = 0;
  int n = 0;
  std::uint64_t classes_total = 0;
  std::uint64_t classes_nontrivial = 0;
  std::uint64_t singletons = 0;
  int predicted = 0;
  Regime regime = Regime::BelowThresholds;
  bool parity_pure = false;
  // Zero singletons whenever n > (k-1)^2.
  bool no_avoiders = false;
  // Every nontrivial class has a member starting with 1.
  bool leading_one = false;
  bool pass = false;
};

// Below the conjectured threshold there is no count prediction and pass only
// reflects the avoider check.
EsReport verify_es_theorem(int k, int n, const EngineOptions& options = {});

}  // namespace permclass
