#pragma once

// Exhaustive partition of S_n into the connected components of the
// replacement graph of a ReplacementSet.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permclass/pattern_engine.hpp"
#include "permclass/perm_core.hpp"

namespace permclass {

// A named predicate evaluated on every member of every nontrivial class; the
// per-class hit counts land in ClassSummary::probe_hits.
struct MemberProbe {
  std::string name;
  std::function<bool(const Permutation&)> test;
};

struct EngineOptions {
  std::uint64_t memory_budget = std::uint64_t{4} << 30;
  int threads = 1;
  std::vector<MemberProbe> probes;
  // Ranks per frontier chunk; also the granularity of disk spills.
  std::size_t chunk_ranks = 4096;
};

struct ClassSummary {
  std::uint64_t size = 0;
  // Lexicographically smallest member.
  Permutation representative;
  std::uint64_t even_count = 0;
  std::uint64_t odd_count = 0;
  std::vector<std::uint64_t> probe_hits;

  bool parity_pure() const noexcept { return even_count == 0 || odd_count == 0; }
};

struct EngineStats {
  std::uint64_t spilled_runs = 0;
  std::uint64_t peak_frontier = 0;
};

struct ClassPartition {
  int n = 0;
  ReplacementSet pi;
  std::uint64_t class_count_total = 0;
  std::uint64_t class_count_nontrivial = 0;
  std::uint64_t singleton_count = 0;
  // Nontrivial classes only, sorted by representative rank.
  std::vector<ClassSummary> classes;
  std::vector<std::string> probe_names;
  EngineStats stats;
};

// Throws CapError for n > 12 and ResourceError when the visited bitset plus a
// minimal frontier cannot fit in options.memory_budget. The result does not
// depend on options.threads.
ClassPartition enumerate_classes(int n, const ReplacementSet& pi,
                                 const EngineOptions& options = {});

std::uint64_t nontrivial_count(const ClassPartition& partition);

struct EquivalenceResult {
  bool equivalent = false;
  // Moves leading from a to b, present when requested and equivalent.
  std::vector<Move> certificate;
};

EquivalenceResult are_equivalent(const Permutation& a, const Permutation& b,
                                 const ReplacementSet& pi, bool want_certificate = false,
                                 const EngineOptions& options = {});

// Summary of the component containing p, found by frontier search from p.
ClassSummary class_of(const Permutation& p, const ReplacementSet& pi,
                      const EngineOptions& options = {});

using ClassPredicate = std::function<bool(const ClassSummary&)>;

// Nontrivial classes satisfying `predicate`; an empty predicate keeps all.
std::vector<ClassSummary> representatives_with_prefix_property(const ClassPartition& partition,
                                                               const ClassPredicate& predicate);

// Predicate: the class has at least one member satisfying the named probe.
ClassPredicate has_probe_hit(const ClassPartition& partition, const std::string& probe_name);

}  // namespace permclass
