#pragma once

// Closed forms for nontrivial class counts, experiment runs that compare
// them with the engine, and an append-only result cache.

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permclass/class_engine.hpp"

namespace permclass {

// Bumped whenever a change could alter cached counts.
inline constexpr std::string_view kEngineVersion = "permclass-engine/1";

enum class FormulaId { LinearPlus28, SevenTimesPow2, CubicConjecture, QuadraticSubConjecture };

const char* to_string(FormulaId id);
// Accepts the names produced by to_string; throws InvalidWord otherwise.
FormulaId parse_formula(std::string_view name);
// Smallest n the closed form is stated for.
int formula_min_n(FormulaId id);

// n + 28, 7 * 2^(n-4) - 2, (n^3 + 6n^2 - 55n + 54) / 6, (n^2 + 3n - 20) / 2.
// Throws OutOfRange below formula_min_n and std::domain_error when a
// division is not exact.
std::int64_t formula_value(FormulaId id, int n);

struct CacheRecord {
  std::vector<std::string> patterns;
  bool adjacency = false;
  int n = 0;
  std::uint64_t nontrivial = 0;
  std::uint64_t total = 0;
  std::uint64_t singletons = 0;
  std::string engine_version;
  std::uint64_t wall_ms = 0;
};

// JSON-lines file `results.jsonl` under a directory. Records from another
// engine version are ignored; unreadable lines produce a warning and are
// skipped. Appends are serialized by a mutex and written one line per call.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& file() const noexcept { return file_; }

  // Latest record for (pi, n) carrying the current engine version.
  std::optional<CacheRecord> load(const ReplacementSet& pi, int n);
  void store(const CacheRecord& record);

  // Warnings gathered by load since construction.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  std::filesystem::path file_;
  std::mutex mutex_;
  std::vector<std::string> warnings_;
};

enum class Verdict { Match, Mismatch, Skipped, NoPrediction };

const char* to_string(Verdict v);

struct ExperimentRow {
  int n = 0;
  std::optional<std::uint64_t> nontrivial;
  std::optional<std::uint64_t> total;
  std::optional<std::uint64_t> singletons;
  std::optional<std::int64_t> predicted;
  Verdict verdict = Verdict::NoPrediction;
  std::uint64_t wall_ms = 0;
  bool from_cache = false;
  // Reason for a Skipped row.
  std::string note;
};

struct ExperimentReport {
  ReplacementSet pi;
  int n_min = 0;
  int n_max = 0;
  std::optional<FormulaId> formula;
  std::vector<ExperimentRow> rows;
  std::vector<std::string> warnings;

  bool any_mismatch() const;
};

struct ExperimentOptions {
  EngineOptions engine;
  // No caching when empty.
  std::optional<std::filesystem::path> cache_dir;
};

// Enumerates n_min..n_max (within 4..12, else OutOfRange). Resource errors
// become Skipped rows.
ExperimentReport run_experiment(const ReplacementSet& pi, int n_min, int n_max,
                                std::optional<FormulaId> formula,
                                const ExperimentOptions& options = {});

struct SubconjectureResult {
  int n = 0;
  // Nontrivial {1234,3412} classes whose members do not begin with n.
  std::uint64_t count = 0;
  std::int64_t predicted = 0;
  bool match = false;
};

// Requires 8 <= n <= 10.
SubconjectureResult subconjecture_check(int n, const EngineOptions& options = {});

struct SweepRow {
  ReplacementSet pi;
  std::vector<std::optional<std::uint64_t>> nontrivial;  // one entry per n, empty if skipped
};

// Every unordered pair of distinct length-4 patterns, no adjacency.
std::vector<SweepRow> sweep_length4_pairs(int n_min, int n_max,
                                          const ExperimentOptions& options = {});

}  // namespace permclass
