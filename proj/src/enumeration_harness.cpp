#include "permclass/enumeration_harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "permclass/errors.hpp"

namespace permclass {

namespace {

constexpr std::array kFormulaNames{"n+28", "7*2^(n-4)-2", "(n^3+6n^2-55n+54)/6",
                                   "(n^2+3n-20)/2"};

std::vector<std::string> pattern_strings(const ReplacementSet& pi) {
  std::vector<std::string> out;
  for (const auto& p : pi.patterns()) out.push_back(p.to_string());
  return out;
}

}  // namespace

const char* to_string(FormulaId id) { return kFormulaNames[static_cast<std::size_t>(id)]; }

FormulaId parse_formula(std::string_view name) {
  for (std::size_t i = 0; i < kFormulaNames.size(); ++i) {
    if (name == kFormulaNames[i]) return static_cast<FormulaId>(i);
  }
  throw InvalidWord(fmt::format("unknown formula '{}'", name));
}

int formula_min_n(FormulaId id) { return id == FormulaId::QuadraticSubConjecture ? 8 : 7; }

std::int64_t formula_value(FormulaId id, int n) {
  if (n < formula_min_n(id)) {
    throw OutOfRange(fmt::format("formula {} is stated for n >= {}, got {}", to_string(id),
                                 formula_min_n(id), n));
  }
  const std::int64_t x = n;
  auto exact = [&](std::int64_t num, std::int64_t den) {
    if (num % den != 0) {
      throw std::domain_error(
          fmt::format("formula {} is not an integer at n = {}", to_string(id), n));
    }
    return num / den;
  };
  switch (id) {
    case FormulaId::LinearPlus28:
      return x + 28;
    case FormulaId::SevenTimesPow2:
      return 7 * (std::int64_t{1} << (n - 4)) - 2;
    case FormulaId::CubicConjecture:
      return exact(x * x * x + 6 * x * x - 55 * x + 54, 6);
    case FormulaId::QuadraticSubConjecture:
      return exact(x * x + 3 * x - 20, 2);
  }
  throw InvalidWord("unknown formula id");
}

ResultCache::ResultCache(std::filesystem::path dir) : file_(std::move(dir) / "results.jsonl") {}

std::optional<CacheRecord> ResultCache::load(const ReplacementSet& pi, int n) {
  const std::lock_guard lock(mutex_);
  std::ifstream in(file_);
  if (!in) return std::nullopt;
  const auto patterns = pattern_strings(pi);
  std::optional<CacheRecord> found;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      CacheRecord r;
      r.patterns = j.at("patterns").get<std::vector<std::string>>();
      r.adjacency = j.at("adjacency").get<bool>();
      r.n = j.at("n").get<int>();
      r.nontrivial = j.at("nontrivial").get<std::uint64_t>();
      r.total = j.at("total").get<std::uint64_t>();
      r.singletons = j.at("singletons").get<std::uint64_t>();
      r.engine_version = j.at("engine_version").get<std::string>();
      r.wall_ms = j.at("wall_ms").get<std::uint64_t>();
      if (r.patterns == patterns && r.adjacency == pi.adjacency() && r.n == n &&
          r.engine_version == kEngineVersion) {
        found = std::move(r);
      }
    } catch (const nlohmann::json::exception& e) {
      warnings_.push_back(
          fmt::format("{}:{}: ignoring corrupt cache record ({})", file_.string(), line_no, e.what()));
    }
  }
  return found;
}

void ResultCache::store(const CacheRecord& record) {
  nlohmann::ordered_json j;
  j["patterns"] = record.patterns;
  j["adjacency"] = record.adjacency;
  j["n"] = record.n;
  j["nontrivial"] = record.nontrivial;
  j["total"] = record.total;
  j["singletons"] = record.singletons;
  j["engine_version"] = record.engine_version;
  j["wall_ms"] = record.wall_ms;
  const std::string line = j.dump() + "\n";
  const std::lock_guard lock(mutex_);
  std::filesystem::create_directories(file_.parent_path());
  std::ofstream out(file_, std::ios::app | std::ios::binary);
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
  if (!out) throw std::runtime_error(fmt::format("cannot append to {}", file_.string()));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "match";
    case Verdict::Mismatch:
      return "MISMATCH";
    case Verdict::Skipped:
      return "skipped";
    case Verdict::NoPrediction:
      break;
  }
  return "-";
}

bool ExperimentReport::any_mismatch() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const ExperimentRow& r) { return r.verdict == Verdict::Mismatch; });
}

ExperimentReport run_experiment(const ReplacementSet& pi, int n_min, int n_max,
                                std::optional<FormulaId> formula,
                                const ExperimentOptions& options) {
  if (n_min < 4 || n_max > kMaxLength || n_min > n_max) {
    throw OutOfRange(fmt::format("experiment range {}..{} must lie within 4..{}", n_min, n_max,
                                 kMaxLength));
  }
  ExperimentReport report;
  report.pi = pi;
  report.n_min = n_min;
  report.n_max = n_max;
  report.formula = formula;

  std::optional<ResultCache> cache;
  if (options.cache_dir) cache.emplace(*options.cache_dir);

  for (int n = n_min; n <= n_max; ++n) {
    ExperimentRow row;
    row.n = n;
    if (formula && n >= formula_min_n(*formula)) row.predicted = formula_value(*formula, n);

    std::optional<CacheRecord> hit;
    if (cache) hit = cache->load(pi, n);
    if (hit) {
      row.nontrivial = hit->nontrivial;
      row.total = hit->total;
      row.singletons = hit->singletons;
      row.wall_ms = hit->wall_ms;
      row.from_cache = true;
    } else if (n < pi.pattern_length()) {
      row.note = fmt::format("n is below the pattern length {}", pi.pattern_length());
    } else {
      const auto start = std::chrono::steady_clock::now();
      try {
        const auto part = enumerate_classes(n, pi, options.engine);
        row.wall_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  start)
                .count());
        row.nontrivial = part.class_count_nontrivial;
        row.total = part.class_count_total;
        row.singletons = part.singleton_count;
        if (cache) {
          cache->store({pattern_strings(pi), pi.adjacency(), n, *row.nontrivial, *row.total,
                        *row.singletons, std::string(kEngineVersion), row.wall_ms});
        }
      } catch (const ResourceError& e) {
        row.note = e.what();
      }
    }

    if (!row.nontrivial) {
      row.verdict = Verdict::Skipped;
    } else if (!row.predicted) {
      row.verdict = Verdict::NoPrediction;
    } else {
      row.verdict = static_cast<std::int64_t>(*row.nontrivial) == *row.predicted ? Verdict::Match
                                                                                 : Verdict::Mismatch;
    }
    report.rows.push_back(std::move(row));
  }
  if (cache) report.warnings = cache->warnings();
  return report;
}

SubconjectureResult subconjecture_check(int n, const EngineOptions& options) {
  if (n < 8 || n > 10) {
    throw OutOfRange(fmt::format("sub-conjecture check needs 8 <= n <= 10, got {}", n));
  }
  EngineOptions opts = options;
  opts.probes.push_back({"not_leading_n", [n](const Permutation& p) { return p[0] != n; }});
  const auto part = enumerate_classes(n, ReplacementSet::parse("1234,3412"), opts);
  const auto kept =
      representatives_with_prefix_property(part, has_probe_hit(part, "not_leading_n"));
  SubconjectureResult out;
  out.n = n;
  out.count = kept.size();
  out.predicted = formula_value(FormulaId::QuadraticSubConjecture, n);
  out.match = static_cast<std::int64_t>(out.count) == out.predicted;
  return out;
}

std::vector<SweepRow> sweep_length4_pairs(int n_min, int n_max, const ExperimentOptions& options) {
  std::vector<SweepRow> out;
  for (Rank a = 0; a < kFactorial[4]; ++a) {
    for (Rank b = a + 1; b < kFactorial[4]; ++b) {
      const ReplacementSet pi({unrank(a, 4), unrank(b, 4)}, false);
      const auto report = run_experiment(pi, n_min, n_max, std::nullopt, options);
      SweepRow row{pi, {}};
      for (const auto& r : report.rows) row.nontrivial.push_back(r.nontrivial);
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace permclass
