// Acceptance checks: one PASS/FAIL line per criterion. Counts are compared
// exactly; the only tolerances are the wall-clock limits below.
//
// usage: acceptance PATH_TO_PERMCLASS_BINARY

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <fmt/format.h>

#include "oracles.hpp"
#include "permclass/enumeration_harness.hpp"
#include "permclass/erdos_szekeres.hpp"
#include "permclass/pseudo_rotational.hpp"

using namespace permclass;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitRotational = 10;
constexpr double kLimitCutoff = 300;
constexpr double kLimitPseudo = 60;
constexpr double kLimitTheorem1 = 30 * 60;
constexpr double kLimitErdos = 60 * 60;

constexpr std::uint64_t kChainSeed = 20240611;
constexpr int kChainSamples = 1000;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int g_failed = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, fmt::format("exception: {}", e.what())};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    out.ok = false;
    out.detail += fmt::format("; took {:.1f} s, limit {:.0f} s", secs, limit_s);
  }
  if (!out.ok) ++g_failed;
  fmt::print("{} C{:<2} {}: {} [{:.2f} s]\n", out.ok ? "PASS" : "FAIL", id, title, out.detail, secs);
  std::fflush(stdout);
}

std::vector<Permutation> all_of_length(int c) {
  std::vector<Permutation> out;
  for (Rank r = 0; r < kFactorial[static_cast<std::size_t>(c)]; ++r) out.push_back(unrank(r, c));
  return out;
}

std::string run_capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  if (pclose(pipe) != 0) out = "exit status nonzero\n" + out;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "permclass";

  criterion(1, "rotational counterexample, m = 1324", kLimitRotational, [] {
    const auto pi = rotation_set(Permutation{1, 3, 2, 4});
    const auto f6 = enumerate_classes(6, pi).class_count_nontrivial;
    const auto f7 = enumerate_classes(7, pi).class_count_nontrivial;
    return Outcome{f6 == 2 && f7 == 1, fmt::format("f(6) = {} (want 2), f(7) = {} (want 1)", f6, f7)};
  });

  criterion(2, "cutoff t <= 2c-1 for every m in S_4", kLimitCutoff, [] {
    int bad = 0;
    std::string first;
    for (const auto& m : all_of_length(4)) {
      const auto f7 = enumerate_classes(7, rotation_set(m)).class_count_nontrivial;
      if (f7 != 1 && bad++ == 0) first = fmt::format("; m = {} has f(7) = {}", m.to_string(), f7);
    }
    return Outcome{bad == 0, fmt::format("{} of 24 patterns with f(7) != 1{}", bad, first)};
  });

  criterion(3, "two pseudo-parity-pure pseudo classes, c = 4, n = 5..9", kLimitPseudo, [] {
    int runs = 0;
    int bad = 0;
    std::string first;
    for (const auto& m : all_of_length(4)) {
      if (m[0] != 1) continue;
      for (int n = 5; n <= 9; ++n) {
        ++runs;
        const auto part = enumerate_pseudo_classes(n, m);
        const bool ok = part.classes.size() == 2 &&
                        std::all_of(part.classes.begin(), part.classes.end(),
                                    [](const PseudoClass& c) { return c.parity_pure(); });
        if (!ok && bad++ == 0) {
          first = fmt::format("; m = {}, n = {}: {} classes", m.to_string(), n, part.classes.size());
        }
      }
    }
    return Outcome{runs == 30 && bad == 0, fmt::format("{} of {} runs off{}", bad, runs, first)};
  });

  criterion(4, "pseudo-rotations preserve pseudo-parity, c = 4, n <= 7", 0, [] {
    std::uint64_t moves = 0;
    std::uint64_t violations = 0;
    for (const auto& m : all_of_length(4)) {
      if (m[0] != 1) continue;
      for (int n = 5; n <= 7; ++n) {
        const PseudoIndex index(n, m);
        for (std::uint64_t s = 0; s < index.state_count(); ++s) {
          const auto tau = index.decode(s);
          for (const auto& next : pseudo_rotation_neighbors(tau)) {
            ++moves;
            if (pseudo_parity(next) != pseudo_parity(tau)) ++violations;
          }
        }
      }
    }
    return Outcome{violations == 0 && moves > 0,
                   fmt::format("{} violations over {} moves", violations, moves)};
  });

  auto formula_rows = [](const char* text, FormulaId id, int n_min, int n_max) {
    const auto r = run_experiment(ReplacementSet::parse(text), n_min, n_max, id);
    std::string detail;
    bool ok = true;
    for (const auto& row : r.rows) {
      ok = ok && row.verdict == Verdict::Match;
      detail += fmt::format("{}n={}: {}/{}", detail.empty() ? "" : ", ", row.n,
                            row.nontrivial ? std::to_string(*row.nontrivial) : "skipped",
                            row.predicted ? std::to_string(*row.predicted) : "-");
    }
    return Outcome{ok, detail + " (computed/predicted)"};
  };

  criterion(5, "{1234,3421}: n + 28 at n = 7..10", kLimitTheorem1,
            [&] { return formula_rows("1234,3421", FormulaId::LinearPlus28, 7, 10); });

  criterion(6, "{1243,3421}: 7*2^(n-4) - 2 at n = 7..9", 0, [&] {
    auto out = formula_rows("1243,3421", FormulaId::SevenTimesPow2, 7, 9);
    // The literal values as well as the formula.
    const auto r = run_experiment(ReplacementSet::parse("1243,3421"), 7, 9, std::nullopt);
    const std::array<std::uint64_t, 3> want{54, 110, 222};
    for (std::size_t i = 0; i < want.size(); ++i) out.ok = out.ok && r.rows[i].nontrivial == want[i];
    return out;
  });

  criterion(7, "{1234,3412}: (n^3+6n^2-55n+54)/6 at n = 7..9", 0, [&] {
    auto out = formula_rows("1234,3412", FormulaId::CubicConjecture, 7, 9);
    const auto r7 = enumerate_classes(7, ReplacementSet::parse("1234,3412")).class_count_nontrivial;
    out.ok = out.ok && r7 == 51;
    return out;
  });

  criterion(8, "{12..k, k..21} small cases (conjectured thresholds stand in for n >= 3k^2-4k+3)",
            kLimitErdos, [] {
              std::string detail;
              bool ok = true;
              const auto r35 = verify_es_theorem(3, 5);
              ok = ok && r35.classes_total == 3 && r35.singletons == 0;
              detail += fmt::format("k=3 n=5: {} classes, {} singletons", r35.classes_total, r35.singletons);
              for (int n = 6; n <= 9; ++n) {
                const auto r = verify_es_theorem(3, n);
                ok = ok && r.classes_total == 1;
                detail += fmt::format("; k=3 n={}: {}", n, r.classes_total);
              }
              for (int n = 6; n <= 8; ++n) {
                const auto r = verify_es_theorem(4, n);
                ok = ok && r.parity_pure;
                detail += fmt::format("; k=4 n={}: {}", n, r.parity_pure ? "parity-pure" : "MIXED");
              }
              const auto r410 = verify_es_theorem(4, 10);
              ok = ok && r410.classes_total == 2;
              detail += fmt::format("; k=4 n=10: {} classes ({})", r410.classes_total, to_string(r410.regime));
              return Outcome{ok, detail};
            });

  criterion(9, "prefix chain on 1000 seeded permutations of S_9 beginning 1234", 0, [] {
    std::mt19937_64 rng(kChainSeed);
    std::vector<int> w{1, 2, 3, 4, 5, 6, 7, 8, 9};
    const auto swapped = Permutation::parse("213456789");
    const auto pi = es_pattern_set(3);
    int failures = 0;
    std::size_t moves = 0;
    for (int t = 0; t < kChainSamples; ++t) {
      std::shuffle(w.begin() + 4, w.end(), rng);
      const Permutation a(w);
      const auto chain = normalize_prefix_chain(a, 3);
      moves += chain.moves.size();
      bool ok = (chain.result.is_identity() || chain.result == swapped) &&
                chain.moves.size() % 2 == 0 && parity(chain.result) == parity(a);
      Permutation cur = a;
      for (const auto& move : chain.moves) {
        const auto listed = occurrences(cur, move.occurrence.matched, false);
        ok = ok && pi.contains(move.target) &&
             std::find(listed.begin(), listed.end(), move.occurrence) != listed.end();
        if (!ok) break;
        cur = apply_move(cur, move);
      }
      if (!ok || cur != chain.result) ++failures;
    }
    return Outcome{failures == 0, fmt::format("seed {}: {} failures, {} moves replayed", kChainSeed,
                                              failures, moves)};
  });

  criterion(10, "engine matches the relaxation oracle, all Pi in S_3 of size 2-3", 0, [] {
    int runs = 0;
    int bad = 0;
    std::string first;
    for (unsigned mask = 0; mask < 64; ++mask) {
      const int bits = __builtin_popcount(mask);
      if (bits < 2 || bits > 3) continue;
      std::vector<Permutation> pats;
      std::vector<oracle::Word> words;
      for (int i = 0; i < 6; ++i) {
        if (mask & (1u << i)) {
          pats.push_back(unrank(static_cast<Rank>(i), 3));
          words.push_back(pats.back().to_vector());
        }
      }
      for (bool adj : {false, true}) {
        for (int n = 4; n <= 6; ++n) {
          ++runs;
          const ReplacementSet pi(pats, adj);
          const auto got = enumerate_classes(n, pi);
          const auto want = oracle::relaxation_partition(n, words, adj);
          std::map<oracle::Word, std::uint64_t> mine;
          for (const auto& c : got.classes) mine[c.representative.to_vector()] = c.size;
          if ((mine != want.classes || got.singleton_count != want.singletons) && bad++ == 0) {
            first = fmt::format("; first at n = {}, {}", n, pi.to_string());
          }
        }
      }
    }
    return Outcome{bad == 0, fmt::format("{} of {} partitions differ{}", bad, runs, first)};
  });

  criterion(11, "lex-min representatives within |a_i - i| <= 4, k = 3, n = 6, 7", 0, [] {
    std::uint64_t reps = 0;
    std::uint64_t violations = 0;
    for (int n : {6, 7}) {
      const auto part = enumerate_classes(n, es_pattern_set(3));
      for (const auto& c : part.classes) {
        ++reps;
        for (int i = 0; i < n; ++i) {
          if (std::abs(c.representative[i] - (i + 1)) > 4) ++violations;
        }
      }
      if (!verify_lexmin_bound(part, 3)) ++violations;
    }
    return Outcome{violations == 0, fmt::format("{} violations over {} representatives", violations, reps)};
  });

  criterion(12, "criterion-5 JSON identical with --threads 1 and --threads 8", 0, [&] {
    const std::string base = cli + " oeis --suite thm1 --n-min 7 --n-max 9 --format json --no-timing --no-cache";
    const auto a = run_capture(base + " --threads 1");
    const auto b = run_capture(base + " --threads 8");
    const bool ok = !a.empty() && a.rfind('{', 0) == 0 && a == b;
    return Outcome{ok, fmt::format("{} bytes vs {} bytes, {}", a.size(), b.size(),
                                   a == b ? "identical" : "DIFFERENT")};
  });

  fmt::print("{} of 12 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
