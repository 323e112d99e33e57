#include "suites.hpp"

#include <algorithm>
#include <random>

#include <fmt/format.h>

#include "oracles.hpp"
#include "permclass/erdos_szekeres.hpp"
#include "permclass/errors.hpp"
#include "permclass/pseudo_rotational.hpp"

namespace permclass::suites {

namespace {

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.detail = what;
}

std::vector<Permutation> leading_one_patterns(int c) {
  std::vector<Permutation> out;
  for (Rank r = 0; r < kFactorial[static_cast<std::size_t>(c)]; ++r) {
    const auto m = unrank(r, c);
    if (m[0] == 1) out.push_back(m);
  }
  return out;
}

// Compares the engine with the relaxation oracle on one (n, pi).
void compare_with_oracle(SuiteResult& r, int n, const ReplacementSet& pi,
                         const EngineOptions& options) {
  std::vector<oracle::Word> words;
  for (const auto& p : pi.patterns()) words.push_back(p.to_vector());
  const auto want = oracle::relaxation_partition(n, words, pi.adjacency());
  const auto got = enumerate_classes(n, pi, options);
  ++r.checks;
  bool same = got.singleton_count == want.singletons && got.classes.size() == want.classes.size();
  for (const auto& c : got.classes) {
    if (!same) break;
    const auto it = want.classes.find(c.representative.to_vector());
    const auto par = want.parity.find(c.representative.to_vector());
    same = it != want.classes.end() && it->second == c.size && par != want.parity.end() &&
           par->second.first == c.even_count && par->second.second == c.odd_count;
  }
  if (!same) fail(r, fmt::format("engine and oracle disagree at n = {} for {}", n, pi.to_string()));
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames{"pseudo-parity", "shadowing", "oracle",
                                                "symmetry",      "certificates", "prefix-chain",
                                                "lexmin"};
  return kNames;
}

SuiteResult run(const std::string& name, std::uint64_t seed, const EngineOptions& options) {
  if (name == "pseudo-parity") return pseudo_parity();
  if (name == "shadowing") return shadowing(options);
  if (name == "oracle") return oracle(seed, options);
  if (name == "symmetry") return symmetry(options);
  if (name == "certificates") return certificates(seed, options);
  if (name == "prefix-chain") return prefix_chain(seed);
  if (name == "lexmin") return lexmin(options);
  throw InvalidWord(fmt::format("unknown suite '{}'", name));
}

SuiteResult pseudo_parity() {
  SuiteResult r{"pseudo-parity", 0, 0, {}};
  for (const auto& m : leading_one_patterns(4)) {
    for (int n = 5; n <= 7; ++n) {
      const PseudoIndex index(n, m);
      for (std::uint64_t s = 0; s < index.state_count(); ++s) {
        const auto tau = index.decode(s);
        for (const auto& next : pseudo_rotation_neighbors(tau)) {
          ++r.checks;
          if (pseudo_parity(next) != pseudo_parity(tau)) {
            fail(r, fmt::format("{} -> {} changes pseudo-parity (m = {})", tau.to_string(),
                                next.to_string(), m.to_string()));
          }
        }
      }
    }
  }
  return r;
}

SuiteResult shadowing(const EngineOptions& options) {
  SuiteResult r{"shadowing", 0, 0, {}};
  for (const auto& m : leading_one_patterns(4)) {
    const auto pi = rotation_set(m);
    for (int n = 5; n <= 6; ++n) {
      const PseudoIndex index(n, m);
      for (std::uint64_t s = 0; s < index.state_count(); ++s) {
        const auto tau = index.decode(s);
        for (const auto& next : pseudo_rotation_neighbors(tau)) {
          ++r.checks;
          if (!are_equivalent(representative(tau), representative(next), pi, false, options)
                   .equivalent) {
            fail(r, fmt::format("representatives of {} and {} are not equivalent (m = {})",
                                tau.to_string(), next.to_string(), m.to_string()));
          }
        }
      }
    }
  }
  return r;
}

SuiteResult oracle(std::uint64_t seed, const EngineOptions& options) {
  SuiteResult r{"oracle", 0, 0, {}};
  // Every subset of S_3 with two or three patterns.
  for (unsigned mask = 0; mask < 64; ++mask) {
    const int bits = __builtin_popcount(mask);
    if (bits < 2 || bits > 3) continue;
    std::vector<Permutation> pats;
    for (int i = 0; i < 6; ++i) {
      if (mask & (1u << i)) pats.push_back(unrank(static_cast<Rank>(i), 3));
    }
    for (bool adj : {false, true}) {
      for (int n = 4; n <= 6; ++n) compare_with_oracle(r, n, ReplacementSet(pats, adj), options);
    }
  }
  // Seeded sample of length-4 sets.
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Permutation> pats;
    const std::size_t size = 2 + rng() % 2;
    while (pats.size() < size) {
      auto p = unrank(rng() % kFactorial[4], 4);
      if (std::find(pats.begin(), pats.end(), p) == pats.end()) pats.push_back(p);
    }
    const ReplacementSet pi(pats, rng() % 2 == 1);
    for (int n = 5; n <= 6; ++n) compare_with_oracle(r, n, pi, options);
  }
  return r;
}

SuiteResult symmetry(const EngineOptions& options) {
  SuiteResult r{"symmetry", 0, 0, {}};
  const auto a = ReplacementSet::parse("1234,3421");
  const auto b = ReplacementSet::parse("4321,1243");
  for (int n = 6; n <= 8; ++n) {
    ++r.checks;
    const auto x = enumerate_classes(n, a, options).class_count_nontrivial;
    const auto y = enumerate_classes(n, b, options).class_count_nontrivial;
    if (x != y) fail(r, fmt::format("n = {}: {} gives {}, {} gives {}", n, a.to_string(), x, b.to_string(), y));
  }
  return r;
}

SuiteResult certificates(std::uint64_t seed, const EngineOptions& options) {
  SuiteResult r{"certificates", 0, 0, {}};
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<int, ReplacementSet>> cases{
      {6, ReplacementSet::parse("123,321")},
      {7, ReplacementSet::parse("1234,3421")},
      {7, ReplacementSet::parse("adj:1324,2413,3241,4132")}};
  for (const auto& [n, pi] : cases) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = unrank(rng() % kFactorial[static_cast<std::size_t>(n)], n);
      // Half the targets are drawn from a's own class by a short random walk.
      Permutation b = unrank(rng() % kFactorial[static_cast<std::size_t>(n)], n);
      if (trial % 2 == 0) {
        b = a;
        for (int step = 0; step < 6; ++step) {
          const auto nb = neighbors(b, pi);
          if (nb.empty()) break;
          b = nb[rng() % nb.size()];
        }
      }
      ++r.checks;
      const auto res = are_equivalent(a, b, pi, true, options);
      const bool same_class =
          class_of(a, pi, options).representative == class_of(b, pi, options).representative;
      if (res.equivalent != same_class) {
        fail(r, fmt::format("{} vs {} under {}: search and class_of disagree", a.to_string(),
                            b.to_string(), pi.to_string()));
        continue;
      }
      if (!res.equivalent) continue;
      Permutation cur = a;
      bool ok = true;
      for (const auto& move : res.certificate) {
        const auto listed = occurrences(cur, move.occurrence.matched, pi.adjacency());
        if (!pi.contains(move.target) ||
            std::find(listed.begin(), listed.end(), move.occurrence) == listed.end()) {
          ok = false;
          break;
        }
        cur = apply_move(cur, move);
      }
      if (!ok || cur != b) {
        fail(r, fmt::format("certificate from {} to {} under {} does not replay", a.to_string(),
                            b.to_string(), pi.to_string()));
      }
    }
  }
  return r;
}

SuiteResult prefix_chain(std::uint64_t seed, int samples) {
  SuiteResult r{"prefix-chain", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<int> w{1, 2, 3, 4, 5, 6, 7, 8, 9};
  const auto swapped = Permutation::parse("213456789");
  for (int trial = 0; trial < samples; ++trial) {
    std::shuffle(w.begin() + 4, w.end(), rng);
    const Permutation a(w);
    ++r.checks;
    try {
      const auto chain = normalize_prefix_chain(a, 3);
      const bool ok = (chain.result.is_identity() || chain.result == swapped) &&
                      chain.moves.size() % 2 == 0 && parity(chain.result) == parity(a);
      Permutation cur = a;
      const auto pi = es_pattern_set(3);
      bool replay = true;
      for (const auto& move : chain.moves) {
        const auto listed = occurrences(cur, move.occurrence.matched, false);
        if (!pi.contains(move.target) ||
            std::find(listed.begin(), listed.end(), move.occurrence) == listed.end()) {
          replay = false;
          break;
        }
        cur = apply_move(cur, move);
      }
      if (!ok || !replay || cur != chain.result) {
        fail(r, fmt::format("chain from {} ends at {} after {} moves", a.to_string(),
                            chain.result.to_string(), chain.moves.size()));
      }
    } catch (const std::exception& e) {
      fail(r, fmt::format("chain from {} threw: {}", a.to_string(), e.what()));
    }
  }
  return r;
}

SuiteResult lexmin(const EngineOptions& options) {
  SuiteResult r{"lexmin", 0, 0, {}};
  for (int n : {6, 7}) {
    ++r.checks;
    if (!verify_lexmin_bound(enumerate_classes(n, es_pattern_set(3), options), 3)) {
      fail(r, fmt::format("a representative at n = {} leaves the band |a_i - i| <= 4", n));
    }
  }
  return r;
}

}  // namespace permclass::suites
