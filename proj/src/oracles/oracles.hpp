#pragma once

// Brute-force reference implementations used to cross-check the engine.
// Nothing here depends on the engine's own ranking, occurrence or
// neighbor code: words are plain vectors and every routine is the most
// literal enumeration available.

#include <cstdint>
#include <map>
#include <vector>

namespace permclass::oracle {

using Word = std::vector<int>;

// All permutations of 1..n in lexicographic order.
std::vector<Word> all_permutations(int n);

// Position of w in the lexicographic listing of S_n (linear scan).
std::uint64_t scan_rank(const Word& w);

// Inversion parity via cycle count: (n - cycles) mod 2.
int cycle_parity(const Word& w);

// Longest increasing / decreasing subsequence by trying every subset.
std::pair<int, int> subset_monotone(const Word& w);

// Sort-and-rank standardization.
Word standardize(const Word& w);

// Results of every replacement over every c-subset (or window) of positions.
std::vector<Word> subset_neighbors(const Word& host, const std::vector<Word>& patterns,
                                   bool adjacency);

bool contains_by_subsets(const Word& host, const Word& pattern);

struct OraclePartition {
  std::uint64_t singletons = 0;
  // representative -> class size, nontrivial classes only.
  std::map<Word, std::uint64_t> classes;
  // representative -> (even, odd) member counts.
  std::map<Word, std::pair<std::uint64_t, std::uint64_t>> parity;
};

// Merge by repeated relaxation: every permutation starts labelled with its
// own index, each edge pulls both endpoints to the smaller label, repeated
// until nothing changes.
OraclePartition relaxation_partition(int n, const std::vector<Word>& patterns, bool adjacency);

// Number of permutations of length n containing none of the patterns.
std::uint64_t count_avoiders(int n, const std::vector<Word>& patterns);

}  // namespace permclass::oracle
