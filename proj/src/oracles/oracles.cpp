#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace permclass::oracle {

std::vector<Word> all_permutations(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::uint64_t scan_rank(const Word& w) {
  Word cur(w.size());
  std::iota(cur.begin(), cur.end(), 1);
  std::uint64_t r = 0;
  while (cur != w) {
    std::next_permutation(cur.begin(), cur.end());
    ++r;
  }
  return r;
}

int cycle_parity(const Word& w) {
  const std::size_t n = w.size();
  std::vector<bool> seen(n, false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j] - 1)) seen[j] = true;
  }
  return static_cast<int>((n - cycles) % 2);
}

std::pair<int, int> subset_monotone(const Word& w) {
  const int n = static_cast<int>(w.size());
  int inc = 0;
  int dec = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Word sub;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(w[static_cast<std::size_t>(i)]);
    }
    const int len = static_cast<int>(sub.size());
    if (std::is_sorted(sub.begin(), sub.end())) inc = std::max(inc, len);
    if (std::is_sorted(sub.rbegin(), sub.rend())) dec = std::max(dec, len);
  }
  return {inc, dec};
}

Word standardize(const Word& w) {
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  Word out;
  for (int v : w) {
    out.push_back(static_cast<int>(std::find(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> position_sets(int n, int c, bool adjacency) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != c) continue;
    std::vector<int> pos;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) pos.push_back(i);
    }
    if (adjacency && pos.back() - pos.front() != c - 1) continue;
    out.push_back(pos);
  }
  return out;
}

}  // namespace

std::vector<Word> subset_neighbors(const Word& host, const std::vector<Word>& patterns,
                                   bool adjacency) {
  const int n = static_cast<int>(host.size());
  const int c = static_cast<int>(patterns.front().size());
  std::set<Word> out;
  if (c > n) return {};
  for (const auto& pos : position_sets(n, c, adjacency)) {
    Word sub;
    for (int p : pos) sub.push_back(host[static_cast<std::size_t>(p)]);
    const Word shape = standardize(sub);
    if (std::find(patterns.begin(), patterns.end(), shape) == patterns.end()) continue;
    Word sorted = sub;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& target : patterns) {
      if (target == shape) continue;
      Word next = host;
      for (std::size_t i = 0; i < pos.size(); ++i) {
        next[static_cast<std::size_t>(pos[i])] = sorted[static_cast<std::size_t>(target[i] - 1)];
      }
      out.insert(next);
    }
  }
  out.erase(host);
  return {out.begin(), out.end()};
}

bool contains_by_subsets(const Word& host, const Word& pattern) {
  const int n = static_cast<int>(host.size());
  const int c = static_cast<int>(pattern.size());
  if (c > n) return false;
  for (const auto& pos : position_sets(n, c, false)) {
    Word sub;
    for (int p : pos) sub.push_back(host[static_cast<std::size_t>(p)]);
    if (standardize(sub) == pattern) return true;
  }
  return false;
}

OraclePartition relaxation_partition(int n, const std::vector<Word>& patterns, bool adjacency) {
  const auto perms = all_permutations(n);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<std::size_t>> edges(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (const auto& nb : subset_neighbors(perms[i], patterns, adjacency)) {
      edges[i].push_back(index.at(nb));
    }
  }
  std::vector<std::size_t> label(perms.size());
  std::iota(label.begin(), label.end(), std::size_t{0});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      for (std::size_t j : edges[i]) {
        const std::size_t m = std::min(label[i], label[j]);
        if (label[i] != m || label[j] != m) {
          label[i] = label[j] = m;
          changed = true;
        }
      }
    }
  }
  std::map<std::size_t, std::uint64_t> sizes;
  for (auto l : label) ++sizes[l];
  OraclePartition out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const std::size_t l = label[i];
    if (sizes[l] == 1) {
      ++out.singletons;
      continue;
    }
    // Lexicographic listing: the smallest index is the lex-min member.
    const Word& rep = perms[l];
    out.classes[rep] = sizes[l];
    auto& [even, odd] = out.parity[rep];
    (cycle_parity(perms[i]) == 0 ? even : odd) += 1;
  }
  return out;
}

std::uint64_t count_avoiders(int n, const std::vector<Word>& patterns) {
  std::uint64_t count = 0;
  for (const auto& w : all_permutations(n)) {
    bool avoids = true;
    for (const auto& p : patterns) avoids = avoids && !contains_by_subsets(w, p);
    count += avoids ? 1 : 0;
  }
  return count;
}

}  // namespace permclass::oracle
