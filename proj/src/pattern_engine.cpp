#include "permclass/pattern_engine.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "permclass/errors.hpp"

namespace permclass {

ReplacementSet::ReplacementSet(std::vector<Permutation> patterns, bool adjacency)
    : patterns_(std::move(patterns)), adjacency_(adjacency) {
  if (patterns_.empty()) throw InvalidWord("replacement set needs at least one pattern");
  c_ = patterns_.front().size();
  for (const auto& p : patterns_) {
    if (p.size() != c_) {
      throw InvalidWord(fmt::format("pattern {} has length {}, expected {}", p.to_string(),
                                    p.size(), c_));
    }
  }
  if (c_ < 2) throw InvalidWord("patterns must have length at least 2");
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

ReplacementSet ReplacementSet::parse(std::string_view text) {
  bool adjacency = false;
  constexpr std::string_view kAdj = "adj:";
  if (text.substr(0, kAdj.size()) == kAdj) {
    adjacency = true;
    text.remove_prefix(kAdj.size());
  }
  const char separator = text.find(';') != std::string_view::npos ? ';' : ',';
  std::vector<Permutation> patterns;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(separator, start);
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    try {
      patterns.push_back(Permutation::parse(token));
    } catch (const std::exception& e) {
      throw InvalidWord(fmt::format("malformed pattern '{}': {}", token, e.what()));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return ReplacementSet(std::move(patterns), adjacency);
}

bool ReplacementSet::contains(const Permutation& pattern) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), pattern);
}

std::string ReplacementSet::to_string() const {
  const bool wide = c_ > 9;
  std::string out = adjacency_ ? "adj:" : "";
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i > 0) out.push_back(wide ? ';' : ',');
    out += patterns_[i].to_string();
  }
  return out;
}

namespace {

// Backtracking over positions; partial selections must already be
// order-isomorphic to the corresponding prefix of the pattern.
template <class Visit>
bool search_occurrences(const Permutation& host, const Permutation& pattern, bool adjacency,
                        Visit&& visit) {
  const int n = host.size();
  const int c = pattern.size();
  if (c > n || c == 0) return false;
  std::vector<int> positions(static_cast<std::size_t>(c));

  if (adjacency) {
    for (int start = 0; start + c <= n; ++start) {
      bool ok = true;
      for (int i = 0; i < c && ok; ++i) {
        for (int j = 0; j < i && ok; ++j) {
          ok = (host[start + j] < host[start + i]) == (pattern[j] < pattern[i]);
        }
      }
      if (!ok) continue;
      for (int i = 0; i < c; ++i) positions[static_cast<std::size_t>(i)] = start + i;
      if (visit(positions)) return true;
    }
    return false;
  }

  auto extend = [&](auto& self, int depth, int next) -> bool {
    if (depth == c) return visit(positions);
    for (int pos = next; pos <= n - (c - depth); ++pos) {
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) {
        ok = (host[positions[static_cast<std::size_t>(j)]] < host[pos]) ==
             (pattern[j] < pattern[depth]);
      }
      if (!ok) continue;
      positions[static_cast<std::size_t>(depth)] = pos;
      if (self(self, depth + 1, pos + 1)) return true;
    }
    return false;
  };
  return extend(extend, 0, 0);
}

}  // namespace

std::vector<Occurrence> occurrences(const Permutation& host, const Permutation& pattern,
                                    bool adjacency) {
  std::vector<Occurrence> out;
  search_occurrences(host, pattern, adjacency, [&](const std::vector<int>& positions) {
    out.push_back(Occurrence{positions, pattern});
    return false;
  });
  return out;
}

bool contains(const Permutation& host, const Permutation& pattern) {
  return search_occurrences(host, pattern, false, [](const std::vector<int>&) { return true; });
}

Permutation apply_move(const Permutation& host, const Move& move) {
  const auto& positions = move.occurrence.positions;
  const int c = static_cast<int>(positions.size());
  if (c == 0 || move.occurrence.matched.size() != c || move.target.size() != c) {
    throw StaleOccurrence("move has mismatched pattern and occurrence lengths");
  }
  std::vector<int> letters;
  letters.reserve(positions.size());
  int previous = -1;
  for (int pos : positions) {
    if (pos <= previous || pos >= host.size()) {
      throw StaleOccurrence(fmt::format("position {} invalid for host {}", pos, host.to_string()));
    }
    previous = pos;
    letters.push_back(host[pos]);
  }
  if (pattern_of(letters) != move.occurrence.matched) {
    throw StaleOccurrence(fmt::format("occurrence does not realize {} in {}",
                                      move.occurrence.matched.to_string(), host.to_string()));
  }
  std::vector<int> sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out = host.to_vector();
  for (int i = 0; i < c; ++i) {
    out[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] =
        sorted[static_cast<std::size_t>(move.target[i] - 1)];
  }
  return Permutation(out);
}

std::vector<Move> moves(const Permutation& host, const ReplacementSet& pi) {
  std::vector<Move> out;
  if (pi.size() < 2) return out;
  for (const auto& matched : pi.patterns()) {
    for (auto& occ : occurrences(host, matched, pi.adjacency())) {
      for (const auto& target : pi.patterns()) {
        if (target != matched) out.push_back(Move{occ, target});
      }
    }
  }
  return out;
}

std::vector<Permutation> neighbors(const Permutation& host, const ReplacementSet& pi) {
  std::vector<Permutation> out;
  for (const auto& move : moves(host, pi)) out.push_back(apply_move(host, move));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, host);
  return out;
}

std::vector<Permutation> rotations(const Permutation& m) {
  std::vector<int> word = m.to_vector();
  std::vector<Permutation> out;
  for (int i = 0; i < m.size(); ++i) {
    out.emplace_back(word);
    std::rotate(word.begin(), word.begin() + 1, word.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ReplacementSet rotation_set(const Permutation& m) { return ReplacementSet(rotations(m), true); }

Permutation rotate_to_leading_one(const Permutation& m) {
  std::vector<int> word = m.to_vector();
  auto one = std::find(word.begin(), word.end(), 1);
  if (one == word.end()) throw InvalidWord("pattern does not contain the letter 1");
  std::rotate(word.begin(), one, word.end());
  return Permutation(word);
}

MoveGenerator::MoveGenerator(int n, const ReplacementSet& pi) : n_(n), c_(pi.pattern_length()) {
  if (n < 0 || n > kMaxLength) {
    throw CapError(fmt::format("n = {} outside 0..{}", n, kMaxLength));
  }
  for (const auto& p : pi.patterns()) {
    std::array<std::uint8_t, kMaxLength> zero{};
    for (int i = 0; i < c_; ++i) zero[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p[i] - 1);
    patterns_.push_back(zero);
    pattern_ranks_.push_back(rank(p));
  }
  if (c_ <= 8) {
    slot_table_.assign(kFactorial[static_cast<std::size_t>(c_)], std::int32_t{-1});
    for (std::size_t i = 0; i < pattern_ranks_.size(); ++i) {
      slot_table_[pattern_ranks_[i]] = static_cast<std::int32_t>(i);
    }
  }
  if (c_ > n_) return;

  if (pi.adjacency()) {
    for (int start = 0; start + c_ <= n_; ++start) {
      for (int i = 0; i < c_; ++i) subsets_.push_back(static_cast<std::uint8_t>(start + i));
    }
  } else {
    // c-subsets of positions in lexicographic order.
    std::vector<std::uint8_t> pick(static_cast<std::size_t>(c_));
    for (int i = 0; i < c_; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    while (true) {
      subsets_.insert(subsets_.end(), pick.begin(), pick.end());
      int i = c_ - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n_ - c_ + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < c_; ++j) {
        pick[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(pick[static_cast<std::size_t>(j - 1)] + 1);
      }
    }
  }
  subset_count_ = subsets_.size() / static_cast<std::size_t>(c_);
}

bool MoveGenerator::has_move(const std::uint8_t* letters) const {
  if (patterns_.size() < 2) return false;
  std::array<std::uint8_t, kMaxLength> values{};
  const auto c = static_cast<std::size_t>(c_);
  for (std::size_t s = 0; s < subset_count_; ++s) {
    const std::uint8_t* pos = &subsets_[s * c];
    for (std::size_t i = 0; i < c; ++i) values[i] = letters[pos[i]];
    if (slot_of(values.data()) >= 0) return true;
  }
  return false;
}

}  // namespace permclass
