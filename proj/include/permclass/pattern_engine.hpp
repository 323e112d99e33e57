#pragma once

// Pattern occurrences and replacement moves: the generator of a
// pattern-replacement equivalence.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permclass/perm_core.hpp"

namespace permclass {

// A set of equal-length patterns, optionally restricted to occurrences on
// consecutive positions. Patterns are kept sorted and deduplicated.
class ReplacementSet {
 public:
  ReplacementSet() = default;
  ReplacementSet(std::vector<Permutation> patterns, bool adjacency);

  // "1234,3421" or "adj:1324,3241,2413,4132". Patterns of length >= 10 are
  // written with comma separated letters and the patterns separated by ';'.
  static ReplacementSet parse(std::string_view text);

  const std::vector<Permutation>& patterns() const noexcept { return patterns_; }
  bool adjacency() const noexcept { return adjacency_; }
  int pattern_length() const noexcept { return c_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  bool contains(const Permutation& pattern) const;

  // Canonical form, also the cache key: sorted patterns with the "adj:" prefix
  // when adjacency is on.
  std::string to_string() const;

  friend bool operator==(const ReplacementSet&, const ReplacementSet&) = default;

 private:
  std::vector<Permutation> patterns_;
  bool adjacency_ = false;
  int c_ = 0;
};

// Positions are 0-based indices into the host, strictly increasing.
struct Occurrence {
  std::vector<int> positions;
  Permutation matched;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct Move {
  Occurrence occurrence;
  Permutation target;
  friend bool operator==(const Move&, const Move&) = default;
};

// All occurrences of `pattern` in `host`, in lexicographic order of position
// sequences. With `adjacency` only windows of consecutive positions count.
std::vector<Occurrence> occurrences(const Permutation& host, const Permutation& pattern,
                                    bool adjacency = false);

bool contains(const Permutation& host, const Permutation& pattern);

// Rewrites the letters at the occurrence positions so they form move.target.
// Throws StaleOccurrence if the occurrence does not match `host`.
Permutation apply_move(const Permutation& host, const Move& move);

// Every permutation one non-identity replacement away from `host`, sorted.
std::vector<Permutation> neighbors(const Permutation& host, const ReplacementSet& pi);

// Every legal non-identity move on `host`, in occurrence order.
std::vector<Move> moves(const Permutation& host, const ReplacementSet& pi);

// Distinct cyclic word rotations of m, sorted.
std::vector<Permutation> rotations(const Permutation& m);

// The rotation set of m as an adjacency-constrained replacement set.
ReplacementSet rotation_set(const Permutation& m);

Permutation rotate_to_leading_one(const Permutation& m);

// Neighbor generation on raw letter arrays for a fixed (n, Π). Works with any
// letter base; the visitor receives a pointer to n letters that is only valid
// for the duration of the call. The same neighbor may be reported more than
// once.
class MoveGenerator {
 public:
  MoveGenerator(int n, const ReplacementSet& pi);

  int n() const noexcept { return n_; }

  template <class Visitor>
  void for_each_neighbor(const std::uint8_t* letters, Visitor&& visit) const {
    if (patterns_.size() < 2) return;
    std::array<std::uint8_t, kMaxLength> values{};
    std::array<std::uint8_t, kMaxLength> sorted{};
    std::array<std::uint8_t, kMaxLength> out{};
    const auto c = static_cast<std::size_t>(c_);
    for (std::size_t s = 0; s < subset_count_; ++s) {
      const std::uint8_t* pos = &subsets_[s * c];
      for (std::size_t i = 0; i < c; ++i) values[i] = letters[pos[i]];
      const int slot = slot_of(values.data());
      if (slot < 0) continue;
      const auto& matched = patterns_[static_cast<std::size_t>(slot)];
      for (std::size_t i = 0; i < c; ++i) sorted[matched[i]] = values[i];
      for (std::size_t t = 0; t < patterns_.size(); ++t) {
        if (static_cast<int>(t) == slot) continue;
        std::copy(letters, letters + n_, out.begin());
        const auto& target = patterns_[t];
        for (std::size_t i = 0; i < c; ++i) out[pos[i]] = sorted[target[i]];
        visit(static_cast<const std::uint8_t*>(out.data()));
      }
    }
  }

  // True iff at least one non-identity move exists.
  bool has_move(const std::uint8_t* letters) const;

 private:
  int slot_of(const std::uint8_t* values) const noexcept {
    const Rank r = lehmer::pattern_rank(values, c_);
    if (!slot_table_.empty()) return slot_table_[r];
    for (std::size_t i = 0; i < pattern_ranks_.size(); ++i) {
      if (pattern_ranks_[i] == r) return static_cast<int>(i);
    }
    return -1;
  }

  int n_ = 0;
  int c_ = 0;
  std::vector<std::uint8_t> subsets_;
  std::size_t subset_count_ = 0;
  // 0-based pattern letters, one array per pattern of Π.
  std::vector<std::array<std::uint8_t, kMaxLength>> patterns_;
  std::vector<Rank> pattern_ranks_;
  // pattern rank -> index into patterns_, or -1; only built for c <= 8.
  std::vector<std::int32_t> slot_table_;
};

}  // namespace permclass
