#pragma once

// Pseudo-permutations: permutations with one occurrence of a pattern m
// collapsed into a formal letter p. Provides the expansion back to a
// permutation, the pseudo-rotation moves, the pseudo-parity invariant, the
// exhaustive class enumeration over pseudo-permutations, and the rotational
// class profile f(n) of an m-rotational equivalence.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permclass/class_engine.hpp"
#include "permclass/perm_core.hpp"

namespace permclass {

class PseudoPermutation {
 public:
  // Stands for the formal letter p inside word().
  static constexpr int kP = 0;

  // `word` has length n - c + 1 with exactly one kP and distinct letters from
  // 1..n otherwise; `m` must begin with 1. Throws InvalidWord otherwise.
  PseudoPermutation(std::vector<int> word, int n, Permutation m);

  // "2p468" or "2,p,4,6,8".
  static PseudoPermutation parse(std::string_view text, int n, const Permutation& m);

  const std::vector<int>& word() const noexcept { return word_; }
  int n() const noexcept { return n_; }
  const Permutation& pattern() const noexcept { return m_; }
  int c() const noexcept { return m_.size(); }
  int p_position() const noexcept { return p_pos_; }

  // Letters of 1..n absent from the word, ascending: the letters "inside" p.
  std::vector<int> pattern_letters() const;

  std::string to_string() const;

  friend bool operator==(const PseudoPermutation& a, const PseudoPermutation& b) {
    return a.word_ == b.word_ && a.n_ == b.n_ && a.m_ == b.m_;
  }
  friend std::weak_ordering operator<=>(const PseudoPermutation& a, const PseudoPermutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
  int n_ = 0;
  Permutation m_;
  int p_pos_ = 0;
};

// Replaces p by the word on the pattern letters that is order-isomorphic to m.
Permutation representative(const PseudoPermutation& tau);

struct Bracket {
  std::optional<int> minus;  // largest pattern letter below a
  std::optional<int> plus;   // smallest pattern letter above a
};

Bracket bracket(const PseudoPermutation& tau, int a);

// All pseudo-rotations: "pa" becomes "(a+)p" or "(a-)p", and "ap" becomes
// "p(a+)" or "p(a-)", where a is the letter next to p and a+/a- are taken
// over the pattern letters. Sorted, no duplicates.
std::vector<PseudoPermutation> pseudo_rotation_neighbors(const PseudoPermutation& tau);

// Inversions among the integer letters, plus odd letters before p, plus even
// letters after p, modulo 2.
Parity pseudo_parity(const PseudoPermutation& tau);

// Dense index of all pseudo-permutations for fixed (n, m): present-letter set,
// relative order of the present letters, and the position of p.
class PseudoIndex {
 public:
  PseudoIndex(int n, Permutation m);

  std::uint64_t state_count() const noexcept { return states_; }
  std::uint64_t encode(const PseudoPermutation& tau) const;
  PseudoPermutation decode(std::uint64_t index) const;

 private:
  int n_;
  int free_;  // n - c integer letters
  Permutation m_;
  std::uint64_t states_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

struct PseudoClass {
  std::uint64_t size = 0;
  std::uint64_t even_count = 0;
  std::uint64_t odd_count = 0;
  // Member with the lowest dense index.
  std::string representative;

  bool parity_pure() const noexcept { return even_count == 0 || odd_count == 0; }
};

struct PseudoPartition {
  int n = 0;
  Permutation m;  // normalized to begin with 1
  std::uint64_t state_count = 0;
  std::vector<PseudoClass> classes;
};

// Components of the pseudo-rotation graph over every pseudo-permutation of
// length n. m is first rotated to begin with 1. Requires n >= c + 1; throws
// ResourceError when the state space does not fit in memory_budget.
PseudoPartition enumerate_pseudo_classes(int n, const Permutation& m,
                                         std::uint64_t memory_budget = std::uint64_t{4} << 30);

bool is_alternating(const Permutation& m);

struct RotationalProfile {
  Permutation m;
  std::map<int, std::uint64_t> f;  // n -> nontrivial class count
  std::optional<int> t;            // smallest recorded n with f(n) = 1
  bool alternating = false;
  // Odd pattern length: a parity invariant keeps two classes.
  bool parity_split_expected = false;
};

RotationalProfile rotational_profile(const Permutation& m, int n_max,
                                     const EngineOptions& options = {});

}  // namespace permclass
