#pragma once

// Permutation values on letters 1..n (n <= 12), lexicographic ranking into
// [0, n!), parity and monotone-subsequence primitives.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permclass {

inline constexpr int kMaxLength = 12;

using Rank = std::uint64_t;

constexpr std::array<Rank, kMaxLength + 1> make_factorials() {
  std::array<Rank, kMaxLength + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= kMaxLength; ++i) f[i] = f[i - 1] * static_cast<Rank>(i);
  return f;
}

inline constexpr std::array<Rank, kMaxLength + 1> kFactorial = make_factorials();

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator^(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

const char* to_string(Parity p);

// A permutation of 1..n stored as its one-line notation.
class Permutation {
 public:
  using Letter = std::uint8_t;

  Permutation() = default;

  // Throws InvalidWord unless `letters` is a bijection on 1..n, and CapError
  // when n exceeds kMaxLength.
  explicit Permutation(std::span<const int> letters);
  explicit Permutation(const std::vector<int>& letters)
      : Permutation(std::span<const int>(letters)) {}
  Permutation(std::initializer_list<int> letters);

  static Permutation identity(int n);

  // Accepts concatenated digits ("21354") or comma separated values
  // ("10,1,2,3,4,5,6,7,8,9").
  static Permutation parse(std::string_view text);

  int size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  // 1-based letter at 0-based position i.
  int operator[](int i) const noexcept { return letters_[static_cast<std::size_t>(i)]; }

  std::span<const Letter> letters() const noexcept {
    return {letters_.data(), static_cast<std::size_t>(n_)};
  }
  std::vector<int> to_vector() const;

  // Digits concatenated for n <= 9, comma separated otherwise.
  std::string to_string() const;

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
    return a.n_ == b.n_ && a.letters_ == b.letters_;
  }
  // Length first, then lexicographic.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::span<const Letter> letters);

  friend Permutation from_letters_unchecked(std::span<const Letter> letters);

  std::array<Letter, kMaxLength> letters_{};
  std::uint8_t n_ = 0;
};

// Builds from letters already known to form a permutation of 1..n.
Permutation from_letters_unchecked(std::span<const Permutation::Letter> letters);

Rank rank(const Permutation& p);

// Throws OutOfRange when r >= n!.
Permutation unrank(Rank r, int n);

std::uint64_t inversions(const Permutation& p);
Parity parity(const Permutation& p);

struct MonotoneLengths {
  int lis = 0;
  int lds = 0;
  friend bool operator==(const MonotoneLengths&, const MonotoneLengths&) = default;
};

MonotoneLengths longest_monotone(const Permutation& p);

// Standardization: replaces each entry by its rank among the entries.
// Throws InvalidWord on duplicates or an empty word.
Permutation pattern_of(std::span<const int> word);

namespace lehmer {

// Hot-path routines on raw letter arrays. Letters may use any base as long as
// they are distinct values below kMaxLength + 1; the rank routines expect the
// 0-based letters 0..n-1.

// Lexicographic rank of a 0-based permutation.
inline Rank rank0(const std::uint8_t* letters, int n) noexcept {
  unsigned remaining = (1u << n) - 1u;
  Rank r = 0;
  for (int i = 0; i < n; ++i) {
    const unsigned bit = 1u << letters[i];
    const auto smaller = static_cast<Rank>(__builtin_popcount(remaining & (bit - 1u)));
    r += smaller * kFactorial[static_cast<std::size_t>(n - 1 - i)];
    remaining ^= bit;
  }
  return r;
}

// Writes the 0-based permutation with rank r and returns its inversion parity.
inline Parity unrank0(Rank r, int n, std::uint8_t* out) noexcept {
  unsigned remaining = (1u << n) - 1u;
  unsigned digit_sum = 0;
  for (int i = 0; i < n; ++i) {
    const Rank f = kFactorial[static_cast<std::size_t>(n - 1 - i)];
    auto digit = static_cast<unsigned>(r / f);
    r %= f;
    digit_sum += digit;
    unsigned m = remaining;
    while (digit-- > 0) m &= m - 1u;
    const int letter = __builtin_ctz(m);
    out[i] = static_cast<std::uint8_t>(letter);
    remaining &= ~(1u << letter);
  }
  return static_cast<Parity>(digit_sum & 1u);
}

// Lexicographic rank of the pattern formed by c distinct values (any base).
inline Rank pattern_rank(const std::uint8_t* values, int c) noexcept {
  Rank r = 0;
  for (int i = 0; i < c; ++i) {
    Rank smaller = 0;
    for (int j = i + 1; j < c; ++j) smaller += values[j] < values[i] ? 1 : 0;
    r += smaller * kFactorial[static_cast<std::size_t>(c - 1 - i)];
  }
  return r;
}

}  // namespace lehmer

}  // namespace permclass
