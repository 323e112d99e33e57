#include "permclass/perm_core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include <fmt/format.h>

#include "permclass/errors.hpp"

namespace permclass {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Permutation::Permutation(std::span<const int> letters) {
  if (letters.size() > static_cast<std::size_t>(kMaxLength)) {
    throw CapError(fmt::format("permutation length {} exceeds the cap of {}", letters.size(),
                               kMaxLength));
  }
  const int n = static_cast<int>(letters.size());
  unsigned seen = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const int v = letters[i];
    if (v < 1 || v > n) {
      throw InvalidWord(fmt::format("letter {} at position {} is outside 1..{}", v, i + 1, n));
    }
    if (seen & (1u << v)) {
      throw InvalidWord(fmt::format("letter {} repeated at position {}", v, i + 1));
    }
    seen |= 1u << v;
    letters_[i] = static_cast<Letter>(v);
  }
  n_ = static_cast<std::uint8_t>(n);
}

Permutation::Permutation(std::initializer_list<int> letters)
    : Permutation(std::span<const int>(letters.begin(), letters.size())) {}

Permutation::Permutation(Unchecked, std::span<const Letter> letters) {
  std::copy(letters.begin(), letters.end(), letters_.begin());
  n_ = static_cast<std::uint8_t>(letters.size());
}

Permutation from_letters_unchecked(std::span<const Permutation::Letter> letters) {
  return Permutation(Permutation::Unchecked{}, letters);
}

Permutation Permutation::identity(int n) {
  if (n < 0 || n > kMaxLength) {
    throw CapError(fmt::format("permutation length {} outside 0..{}", n, kMaxLength));
  }
  std::array<Letter, kMaxLength> id{};
  std::iota(id.begin(), id.begin() + n, Letter{1});
  return from_letters_unchecked({id.data(), static_cast<std::size_t>(n)});
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  auto parse_int = [&](std::string_view token) {
    int v = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (token.empty() || ec != std::errc{} || ptr != end) {
      throw InvalidWord(fmt::format("bad letter '{}' in permutation '{}'", token, text));
    }
    values.push_back(v);
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      parse_int(text.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) parse_int(text.substr(i, 1));
  }
  if (values.empty()) throw InvalidWord("empty permutation");
  return Permutation(values);
}

std::vector<int> Permutation::to_vector() const {
  return {letters_.begin(), letters_.begin() + n_};
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (n_ > 9 && i > 0) out.push_back(',');
    out += std::to_string(letters_[static_cast<std::size_t>(i)]);
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < n_; ++i) {
    if (letters_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

Rank rank(const Permutation& p) {
  std::array<std::uint8_t, kMaxLength> zero{};
  for (int i = 0; i < p.size(); ++i) zero[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p[i] - 1);
  return lehmer::rank0(zero.data(), p.size());
}

Permutation unrank(Rank r, int n) {
  if (n < 0 || n > kMaxLength) {
    throw CapError(fmt::format("permutation length {} outside 0..{}", n, kMaxLength));
  }
  if (r >= kFactorial[static_cast<std::size_t>(n)]) {
    throw OutOfRange(fmt::format("rank {} out of range for n = {} (n! = {})", r, n,
                                 kFactorial[static_cast<std::size_t>(n)]));
  }
  std::array<std::uint8_t, kMaxLength> letters{};
  lehmer::unrank0(r, n, letters.data());
  for (int i = 0; i < n; ++i) ++letters[static_cast<std::size_t>(i)];
  return from_letters_unchecked({letters.data(), static_cast<std::size_t>(n)});
}

std::uint64_t inversions(const Permutation& p) {
  std::uint64_t count = 0;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) count += p[i] > p[j] ? 1 : 0;
  }
  return count;
}

Parity parity(const Permutation& p) { return static_cast<Parity>(inversions(p) & 1u); }

namespace {

// Patience sorting: length of the longest strictly increasing subsequence.
int patience_length(std::span<const int> word) {
  std::vector<int> tails;
  for (int v : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

}  // namespace

MonotoneLengths longest_monotone(const Permutation& p) {
  std::vector<int> word = p.to_vector();
  MonotoneLengths out;
  out.lis = patience_length(word);
  for (int& v : word) v = -v;
  out.lds = patience_length(word);
  return out;
}

Permutation pattern_of(std::span<const int> word) {
  if (word.empty()) throw InvalidWord("cannot standardize an empty word");
  if (word.size() > static_cast<std::size_t>(kMaxLength)) {
    throw CapError(fmt::format("word length {} exceeds the cap of {}", word.size(), kMaxLength));
  }
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw InvalidWord(fmt::format("duplicate entry {} in word", *dup));
  }
  std::vector<int> ranks(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[i]) -
                                sorted.begin()) + 1;
  }
  return Permutation(ranks);
}

}  // namespace permclass
