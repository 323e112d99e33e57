#include "permclass/pseudo_rotational.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>

#include "permclass/errors.hpp"
#include "permclass/pattern_engine.hpp"

namespace permclass {

PseudoPermutation::PseudoPermutation(std::vector<int> word, int n, Permutation m)
    : word_(std::move(word)), n_(n), m_(std::move(m)) {
  const int c = m_.size();
  if (c < 1 || m_[0] != 1) {
    throw InvalidWord(fmt::format("pattern '{}' must begin with 1", m_.to_string()));
  }
  if (n < c || n > kMaxLength) {
    throw InvalidWord(fmt::format("ambient length {} must lie in {}..{}", n, c, kMaxLength));
  }
  if (static_cast<int>(word_.size()) != n - c + 1) {
    throw InvalidWord(fmt::format("pseudo-permutation needs {} letters, got {}", n - c + 1,
                                  word_.size()));
  }
  int p_count = 0;
  unsigned seen = 0;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    const int v = word_[i];
    if (v == kP) {
      ++p_count;
      p_pos_ = static_cast<int>(i);
      continue;
    }
    if (v < 1 || v > n) throw InvalidWord(fmt::format("letter {} outside 1..{}", v, n));
    if (seen & (1u << v)) throw InvalidWord(fmt::format("letter {} repeated", v));
    seen |= 1u << v;
  }
  if (p_count != 1) {
    throw InvalidWord(fmt::format("pseudo-permutation needs exactly one p, found {}", p_count));
  }
}

PseudoPermutation PseudoPermutation::parse(std::string_view text, int n, const Permutation& m) {
  std::vector<std::string_view> tokens;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      tokens.push_back(text.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) tokens.push_back(text.substr(i, 1));
  }
  std::vector<int> word;
  for (auto token : tokens) {
    if (token == "p") {
      word.push_back(kP);
      continue;
    }
    int v = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (token.empty() || ec != std::errc{} || ptr != end || v == kP) {
      throw InvalidWord(fmt::format("bad letter '{}' in pseudo-permutation '{}'", token, text));
    }
    word.push_back(v);
  }
  return PseudoPermutation(std::move(word), n, m);
}

std::vector<int> PseudoPermutation::pattern_letters() const {
  std::vector<bool> present(static_cast<std::size_t>(n_ + 1), false);
  for (int v : word_) {
    if (v != kP) present[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (!present[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::string PseudoPermutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (n_ > 9 && i > 0) out.push_back(',');
    out += word_[i] == kP ? std::string("p") : std::to_string(word_[i]);
  }
  return out;
}

Permutation representative(const PseudoPermutation& tau) {
  const auto inside = tau.pattern_letters();
  const auto& m = tau.pattern();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(tau.n()));
  for (int v : tau.word()) {
    if (v != PseudoPermutation::kP) {
      out.push_back(v);
      continue;
    }
    for (int i = 0; i < m.size(); ++i) out.push_back(inside[static_cast<std::size_t>(m[i] - 1)]);
  }
  return Permutation(out);
}

Bracket bracket(const PseudoPermutation& tau, int a) {
  const auto inside = tau.pattern_letters();
  Bracket out;
  auto above = std::upper_bound(inside.begin(), inside.end(), a);
  if (above != inside.end()) out.plus = *above;
  auto below = std::lower_bound(inside.begin(), inside.end(), a);
  if (below != inside.begin()) out.minus = *std::prev(below);
  return out;
}

std::vector<PseudoPermutation> pseudo_rotation_neighbors(const PseudoPermutation& tau) {
  std::vector<PseudoPermutation> out;
  const auto& word = tau.word();
  const int p = tau.p_position();
  const int len = static_cast<int>(word.size());
  auto emit = [&](int letter_pos, int replacement, bool letter_goes_left) {
    std::vector<int> next = word;
    // The letter next to p moves into the pattern; the bracketing pattern
    // letter comes out on the opposite side of p.
    const int lo = std::min(p, letter_pos);
    if (letter_goes_left) {
      next[static_cast<std::size_t>(lo)] = replacement;
      next[static_cast<std::size_t>(lo + 1)] = PseudoPermutation::kP;
    } else {
      next[static_cast<std::size_t>(lo)] = PseudoPermutation::kP;
      next[static_cast<std::size_t>(lo + 1)] = replacement;
    }
    out.emplace_back(std::move(next), tau.n(), tau.pattern());
  };
  // pa -> (a±)p
  if (p + 1 < len) {
    const auto b = bracket(tau, word[static_cast<std::size_t>(p + 1)]);
    if (b.plus) emit(p + 1, *b.plus, true);
    if (b.minus) emit(p + 1, *b.minus, true);
  }
  // ap -> p(a±)
  if (p > 0) {
    const auto b = bracket(tau, word[static_cast<std::size_t>(p - 1)]);
    if (b.plus) emit(p - 1, *b.plus, false);
    if (b.minus) emit(p - 1, *b.minus, false);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Parity pseudo_parity(const PseudoPermutation& tau) {
  const auto& word = tau.word();
  unsigned total = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == PseudoPermutation::kP) continue;
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      if (word[j] != PseudoPermutation::kP && word[i] > word[j]) ++total;
    }
    const bool before = static_cast<int>(i) < tau.p_position();
    const bool odd = word[i] % 2 == 1;
    if (before == odd) ++total;
  }
  return static_cast<Parity>(total & 1u);
}

PseudoIndex::PseudoIndex(int n, Permutation m) : n_(n), free_(n - m.size()), m_(std::move(m)) {
  if (free_ < 0 || n > kMaxLength) {
    throw OutOfRange(fmt::format("no pseudo-permutations for n = {} and c = {}", n, m_.size()));
  }
  binom_.assign(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(n + 2), 0));
  for (int i = 0; i <= n; ++i) {
    binom_[static_cast<std::size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j) {
      binom_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          binom_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          (j <= i - 1 ? binom_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : 0);
    }
  }
  states_ = binom_[static_cast<std::size_t>(n)][static_cast<std::size_t>(free_)] *
            kFactorial[static_cast<std::size_t>(free_ + 1)];
}

std::uint64_t PseudoIndex::encode(const PseudoPermutation& tau) const {
  std::vector<int> letters;
  for (int v : tau.word()) {
    if (v != PseudoPermutation::kP) letters.push_back(v);
  }
  std::vector<int> sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  // Colex rank of the present-letter set.
  std::uint64_t comb = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    comb += binom_[static_cast<std::size_t>(sorted[i] - 1)][i + 1];
  }
  std::array<std::uint8_t, kMaxLength> order{};
  for (std::size_t i = 0; i < letters.size(); ++i) {
    order[i] = static_cast<std::uint8_t>(
        std::lower_bound(sorted.begin(), sorted.end(), letters[i]) - sorted.begin());
  }
  const std::uint64_t arrangement = lehmer::rank0(order.data(), free_);
  return (comb * kFactorial[static_cast<std::size_t>(free_)] + arrangement) *
             static_cast<std::uint64_t>(free_ + 1) +
         static_cast<std::uint64_t>(tau.p_position());
}

PseudoPermutation PseudoIndex::decode(std::uint64_t index) const {
  const auto slots = static_cast<std::uint64_t>(free_ + 1);
  const auto p_pos = static_cast<std::size_t>(index % slots);
  index /= slots;
  const std::uint64_t arrangement = index % kFactorial[static_cast<std::size_t>(free_)];
  std::uint64_t comb = index / kFactorial[static_cast<std::size_t>(free_)];
  std::vector<int> sorted(static_cast<std::size_t>(free_));
  for (int i = free_ - 1; i >= 0; --i) {
    int x = i;
    while (x + 1 < n_ && binom_[static_cast<std::size_t>(x + 1)][static_cast<std::size_t>(i + 1)] <= comb) ++x;
    sorted[static_cast<std::size_t>(i)] = x + 1;
    comb -= binom_[static_cast<std::size_t>(x)][static_cast<std::size_t>(i + 1)];
  }
  std::array<std::uint8_t, kMaxLength> order{};
  lehmer::unrank0(arrangement, free_, order.data());
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(free_ + 1));
  for (int i = 0; i < free_; ++i) word.push_back(sorted[order[static_cast<std::size_t>(i)]]);
  word.insert(word.begin() + static_cast<std::ptrdiff_t>(p_pos), PseudoPermutation::kP);
  return PseudoPermutation(std::move(word), n_, m_);
}

PseudoPartition enumerate_pseudo_classes(int n, const Permutation& m, std::uint64_t memory_budget) {
  const Permutation lead = rotate_to_leading_one(m);
  const int c = lead.size();
  if (n < c + 1 || n > kMaxLength) {
    throw OutOfRange(fmt::format("pseudo-class enumeration needs {} <= n <= {}, got {}", c + 1,
                                 kMaxLength, n));
  }
  const PseudoIndex index(n, lead);
  const std::uint64_t states = index.state_count();
  // Visited bits plus a worst-case stack of every state.
  const std::uint64_t projected = states / 8 + 1 + states * sizeof(std::uint64_t);
  if (projected > memory_budget) {
    throw ResourceError(
        fmt::format("{} pseudo-permutation states need {} bytes, above the memory budget of {} bytes",
                    states, projected, memory_budget),
        projected, memory_budget);
  }

  PseudoPartition out;
  out.n = n;
  out.m = lead;
  out.state_count = states;
  std::vector<bool> visited(states, false);
  std::vector<std::uint64_t> stack;
  for (std::uint64_t seed = 0; seed < states; ++seed) {
    if (visited[seed]) continue;
    PseudoClass cls;
    cls.representative = index.decode(seed).to_string();
    visited[seed] = true;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::uint64_t s = stack.back();
      stack.pop_back();
      const PseudoPermutation tau = index.decode(s);
      ++cls.size;
      (pseudo_parity(tau) == Parity::Even ? cls.even_count : cls.odd_count) += 1;
      for (const auto& next : pseudo_rotation_neighbors(tau)) {
        const std::uint64_t t = index.encode(next);
        if (!visited[t]) {
          visited[t] = true;
          stack.push_back(t);
        }
      }
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

bool is_alternating(const Permutation& m) {
  if (m.size() < 2) return false;
  for (int i = 1; i + 1 < m.size(); ++i) {
    const bool up_before = m[i] > m[i - 1];
    const bool up_after = m[i + 1] > m[i];
    if (up_before == up_after) return false;
  }
  return true;
}

RotationalProfile rotational_profile(const Permutation& m, int n_max, const EngineOptions& options) {
  if (n_max > kMaxLength) {
    throw CapError(fmt::format("n_max = {} exceeds the cap of {}", n_max, kMaxLength));
  }
  RotationalProfile out;
  out.m = m;
  out.alternating = is_alternating(m);
  out.parity_split_expected = m.size() % 2 == 1;
  const ReplacementSet pi = rotation_set(m);
  for (int n = m.size() + 1; n <= n_max; ++n) {
    const std::uint64_t f = enumerate_classes(n, pi, options).class_count_nontrivial;
    out.f[n] = f;
    if (f == 1 && !out.t) out.t = n;
  }
  return out;
}

}  // namespace permclass
