#include "permclass/class_engine.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <memory>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "permclass/errors.hpp"
#include "permclass/frontier_queue.hpp"

namespace permclass {

namespace {

// Marks are monotone: once a bit is set it is never cleared, so concurrent
// test_and_set calls only race on who claims a rank first.
class AtomicBitset {
 public:
  explicit AtomicBitset(std::uint64_t bits)
      : words_((bits + 63) / 64), data_(std::make_unique<std::atomic<std::uint64_t>[]>(words_)) {
    for (std::uint64_t i = 0; i < words_; ++i) data_[i].store(0, std::memory_order_relaxed);
  }

  static std::uint64_t bytes_for(std::uint64_t bits) { return (bits + 63) / 64 * 8; }

  // Returns true if the bit was already set.
  bool test_and_set(std::uint64_t i) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    auto& word = data_[i >> 6];
    if (word.load(std::memory_order_relaxed) & mask) return true;
    return (word.fetch_or(mask, std::memory_order_relaxed) & mask) != 0;
  }

  std::uint64_t word(std::uint64_t w) const noexcept {
    return data_[w].load(std::memory_order_relaxed);
  }
  void or_word(std::uint64_t w, std::uint64_t mask) noexcept {
    data_[w].fetch_or(mask, std::memory_order_relaxed);
  }
  std::uint64_t word_count() const noexcept { return words_; }

 private:
  std::uint64_t words_;
  std::unique_ptr<std::atomic<std::uint64_t>[]> data_;
};

std::uint64_t minimum_frontier_bytes(const EngineOptions& options) {
  const auto threads = static_cast<std::uint64_t>(std::max(options.threads, 1));
  return (2 * threads + 4) * options.chunk_ranks * sizeof(Rank);
}

void check_n(int n, const ReplacementSet& pi) {
  if (n > kMaxLength || n < 1) {
    throw CapError(fmt::format("n = {} outside the supported range 1..{}", n, kMaxLength));
  }
  if (pi.size() == 0) throw InvalidWord("empty replacement set");
  if (pi.pattern_length() > n) {
    throw OutOfRange(fmt::format("pattern length {} exceeds n = {}", pi.pattern_length(), n));
  }
}

Permutation to_permutation(const std::uint8_t* zero_based, int n) {
  std::array<std::uint8_t, kMaxLength> one{};
  for (int i = 0; i < n; ++i) one[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(zero_based[i] + 1);
  return from_letters_unchecked({one.data(), static_cast<std::size_t>(n)});
}

// Per-worker accumulator for one component.
struct ComponentTally {
  std::uint64_t size = 0;
  Rank min_rank = std::numeric_limits<Rank>::max();
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  std::vector<std::uint64_t> hits;

  void merge(const ComponentTally& other) {
    size += other.size;
    min_rank = std::min(min_rank, other.min_rank);
    even += other.even;
    odd += other.odd;
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += other.hits[i];
  }
};

class Enumerator {
 public:
  Enumerator(int n, const ReplacementSet& pi, const EngineOptions& options)
      : n_(n),
        total_(kFactorial[static_cast<std::size_t>(n)]),
        options_(options),
        generator_(n, pi),
        visited_(total_) {}

  std::uint64_t mark_isolated();
  ClassSummary expand_component(Rank seed, FrontierQueue& current, FrontierQueue& next);

  AtomicBitset& visited() { return visited_; }
  std::uint64_t peak_frontier() const { return peak_frontier_; }

 private:
  void drain(FrontierQueue& current, FrontierQueue& next, ComponentTally& tally);

  int n_;
  Rank total_;
  const EngineOptions& options_;
  MoveGenerator generator_;
  AtomicBitset visited_;
  std::uint64_t peak_frontier_ = 0;
};

// Permutations without any available move are their own singleton classes.
// They are marked up front in parallel; disjoint word ranges per worker.
std::uint64_t Enumerator::mark_isolated() {
  const int threads = std::max(options_.threads, 1);
  const std::uint64_t words = visited_.word_count();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(threads), 0);
  auto work = [&](int t) {
    const std::uint64_t w_begin = words * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(threads);
    const std::uint64_t w_end = words * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(threads);
    const Rank r_begin = w_begin * 64;
    const Rank r_end = std::min<Rank>(w_end * 64, total_);
    if (r_begin >= r_end) return;
    std::array<std::uint8_t, kMaxLength> letters{};
    lehmer::unrank0(r_begin, n_, letters.data());
    std::uint64_t mask = 0;
    std::uint64_t current_word = w_begin;
    std::uint64_t isolated = 0;
    for (Rank r = r_begin; r < r_end; ++r) {
      if ((r >> 6) != current_word) {
        if (mask) visited_.or_word(current_word, mask);
        mask = 0;
        current_word = r >> 6;
      }
      if (!generator_.has_move(letters.data())) {
        mask |= std::uint64_t{1} << (r & 63);
        ++isolated;
      }
      std::next_permutation(letters.begin(), letters.begin() + n_);
    }
    if (mask) visited_.or_word(current_word, mask);
    counts[static_cast<std::size_t>(t)] = isolated;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

void Enumerator::drain(FrontierQueue& current, FrontierQueue& next, ComponentTally& tally) {
  std::vector<Rank> chunk;
  std::vector<Rank> out;
  out.reserve(options_.chunk_ranks);
  std::array<std::uint8_t, kMaxLength> letters{};
  while (current.pop(chunk)) {
    for (const Rank r : chunk) {
      const Parity par = lehmer::unrank0(r, n_, letters.data());
      ++tally.size;
      tally.min_rank = std::min(tally.min_rank, r);
      (par == Parity::Even ? tally.even : tally.odd) += 1;
      if (!options_.probes.empty()) {
        const Permutation member = to_permutation(letters.data(), n_);
        for (std::size_t i = 0; i < options_.probes.size(); ++i) {
          if (options_.probes[i].test(member)) ++tally.hits[i];
        }
      }
      generator_.for_each_neighbor(letters.data(), [&](const std::uint8_t* neighbor) {
        const Rank nr = lehmer::rank0(neighbor, n_);
        if (visited_.test_and_set(nr)) return;
        out.push_back(nr);
        if (out.size() >= options_.chunk_ranks) {
          next.push(std::move(out));
          out = {};
          out.reserve(options_.chunk_ranks);
        }
      });
    }
  }
  next.push(std::move(out));
}

ClassSummary Enumerator::expand_component(Rank seed, FrontierQueue& current, FrontierQueue& next) {
  visited_.test_and_set(seed);
  current.push(std::vector<Rank>{seed});
  ComponentTally total;
  total.hits.assign(options_.probes.size(), 0);
  FrontierQueue* cur = &current;
  FrontierQueue* nxt = &next;
  const int threads = std::max(options_.threads, 1);
  while (!cur->empty()) {
    peak_frontier_ = std::max(peak_frontier_, cur->size());
    if (threads == 1 || cur->chunk_count() < 2) {
      drain(*cur, *nxt, total);
    } else {
      std::vector<ComponentTally> tallies(static_cast<std::size_t>(threads));
      for (auto& t : tallies) t.hits.assign(options_.probes.size(), 0);
      {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
          pool.emplace_back([&, t] { drain(*cur, *nxt, tallies[static_cast<std::size_t>(t)]); });
        }
      }
      for (const auto& t : tallies) total.merge(t);
    }
    std::swap(cur, nxt);
  }
  ClassSummary summary;
  summary.size = total.size;
  summary.representative = unrank(total.min_rank, n_);
  summary.even_count = total.even;
  summary.odd_count = total.odd;
  summary.probe_hits = std::move(total.hits);
  return summary;
}

// Rough per-entry cost of the hash containers used by the single-class
// searches.
constexpr std::uint64_t kHashEntryBytes = 48;

void check_search_budget(std::uint64_t entries, const EngineOptions& options) {
  const std::uint64_t projected = entries * kHashEntryBytes;
  if (projected > options.memory_budget) {
    throw ResourceError(fmt::format("class search needs more than the memory budget of {} bytes",
                                    options.memory_budget),
                        projected, options.memory_budget);
  }
}

}  // namespace

ClassPartition enumerate_classes(int n, const ReplacementSet& pi, const EngineOptions& options) {
  check_n(n, pi);
  const Rank total = kFactorial[static_cast<std::size_t>(n)];
  const std::uint64_t bitset_bytes = AtomicBitset::bytes_for(total);
  const std::uint64_t minimum = bitset_bytes + minimum_frontier_bytes(options);
  if (minimum > options.memory_budget) {
    throw ResourceError(
        fmt::format("enumerating S_{} needs at least {} bytes, above the memory budget of {} bytes",
                    n, minimum, options.memory_budget),
        minimum, options.memory_budget);
  }
  const std::uint64_t queue_cap = (options.memory_budget - bitset_bytes) / 2;

  ClassPartition out;
  out.n = n;
  out.pi = pi;
  for (const auto& probe : options.probes) out.probe_names.push_back(probe.name);

  Enumerator engine(n, pi, options);
  out.singleton_count = engine.mark_isolated();

  FrontierQueue current(queue_cap);
  FrontierQueue next(queue_cap);
  AtomicBitset& visited = engine.visited();
  for (std::uint64_t w = 0; w < visited.word_count(); ++w) {
    // Re-read after each component: the search marks bits in this word too.
    for (std::uint64_t free = ~visited.word(w); free != 0; free = ~visited.word(w)) {
      const Rank seed = w * 64 + static_cast<Rank>(__builtin_ctzll(free));
      if (seed >= total) break;
      ClassSummary summary = engine.expand_component(seed, current, next);
      if (summary.size == 1) {
        ++out.singleton_count;
      } else {
        out.classes.push_back(std::move(summary));
      }
    }
  }
  out.class_count_nontrivial = out.classes.size();
  out.class_count_total = out.class_count_nontrivial + out.singleton_count;
  out.stats.spilled_runs = current.spilled_runs() + next.spilled_runs();
  out.stats.peak_frontier = engine.peak_frontier();
  return out;
}

std::uint64_t nontrivial_count(const ClassPartition& partition) {
  return partition.class_count_nontrivial;
}

ClassSummary class_of(const Permutation& p, const ReplacementSet& pi, const EngineOptions& options) {
  check_n(p.size(), pi);
  const int n = p.size();
  MoveGenerator generator(n, pi);
  std::unordered_set<Rank> seen;
  std::vector<Rank> stack;
  const Rank start = rank(p);
  seen.insert(start);
  stack.push_back(start);
  ClassSummary summary;
  summary.probe_hits.assign(options.probes.size(), 0);
  Rank min_rank = start;
  std::array<std::uint8_t, kMaxLength> letters{};
  while (!stack.empty()) {
    const Rank r = stack.back();
    stack.pop_back();
    const Parity par = lehmer::unrank0(r, n, letters.data());
    ++summary.size;
    min_rank = std::min(min_rank, r);
    (par == Parity::Even ? summary.even_count : summary.odd_count) += 1;
    if (!options.probes.empty()) {
      const Permutation member = to_permutation(letters.data(), n);
      for (std::size_t i = 0; i < options.probes.size(); ++i) {
        if (options.probes[i].test(member)) ++summary.probe_hits[i];
      }
    }
    generator.for_each_neighbor(letters.data(), [&](const std::uint8_t* neighbor) {
      const Rank nr = lehmer::rank0(neighbor, n);
      if (seen.insert(nr).second) stack.push_back(nr);
    });
    check_search_budget(seen.size() + stack.size(), options);
  }
  summary.representative = unrank(min_rank, n);
  return summary;
}

EquivalenceResult are_equivalent(const Permutation& a, const Permutation& b,
                                 const ReplacementSet& pi, bool want_certificate,
                                 const EngineOptions& options) {
  if (a.size() != b.size()) {
    throw InvalidWord(fmt::format("cannot compare permutations of lengths {} and {}", a.size(),
                                  b.size()));
  }
  EquivalenceResult result;
  if (a == b) {
    result.equivalent = true;
    return result;
  }
  check_n(a.size(), pi);
  const int n = a.size();
  MoveGenerator generator(n, pi);
  const Rank source = rank(a);
  const Rank target = rank(b);
  // Breadth-first so certificates are shortest move sequences.
  std::unordered_map<Rank, Rank> parent;
  std::deque<Rank> queue;
  parent.emplace(source, source);
  queue.push_back(source);
  std::array<std::uint8_t, kMaxLength> letters{};
  bool found = false;
  while (!queue.empty() && !found) {
    const Rank r = queue.front();
    queue.pop_front();
    lehmer::unrank0(r, n, letters.data());
    generator.for_each_neighbor(letters.data(), [&](const std::uint8_t* neighbor) {
      const Rank nr = lehmer::rank0(neighbor, n);
      if (parent.emplace(nr, r).second) {
        queue.push_back(nr);
        if (nr == target) found = true;
      }
    });
    check_search_budget(parent.size(), options);
  }
  result.equivalent = found;
  if (!found || !want_certificate) return result;

  std::vector<Rank> path{target};
  while (path.back() != source) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Permutation from = unrank(path[i], n);
    const Permutation to = unrank(path[i + 1], n);
    for (auto& move : moves(from, pi)) {
      if (apply_move(from, move) == to) {
        result.certificate.push_back(std::move(move));
        break;
      }
    }
  }
  return result;
}

std::vector<ClassSummary> representatives_with_prefix_property(const ClassPartition& partition,
                                                               const ClassPredicate& predicate) {
  if (!predicate) return partition.classes;
  std::vector<ClassSummary> out;
  std::copy_if(partition.classes.begin(), partition.classes.end(), std::back_inserter(out),
               predicate);
  return out;
}

ClassPredicate has_probe_hit(const ClassPartition& partition, const std::string& probe_name) {
  const auto it = std::find(partition.probe_names.begin(), partition.probe_names.end(), probe_name);
  if (it == partition.probe_names.end()) {
    throw InvalidWord(fmt::format("no member probe named '{}'", probe_name));
  }
  const auto index = static_cast<std::size_t>(it - partition.probe_names.begin());
  return [index](const ClassSummary& cls) { return cls.probe_hits.at(index) > 0; };
}

}  // namespace permclass
