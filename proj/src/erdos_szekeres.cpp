#include "permclass/erdos_szekeres.hpp"

#include <algorithm>
#include <cstdlib>

#include <fmt/format.h>

#include "permclass/errors.hpp"

namespace permclass {

EsConfig es_config(int k, int n) {
  if (k < 3) throw OutOfRange(fmt::format("k = {} is below 3", k));
  EsConfig out;
  out.k = k;
  out.n = n;
  const std::int64_t kk = k;
  out.threshold_proven = 3 * kk * kk - 4 * kk + 3;
  out.threshold_leading_one = 3 * kk * kk - 6 * kk + 6;
  out.threshold_conjectured = kk * kk - 2 * kk + (k % 2 == 1 ? 3 : 2);
  out.predicted = predicted_classes(k);
  return out;
}

ReplacementSet es_pattern_set(int k) {
  if (k < 2 || k > kMaxLength) throw OutOfRange(fmt::format("pattern length {} out of range", k));
  std::vector<int> up(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) up[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> down(up.rbegin(), up.rend());
  return ReplacementSet({Permutation(up), Permutation(down)}, false);
}

int predicted_classes(int k) {
  const int r = k % 4;
  return r == 2 || r == 3 ? 1 : 2;
}

namespace {

// Rearranges the letters at `positions` into increasing or decreasing order,
// after confirming the occurrence is genuinely listed for the host.
Move checked_move(const Permutation& host, std::vector<int> positions, bool to_decreasing,
                  const ReplacementSet& pi) {
  std::sort(positions.begin(), positions.end());
  const Permutation& up = pi.patterns()[0].is_identity() ? pi.patterns()[0] : pi.patterns()[1];
  const Permutation& down = up == pi.patterns()[0] ? pi.patterns()[1] : pi.patterns()[0];
  Move move{{positions, to_decreasing ? up : down}, to_decreasing ? down : up};
  const auto listed = occurrences(host, move.occurrence.matched, false);
  if (std::find(listed.begin(), listed.end(), move.occurrence) == listed.end()) {
    throw StaleOccurrence(fmt::format("chain step on {} is not an occurrence of {}",
                                      host.to_string(), move.occurrence.matched.to_string()));
  }
  return move;
}

}  // namespace

ChainResult normalize_prefix_chain(const Permutation& a, int k) {
  if (k < 3) throw OutOfRange(fmt::format("k = {} is below 3", k));
  const int n = a.size();
  const int prefix = 2 * k - 2;
  if (n < prefix) {
    throw PrefixError(fmt::format("length {} is shorter than the prefix 1..{}", n, prefix), n + 1);
  }
  for (int i = 0; i < prefix; ++i) {
    if (a[i] != i + 1) {
      throw PrefixError(fmt::format("{} must begin with 1..{}; position {} holds {}",
                                    a.to_string(), prefix, i + 1, a[i]),
                        i + 1);
    }
  }

  const ReplacementSet pi = es_pattern_set(k);
  ChainResult out{a, {}};
  auto step = [&](std::vector<int> positions, bool to_decreasing) {
    Move move = checked_move(out.result, std::move(positions), to_decreasing, pi);
    out.result = apply_move(out.result, move);
    out.moves.push_back(std::move(move));
  };

  std::vector<int> mid1;
  std::vector<int> mid2;
  for (int i = 2; i < k; ++i) mid1.push_back(i);
  for (int i = k; i < prefix; ++i) mid2.push_back(i);
  auto with = [](std::vector<int> base, std::initializer_list<int> extra) {
    base.insert(base.end(), extra);
    return base;
  };

  while (true) {
    // Positions 3..l already hold 3..l (0-based l is the first misfit).
    int l = prefix;
    while (l < n && out.result[l] == l + 1) ++l;
    if (l == n) break;
    int q = l + 1;
    while (out.result[q] != l + 1) ++q;
    step(with(with(mid1, {0}), {l}), true);
    step(with(with(mid2, {1}), {q}), true);
    step(with(with(mid1, {0}), {q}), false);
    step(with(with(mid2, {1}), {l}), false);
  }
  return out;
}

bool verify_lexmin_bound(const ClassPartition& partition, int k) {
  const int bound = (k - 1) * (k - 1);
  for (const auto& cls : partition.classes) {
    for (int i = 0; i < cls.representative.size(); ++i) {
      if (std::abs(cls.representative[i] - (i + 1)) > bound) return false;
    }
  }
  return true;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::AboveProvenThreshold:
      return "above proven threshold";
    case Regime::AboveConjecturedThreshold:
      return "above conjectured threshold";
    case Regime::BelowThresholds:
      break;
  }
  return "below thresholds";
}

EsReport verify_es_theorem(int k, int n, const EngineOptions& options) {
  const EsConfig config = es_config(k, n);
  EngineOptions opts = options;
  opts.probes.push_back({"leading_one", [](const Permutation& p) { return p[0] == 1; }});
  const ClassPartition part = enumerate_classes(n, es_pattern_set(k), opts);
  const std::size_t probe = part.probe_names.size() - 1;

  EsReport out;
  out.k = k;
  out.n = n;
  out.classes_total = part.class_count_total;
  out.classes_nontrivial = part.class_count_nontrivial;
  out.singletons = part.singleton_count;
  out.predicted = config.predicted;
  if (n >= config.threshold_proven) {
    out.regime = Regime::AboveProvenThreshold;
  } else if (n >= config.threshold_conjectured) {
    out.regime = Regime::AboveConjecturedThreshold;
  } else {
    out.regime = Regime::BelowThresholds;
  }
  out.parity_pure = std::all_of(part.classes.begin(), part.classes.end(),
                                [](const ClassSummary& c) { return c.parity_pure(); });
  out.no_avoiders = n <= (k - 1) * (k - 1) || part.singleton_count == 0;
  out.leading_one = std::all_of(part.classes.begin(), part.classes.end(),
                                [&](const ClassSummary& c) { return c.probe_hits[probe] > 0; });
  out.pass = out.no_avoiders;
  if (out.regime != Regime::BelowThresholds) {
    out.pass = out.pass && out.classes_total == static_cast<std::uint64_t>(out.predicted) &&
               (out.predicted == 1 || out.parity_pure);
  }
  return out;
}

}  // namespace permclass
