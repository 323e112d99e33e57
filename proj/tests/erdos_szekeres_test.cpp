#include "doctest.h"

#include <algorithm>
#include <random>

#include "permclass/erdos_szekeres.hpp"
#include "permclass/errors.hpp"

namespace permclass {

namespace {

Permutation random_with_prefix(std::mt19937_64& rng, int n, int prefix) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(w.begin() + prefix, w.end(), rng);
  return Permutation(w);
}

void require_replay(const Permutation& a, const ChainResult& chain, int k) {
  const auto pi = es_pattern_set(k);
  Permutation cur = a;
  for (const auto& move : chain.moves) {
    REQUIRE(pi.contains(move.target));
    REQUIRE(pi.contains(move.occurrence.matched));
    const auto listed = occurrences(cur, move.occurrence.matched, false);
    REQUIRE(std::find(listed.begin(), listed.end(), move.occurrence) != listed.end());
    cur = apply_move(cur, move);
  }
  REQUIRE(cur == chain.result);
}

}  // namespace

TEST_CASE("thresholds and predictions") {
  const auto c3 = es_config(3, 6);
  CHECK(c3.threshold_proven == 18);
  CHECK(c3.threshold_leading_one == 15);
  CHECK(c3.threshold_conjectured == 6);
  CHECK(c3.predicted == 1);
  const auto c4 = es_config(4, 10);
  CHECK(c4.threshold_proven == 35);
  CHECK(c4.threshold_conjectured == 10);
  CHECK(c4.predicted == 2);
  CHECK(predicted_classes(5) == 2);
  CHECK(predicted_classes(6) == 1);
  CHECK(predicted_classes(7) == 1);
  CHECK_THROWS_AS(es_config(2, 5), OutOfRange);
  CHECK(es_pattern_set(3).to_string() == "123,321");
  CHECK(es_pattern_set(4).to_string() == "1234,4321");
}

TEST_CASE("one ES move flips parity by k(k-1)/2") {
  for (int k : {3, 4}) {
    const auto pi = es_pattern_set(k);
    const unsigned delta = static_cast<unsigned>(k * (k - 1) / 2) & 1u;
    for (Rank r = 0; r < kFactorial[6]; ++r) {
      const auto p = unrank(r, 6);
      for (const auto& q : neighbors(p, pi)) {
        REQUIRE((static_cast<unsigned>(parity(p)) ^ static_cast<unsigned>(parity(q))) == delta);
      }
    }
  }
}

TEST_CASE("prefix chain on displayed inputs") {
  const auto id = Permutation::parse("123456789");
  CHECK(normalize_prefix_chain(id, 3).moves.empty());

  const auto one = Permutation::parse("123465789");
  const auto c1 = normalize_prefix_chain(one, 3);
  CHECK(c1.result.to_string() == "213456789");
  CHECK(c1.moves.size() == 4);
  require_replay(one, c1, 3);

  // Two passes: the first swaps 1 and 2, the second swaps them back.
  const auto two = Permutation::parse("123457698");
  const auto c2 = normalize_prefix_chain(two, 3);
  CHECK(c2.result.is_identity());
  CHECK(c2.moves.size() == 8);
  require_replay(two, c2, 3);
}

TEST_CASE("prefix chain rejects a missing prefix") {
  try {
    normalize_prefix_chain(Permutation::parse("124356"), 3);
    FAIL("expected PrefixError");
  } catch (const PrefixError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(normalize_prefix_chain(Permutation::parse("213456"), 3), PrefixError);
  CHECK_THROWS_AS(normalize_prefix_chain(Permutation::parse("123"), 3), PrefixError);
}

TEST_CASE("prefix chain on random inputs") {
  std::mt19937_64 rng(20240611);
  for (int k : {3, 4}) {
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 * k - 2 + static_cast<int>(rng() % 5);
      const auto a = random_with_prefix(rng, std::min(n, kMaxLength), 2 * k - 2);
      const auto chain = normalize_prefix_chain(a, k);
      CHECK(chain.moves.size() % 2 == 0);
      CHECK(parity(chain.result) == parity(a));
      auto expect = Permutation::identity(a.size()).to_vector();
      if (!chain.result.is_identity()) std::swap(expect[0], expect[1]);
      CHECK(chain.result == Permutation(expect));
      require_replay(a, chain, k);
    }
  }
}

TEST_CASE("lex-min representatives stay near the diagonal") {
  for (int n : {6, 7}) CHECK(verify_lexmin_bound(enumerate_classes(n, es_pattern_set(3)), 3));
  ClassPartition far;
  ClassSummary cls;
  cls.size = 2;
  cls.representative = Permutation::parse("612345");
  far.classes.push_back(cls);
  CHECK_FALSE(verify_lexmin_bound(far, 3));
}

TEST_CASE("small ES cases") {
  auto r = verify_es_theorem(3, 5);
  CHECK(r.classes_total == 3);
  CHECK(r.singletons == 0);
  CHECK(r.regime == Regime::BelowThresholds);
  CHECK(r.no_avoiders);
  CHECK(r.pass);
  for (int n = 6; n <= 8; ++n) {
    r = verify_es_theorem(3, n);
    CHECK(r.classes_total == 1);
    CHECK(r.regime == Regime::AboveConjecturedThreshold);
    CHECK_FALSE(r.parity_pure);
    CHECK(r.leading_one);
    CHECK(r.pass);
  }
  for (int n = 6; n <= 8; ++n) {
    r = verify_es_theorem(4, n);
    CHECK(r.parity_pure);
    CHECK(r.regime == Regime::BelowThresholds);
  }
}

}  // namespace permclass
