#include "doctest.h"

#include "oracles.hpp"
#include "permclass/errors.hpp"
#include "permclass/perm_core.hpp"

namespace permclass {

TEST_CASE("rank and unrank on small examples") {
  CHECK(rank(Permutation{1, 2, 3}) == 0);
  CHECK(rank(Permutation{3, 2, 1}) == 5);
  CHECK(unrank(0, 4) == Permutation{1, 2, 3, 4});
  CHECK(unrank(23, 4) == Permutation{4, 3, 2, 1});

  // Frozen from the lexicographic scan oracle.
  CHECK(oracle::scan_rank({2, 1, 3, 5, 4}) == 25);
  CHECK(rank(Permutation{2, 1, 3, 5, 4}) == 25);
  CHECK(unrank(25, 5) == Permutation{2, 1, 3, 5, 4});
  CHECK(oracle::all_permutations(4)[7] == oracle::Word{2, 1, 4, 3});
  CHECK(unrank(7, 4) == Permutation{2, 1, 4, 3});

  CHECK_THROWS_AS(unrank(24, 4), OutOfRange);
  CHECK_THROWS_AS(unrank(0, 13), CapError);
}

TEST_CASE("rank is the lexicographic position for every n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    Rank expected = 0;
    for (const auto& w : oracle::all_permutations(n)) {
      const Permutation p(w);
      REQUIRE(rank(p) == expected);
      REQUIRE(unrank(expected, n) == p);
      ++expected;
    }
    CHECK(expected == kFactorial[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("raw unrank reports the inversion parity") {
  std::array<std::uint8_t, kMaxLength> letters{};
  for (Rank r = 0; r < kFactorial[7]; r += 13) {
    const Parity par = lehmer::unrank0(r, 7, letters.data());
    CHECK(par == parity(unrank(r, 7)));
    CHECK(lehmer::rank0(letters.data(), 7) == r);
  }
}

TEST_CASE("parity and inversions") {
  CHECK(parity(Permutation{1, 2, 3, 4}) == Parity::Even);
  CHECK(parity(Permutation{2, 1, 3, 4}) == Parity::Odd);
  CHECK(inversions(Permutation{1, 2, 3, 4}) == 0);
  CHECK(inversions(Permutation{4, 3, 2, 1}) == 6);
  CHECK(inversions(Permutation{1, 3, 2, 4}) == 1);  // standardized 1628

  const oracle::Word w{2, 1, 5, 3, 7, 4, 6, 8};
  CHECK(oracle::cycle_parity(w) == 1);
  CHECK(parity(Permutation(w)) == Parity::Odd);

  for (const auto& v : oracle::all_permutations(6)) {
    const Permutation p(v);
    REQUIRE(static_cast<int>(parity(p)) == oracle::cycle_parity(v));
    REQUIRE(static_cast<int>(parity(p)) == static_cast<int>(inversions(p) % 2));
  }
}

TEST_CASE("longest monotone subsequences") {
  CHECK(longest_monotone(Permutation{1, 2, 3, 4, 5}) == MonotoneLengths{5, 1});
  CHECK(oracle::subset_monotone({2, 1, 3, 5, 4}) == std::pair{3, 2});
  CHECK(longest_monotone(Permutation{2, 1, 3, 5, 4}) == MonotoneLengths{3, 2});

  for (const auto& v : oracle::all_permutations(7)) {
    const auto m = longest_monotone(Permutation(v));
    const auto [inc, dec] = oracle::subset_monotone(v);
    REQUIRE(m.lis == inc);
    REQUIRE(m.lds == dec);
  }
  // (k-1)^2 = 4 < 5: every permutation of length 5 has a monotone run of 3.
  for (const auto& v : oracle::all_permutations(5)) {
    const auto m = longest_monotone(Permutation(v));
    REQUIRE(std::max(m.lis, m.lds) >= 3);
  }
}

TEST_CASE("pattern_of standardizes") {
  CHECK(pattern_of(std::vector<int>{2, 5, 4}) == Permutation{1, 3, 2});
  CHECK(pattern_of(std::vector<int>{1, 2, 3}) == Permutation{1, 2, 3});
  CHECK(oracle::standardize({9, 1, 7, 3}) == oracle::Word{4, 1, 3, 2});
  CHECK(pattern_of(std::vector<int>{9, 1, 7, 3}) == Permutation{4, 1, 3, 2});
  CHECK_THROWS_AS(pattern_of(std::vector<int>{3, 1, 3}), InvalidWord);
  CHECK_THROWS_AS(pattern_of(std::vector<int>{}), InvalidWord);

  for (const auto& v : oracle::all_permutations(5)) {
    const Permutation p(v);
    REQUIRE(pattern_of(v) == p);
  }
}

TEST_CASE("textual form") {
  CHECK(Permutation::parse("21354") == Permutation{2, 1, 3, 5, 4});
  CHECK(Permutation::parse("2,1,3") == Permutation{2, 1, 3});
  const auto ten = Permutation::parse("10,1,2,3,4,5,6,7,8,9");
  CHECK(ten.size() == 10);
  CHECK(ten.to_string() == "10,1,2,3,4,5,6,7,8,9");
  CHECK(Permutation{3, 1, 2}.to_string() == "312");
  CHECK_THROWS_AS(Permutation::parse("1224"), InvalidWord);
  CHECK_THROWS_AS(Permutation::parse("12a"), InvalidWord);
  CHECK_THROWS_AS(Permutation::parse("1,2,,3"), InvalidWord);
  CHECK_THROWS_AS(Permutation::parse("1,2,3,4,5,6,7,8,9,10,11,12,13"), CapError);
}

}  // namespace permclass
