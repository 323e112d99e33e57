#include "doctest.h"

#include "permclass/errors.hpp"
#include "permclass/pseudo_rotational.hpp"

namespace permclass {

namespace {

const Permutation k1324{1, 3, 2, 4};

std::vector<Permutation> leading_one_patterns() {
  std::vector<Permutation> out;
  for (Rank r = 0; r < kFactorial[4]; ++r) {
    const auto m = unrank(r, 4);
    if (m[0] == 1) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("representative expansion") {
  CHECK(representative(PseudoPermutation::parse("2p468", 8, k1324)).to_string() == "21537468");
  // Missing letters 2,3,5,6 arranged as 1324.
  CHECK(representative(PseudoPermutation::parse("4p17", 7, k1324)).to_string() == "4253617");
  const Permutation inc{1, 2, 3, 4};
  CHECK(representative(PseudoPermutation::parse("p567", 7, inc)).is_identity());
}

TEST_CASE("pseudo-permutation validation and text form") {
  CHECK_THROWS_AS(PseudoPermutation::parse("2468", 8, k1324), InvalidWord);
  CHECK_THROWS_AS(PseudoPermutation::parse("2p44", 7, k1324), InvalidWord);
  CHECK_THROWS_AS(PseudoPermutation::parse("pp46", 7, k1324), InvalidWord);
  CHECK_THROWS_AS(PseudoPermutation::parse("2p9", 8, k1324), InvalidWord);
  CHECK_THROWS_AS(PseudoPermutation::parse("2p4", 6, Permutation{3, 2, 4, 1}), InvalidWord);
  const auto tau = PseudoPermutation::parse("2,p,4,6,8", 8, k1324);
  CHECK(tau.to_string() == "2p468");
  CHECK(tau.p_position() == 1);
  CHECK(tau.pattern_letters() == std::vector<int>{1, 3, 5, 7});
  const auto wide = PseudoPermutation::parse("10,p,2,3,4,5,6,7", 11, k1324);
  CHECK(wide.to_string() == "10,p,2,3,4,5,6,7");
}

TEST_CASE("brackets over the pattern letters") {
  const auto tau = PseudoPermutation::parse("2p468", 8, k1324);
  auto b = bracket(tau, 4);
  CHECK(b.minus == 3);
  CHECK(b.plus == 5);
  b = bracket(tau, 2);
  CHECK(b.minus == 1);
  CHECK(b.plus == 3);
  b = bracket(tau, 8);
  CHECK(b.minus == 7);
  CHECK_FALSE(b.plus.has_value());
  const auto low = PseudoPermutation::parse("1p", 5, k1324);
  CHECK_FALSE(bracket(low, 1).minus.has_value());
}

TEST_CASE("base case chain 1p, p2, 3p, p4, 5p") {
  const std::vector<std::string> chain{"1p", "p2", "3p", "p4", "5p"};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto tau = PseudoPermutation::parse(chain[i], 5, k1324);
    const auto next = PseudoPermutation::parse(chain[i + 1], 5, k1324);
    const auto nb = pseudo_rotation_neighbors(tau);
    CHECK(std::find(nb.begin(), nb.end(), next) != nb.end());
  }
  // p at an end leaves a single neighbouring letter.
  CHECK(pseudo_rotation_neighbors(PseudoPermutation::parse("1p", 5, k1324)).size() <= 2);
}

TEST_CASE("pseudo-parity values") {
  CHECK(pseudo_parity(PseudoPermutation::parse("16p28", 8, k1324)) == Parity::Even);
  for (int n = 5; n <= 9; ++n) {
    std::vector<int> up;
    for (int i = 1; i <= n - 4; ++i) up.push_back(i);
    std::vector<int> swapped = up;
    if (swapped.size() >= 2) std::swap(swapped[0], swapped[1]);
    up.push_back(PseudoPermutation::kP);
    swapped.push_back(PseudoPermutation::kP);
    const PseudoPermutation a(up, n, k1324);
    // Odd letters before p: ceil((n - c) / 2).
    CHECK(static_cast<int>(pseudo_parity(a)) == ((n - 4 + 1) / 2) % 2);
    if (n - 4 >= 2) CHECK(pseudo_parity(a) != pseudo_parity(PseudoPermutation(swapped, n, k1324)));
  }
}

TEST_CASE("dense index round trip") {
  for (const auto& m : leading_one_patterns()) {
    for (int n = 4; n <= 8; ++n) {
      const PseudoIndex index(n, m);
      CHECK(index.state_count() == [&] {
        std::uint64_t binom = 1;
        for (int i = 0; i < 4; ++i) binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
        return binom * kFactorial[static_cast<std::size_t>(n - 3)];
      }());
      for (std::uint64_t s = 0; s < index.state_count(); ++s) {
        REQUIRE(index.encode(index.decode(s)) == s);
      }
    }
  }
}

TEST_CASE("pseudo-parity survives every pseudo-rotation, c = 4, n <= 7") {
  std::uint64_t violations = 0;
  std::uint64_t asymmetric = 0;
  for (const auto& m : leading_one_patterns()) {
    for (int n = 5; n <= 7; ++n) {
      const PseudoIndex index(n, m);
      for (std::uint64_t s = 0; s < index.state_count(); ++s) {
        const auto tau = index.decode(s);
        for (const auto& next : pseudo_rotation_neighbors(tau)) {
          if (pseudo_parity(next) != pseudo_parity(tau)) ++violations;
          const auto back = pseudo_rotation_neighbors(next);
          if (std::find(back.begin(), back.end(), tau) == back.end()) ++asymmetric;
        }
      }
    }
  }
  CHECK(violations == 0);
  CHECK(asymmetric == 0);
}

TEST_CASE("two parity-pure pseudo classes") {
  for (int n : {5, 6, 8}) {
    const auto part = enumerate_pseudo_classes(n, k1324);
    REQUIRE(part.classes.size() == 2);
    for (const auto& cls : part.classes) CHECK(cls.parity_pure());
  }
  for (const auto& m : leading_one_patterns()) {
    for (int n = 5; n <= 7; ++n) CHECK(enumerate_pseudo_classes(n, m).classes.size() == 2);
  }
  // Normalized to the leading-1 rotation.
  const auto rotated = enumerate_pseudo_classes(5, Permutation{3, 2, 4, 1});
  CHECK(rotated.m == k1324);
  CHECK(rotated.classes.size() == 2);
  CHECK_THROWS_AS(enumerate_pseudo_classes(4, k1324), OutOfRange);
  CHECK_THROWS_AS(enumerate_pseudo_classes(9, k1324, 1024), ResourceError);
}

TEST_CASE("pseudo-rotations are shadowed by rotational equivalence") {
  for (const auto& m : leading_one_patterns()) {
    const auto pi = rotation_set(m);
    for (int n = 5; n <= 6; ++n) {
      const PseudoIndex index(n, m);
      for (std::uint64_t s = 0; s < index.state_count(); ++s) {
        const auto tau = index.decode(s);
        for (const auto& next : pseudo_rotation_neighbors(tau)) {
          REQUIRE(are_equivalent(representative(tau), representative(next), pi).equivalent);
        }
      }
    }
  }
}

TEST_CASE("alternating patterns") {
  CHECK(is_alternating(k1324));
  CHECK_FALSE(is_alternating(Permutation{1, 2, 3, 4}));
  CHECK(is_alternating(Permutation{2, 1, 4, 3}));
  CHECK(is_alternating(Permutation{1, 2}));
}

TEST_CASE("rotational profile") {
  const auto profile = rotational_profile(k1324, 7);
  CHECK(profile.f == std::map<int, std::uint64_t>{{5, 2}, {6, 2}, {7, 1}});
  CHECK(profile.t == 7);
  CHECK(profile.alternating);
  CHECK_FALSE(profile.parity_split_expected);

  const auto odd = rotational_profile(Permutation{1, 3, 2}, 6);
  CHECK(odd.parity_split_expected);
  for (const auto& [n, f] : odd.f) CHECK(f == 2);
  CHECK_FALSE(odd.t.has_value());
  CHECK_THROWS_AS(rotational_profile(k1324, 13), CapError);
}

}  // namespace permclass
