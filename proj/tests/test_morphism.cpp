#include <doctest.h>

#include "epiword/errors.hpp"
#include "epiword/morphism.hpp"
#include "support/random_words.hpp"

using namespace epiword;

namespace {

Word W(const char* text) { return Word::parse(text); }
Letter L(char c) { return Letter::from_char(c); }

Word closure_by_search(const Word& w) {
  for (std::size_t extra = 0;; ++extra) {
    // The only candidate of this length: w followed by a mirrored prefix.
    Word candidate = w;
    for (std::size_t i = extra; i-- > 0;) candidate.push_back(w[i]);
    if (is_palindrome(candidate)) return candidate;
  }
}

}  // namespace

TEST_CASE("psi") {
  CHECK(psi(L('a'), W("ab")) == W("aab"));
  CHECK(psi(L('b'), W("aa")) == W("baba"));
  CHECK(psi(L('a'), W("")) == W(""));
  CHECK(psi(L('a'), W("abc")) == W("aabac"));
}

TEST_CASE("psi_inverse") {
  CHECK(psi_inverse(L('b'), W("baba")) == W("aa"));
  CHECK(psi_inverse(L('a'), W("aab")) == W("ab"));
  CHECK_FALSE(psi_inverse(L('a'), W("ba")).has_value());
  CHECK_FALSE(psi_inverse(L('a'), W("abb")).has_value());
  CHECK(psi_inverse(L('a'), W("")) == W(""));
}

TEST_CASE("psi_inverse undoes psi") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = testing::random_word(rng, 4, testing::uniform(rng, 0, 25));
    const Letter a = testing::random_letter(rng, 4);
    CHECK(psi_inverse(a, psi(a, w)) == w);
  }
}

TEST_CASE("compositions apply right to left") {
  const auto mu = MorphismComposition::parse("ab");
  CHECK(mu.apply(W("c")) == W("abac"));
  CHECK(mu.to_string() == "ab");
  CHECK(MorphismComposition::parse("").is_identity());
  CHECK(MorphismComposition::parse("").apply(W("abc")) == W("abc"));
  CHECK_THROWS_AS(MorphismComposition::parse("aX"), InputError);
}

TEST_CASE("palindromic closure") {
  CHECK(pal_closure(W("abc")) == W("abcba"));
  CHECK(pal_closure(W("abaa")) == W("abaaba"));
  CHECK(pal_closure(W("aba")) == W("aba"));
  CHECK(pal_closure(W("")) == W(""));
  CHECK(longest_palindromic_suffix(W("abaa")) == 2);
  CHECK(longest_palindromic_suffix(W("")) == 0);
}

TEST_CASE("palindromic closure agrees with direct search") {
  testing::Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = testing::random_word(rng, testing::uniform(rng, 1, 3), testing::uniform(rng, 1, 30));
    const Word c = pal_closure(w);
    CHECK(c == closure_by_search(w));
    CHECK(is_palindrome(c));
    CHECK(c.starts_with(w));
  }
}
