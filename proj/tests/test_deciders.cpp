#include <doctest.h>

#include "epiword/deciders.hpp"
#include "epiword/errors.hpp"
#include "epiword/factors.hpp"
#include "epiword/oracle.hpp"
#include "support/random_words.hpp"

using namespace epiword;

namespace {

Word W(const char* text) { return Word::parse(text); }
Letter L(char c) { return Letter::from_char(c); }
DirectiveSpec D(const char* text) { return DirectiveSpec::parse(text); }

std::string letters_of(const std::vector<Letter>& v) {
  std::string s;
  for (Letter a : v) s.push_back(a.to_char());
  return s;
}

// Every claim a certificate makes, checked from scratch.
void check_certificate(const Word& w, const Certificate& c) {
  Word replay = c.base_word;
  for (auto it = c.reduction_letters.rbegin(); it != c.reduction_letters.rend(); ++it) {
    replay = psi(*it, replay) + *it;
  }
  CHECK_MESSAGE(replay.contains(w), "replay " << replay << " misses " << w);
  const Word s = standard_prefix(c.embedding_directive, c.occurrence_index + w.size());
  CHECK(s.substr(c.occurrence_index, w.size()) == w);
  CHECK(s.starts_with(c.witness_u));
  CHECK(c.witness_u.size() == w.size());
  CHECK(check_theorem3(w, c.witness_u));
}

}  // namespace

TEST_CASE("separating letters") {
  CHECK(letters_of(separating_letters(W("baabacababac"))) == "a");
  CHECK(letters_of(separating_letters(W("abab"))) == "ab");
  CHECK(letters_of(separating_letters(W("bcb"))) == "bc");
  CHECK(letters_of(separating_letters(W("abcab"))) == "");
  CHECK(letters_of(separating_letters(W("a"), 3)) == "abc");
}

TEST_CASE("reject reasons round-trip through strings") {
  for (auto r : {RejectReason::NoSeparatingLetter, RejectReason::ReductionFailed, RejectReason::WitnessCheckFailed,
                 RejectReason::NotBalanced}) {
    CHECK(reject_reason_from_string(to_string(r)) == r);
  }
  CHECK_FALSE(reject_reason_from_string("nonsense").has_value());
}

TEST_CASE("finite episturmian decider on the paper examples") {
  const auto v = is_finite_episturmian(W("baabacababac"));
  REQUIRE(v.accepted);
  REQUIRE(v.certificate);
  check_certificate(W("baabacababac"), *v.certificate);
  CHECK(v.certificate->witness_u.starts_with(W("aba")));

  const auto s = is_finite_episturmian(W("ababaabaabab"));
  REQUIRE(s.accepted);
  check_certificate(W("ababaabaabab"), *s.certificate);

  const auto r = is_finite_episturmian(W("aabababaabaab"));
  CHECK_FALSE(r.accepted);
  CHECK_FALSE(r.certificate);
  REQUIRE(r.reason);
  REQUIRE(r.bad_factor);
  CHECK_FALSE(is_balanced(*r.bad_factor));
  CHECK(W("aabababaabaab").contains(*r.bad_factor));
}

TEST_CASE("decider edge cases") {
  CHECK_THROWS_AS(is_finite_episturmian(W("")), InputError);
  for (const char* w : {"a", "aaaa", "ab", "aabaa", "abc"}) {
    const auto v = is_finite_episturmian(W(w));
    REQUIRE(v.accepted);
    check_certificate(W(w), *v.certificate);
  }
  const auto v = is_finite_episturmian(W("abca"));
  CHECK_FALSE(v.accepted);
  CHECK(v.reason == RejectReason::NoSeparatingLetter);
  CHECK(v.bad_factor == W("abca"));
}

TEST_CASE("factors of standard words are accepted with valid certificates") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const DirectiveSpec d = testing::random_directive(rng, testing::uniform(rng, 2, 4));
    const Word s = standard_prefix(d, 400).prefix(400);
    const std::size_t len = testing::uniform(rng, 1, 60);
    const std::size_t at = testing::uniform(rng, 0, s.size() - len);
    const Word w = s.substr(at, len);
    const auto v = is_finite_episturmian(w);
    REQUIRE_MESSAGE(v.accepted, w << " from " << d.to_string());
    check_certificate(w, *v.certificate);
  }
}

TEST_CASE("decider matches the oracle on short random ternary and quaternary words") {
  testing::Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = testing::random_word(rng, testing::uniform(rng, 3, 4), testing::uniform(rng, 1, 9));
    const bool expected = oracle_is_finite_episturmian(w);
    const auto v = is_finite_episturmian(w);
    CHECK_MESSAGE(v.accepted == expected, w);
    if (v.accepted) check_certificate(w, *v.certificate);
    if (!v.accepted) {
      REQUIRE(v.bad_factor);
      CHECK_FALSE(oracle_is_finite_episturmian(*v.bad_factor));
      CHECK(shortest_non_episturmian_factor(w) == v.bad_factor);
    }
  }
}

TEST_CASE("check_theorem3") {
  CHECK(check_theorem3(W("baabacababac"), W("abacaaaaaa")));
  CHECK_FALSE(check_theorem3(W("baabacababac"), W("baaaaaaaaa")));
  CHECK(check_theorem3(W("a"), W("")));
  CHECK(check_theorem3(W("a"), W("bcd")));
  // min(w) under a<b<c has length 11, so u needs 10 letters.
  CHECK_THROWS_AS(check_theorem3(W("baabacababac"), W("abaca")), InputError);
}

TEST_CASE("find_witness") {
  const auto u = find_witness(W("baabacababac"));
  REQUIRE(u);
  CHECK(u->starts_with(W("aba")));
  CHECK_FALSE(find_witness(W("aabababaabaab")));
  const auto unary = find_witness(W("aaaa"));
  REQUIRE(unary);
  CHECK(check_theorem3(W("aaaa"), *unary));
}

TEST_CASE("balance") {
  CHECK(is_balanced(W("ababaabaabab")));
  CHECK_FALSE(is_balanced(W("aabababaabaab")));
  CHECK_FALSE(is_balanced(W("aabb")));
  CHECK(is_balanced(W("")));
  CHECK(is_balanced(W("bbbb")));
  CHECK_THROWS_AS(is_balanced(W("abc")), InputError);
}

TEST_CASE("is_balanced agrees with enumerate-and-compare") {
  testing::Rng rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = testing::random_word(rng, 2, testing::uniform(rng, 1, 16));
    bool balanced = true;
    for (std::size_t n = 1; n <= w.size() && balanced; ++n) {
      std::size_t lo = n, hi = 0;
      for (std::size_t i = 0; i + n <= w.size(); ++i) {
        const std::size_t b = w.substr(i, n).count(L('b'));
        lo = std::min(lo, b);
        hi = std::max(hi, b);
      }
      balanced = hi - lo <= 1;
    }
    CHECK(is_balanced(w) == balanced);
  }
}

TEST_CASE("aua/bub test") {
  const auto s = cor2_sturmian_test(W("ababaabaabab"));
  CHECK(s.sturmian);
  CHECK(s.common_prefix == W("abaaba"));
  CHECK(s.next_in_min == L('b'));
  CHECK(s.next_in_max == L('a'));

  const auto t = cor2_sturmian_test(W("aabababaabaab"));
  CHECK_FALSE(t.sturmian);
  CHECK(t.common_prefix == W("aba"));
  CHECK(t.min_word.starts_with(W("aabaa")));
  CHECK(t.max_word.starts_with(W("babab")));

  CHECK(cor2_sturmian_test(W("ab")).sturmian);
  CHECK_THROWS_AS(cor2_sturmian_test(W("aaa")), InputError);
  CHECK_THROWS_AS(cor2_sturmian_test(W("abc")), InputError);
}

TEST_CASE("wide sense check") {
  EpiskewSpec e;
  e.excluded_letter = L('b');
  e.inner_directive = D("*a");
  e.p = 2;
  e.suffix_index = 3;
  CHECK(wide_sense_check(episkew_prefix(e, 20)).ok);
  const auto bad = wide_sense_check(W("aabababaabaab"));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.bad_factor);
  CHECK_FALSE(is_balanced(*bad.bad_factor));
  CHECK(wide_sense_check(W("a")).ok);
}

TEST_CASE("stability rule") {
  const Word s = stable_prefix(D("*abc"), 20);
  CHECK(factor_counts(s, 20).back() == 41);
  CHECK_THROWS_AS(stable_prefix(D("*abc"), 20, 32), Inconclusive);
  CHECK_THROWS_AS(stable_prefix(SkewSpec{W("b"), W("a")}, 5, 64), Inconclusive);
  CHECK_NOTHROW(stable_prefix(SkewSpec{W("b"), W("a")}, 5));
  CHECK_THROWS_AS(stable_prefix(D("ab"), 5), InputError);
  CHECK_THROWS_AS(stable_prefix(D("*ab"), 0), InputError);
}

TEST_CASE("a s_k <= min(s|k)") {
  const auto fib = eq1_report(D("*ab"), 10);
  CHECK(fib.strict);
  CHECK(fib.inequality_holds);
  CHECK(fib.equality_holds);
  CHECK(check_eq1_prefix(D("*ab"), 10));
  CHECK(check_eq1_prefix(D("a*b"), 5));
  CHECK_FALSE(eq1_report(D("a*b"), 5).strict);
  CHECK(check_eq1_prefix(D("*a"), 3));
  CHECK_THROWS_AS(check_eq1_prefix(D("ab"), 3), InputError);
}

TEST_CASE("a s_k <= min(s|k) on random directives") {
  testing::Rng rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const DirectiveSpec d = testing::random_directive(rng, testing::uniform(rng, 2, 4));
    const auto r = eq1_report(d, 30);
    CHECK_MESSAGE(r.inequality_holds, d.to_string());
    if (r.strict) CHECK_MESSAGE(r.equality_holds, d.to_string());
  }
}

TEST_CASE("fine words") {
  CHECK(check_fine_prefix(D("*abc"), 12));
  CHECK_FALSE(check_fine_prefix(D("b*a"), 8));
  CHECK(check_fine_prefix(SkewSpec{W("b"), W("a")}, 6));
  CHECK_THROWS_AS(check_fine_prefix(D("*a"), 4), InputError);
}

TEST_CASE("strict episkew words are fine") {
  // v mu(s) with s strict on the other letters.
  EpiskewSpec e;
  e.mu = MorphismComposition::parse("a");
  e.excluded_letter = L('c');
  e.inner_directive = D("*ab");
  e.p = 3;
  e.suffix_index = 2;
  CHECK(check_fine_prefix(e, 10));
}

TEST_CASE("factor complexity") {
  CHECK(factor_complexity(W("aaaa"), 3) == std::vector<std::size_t>{1, 1, 1});
  const auto tri = factor_complexity(generate_prefix(D("*abc"), 5000), 50);
  const auto fib = factor_complexity(generate_prefix(D("*ab"), 5000), 50);
  for (std::size_t n = 1; n <= 50; ++n) {
    CHECK(tri[n - 1] == 2 * n + 1);
    CHECK(fib[n - 1] == n + 1);
  }
}
