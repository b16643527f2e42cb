#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "epiword/generators.hpp"
#include "epiword/word.hpp"

namespace epiword {

/// Letters a (of an alphabet of `alphabet_size` letters) such that every
/// length-2 factor of w contains a. For |w| <= 1 this is every letter.
std::vector<Letter> separating_letters(const Word& w, std::size_t alphabet_size);
std::vector<Letter> separating_letters(const Word& w);

enum class RejectReason { NoSeparatingLetter, ReductionFailed, WitnessCheckFailed, NotBalanced };

std::string_view to_string(RejectReason reason);
std::optional<RejectReason> reject_reason_from_string(std::string_view text);

/// Evidence that w is finite episturmian.
///
/// Replaying base_word <- psi_x(base_word) x over reduction_letters (last
/// first) yields a superword of w; w occurs at occurrence_index in the standard
/// word directed by embedding_directive; witness_u is a prefix of that word and
/// satisfies check_theorem3(w, witness_u).
struct Certificate {
  std::vector<Letter> reduction_letters;
  Word base_word;
  DirectiveSpec embedding_directive;
  std::size_t occurrence_index = 0;
  Word witness_u;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Verdict {
  bool accepted = false;
  std::optional<Certificate> certificate;
  std::optional<RejectReason> reason;
  /// On rejection: a shortest factor of w that is not finite episturmian.
  std::optional<Word> bad_factor;
  /// Some reduction step had separating-letter branches that disagreed.
  bool divergent_branches = false;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Decides whether w (non-empty) is a factor of some episturmian word by
/// repeated psi-desubstitution over separating letters, and certifies the
/// answer when positive.
Verdict is_finite_episturmian(const Word& w);

/// Whether a u_{|m|-1} <= m = min(w) holds for every acceptable pair (a, <)
/// with a in Alph(w), over all orders of the letters of w and u. Throws
/// InputError when u is shorter than |min(w)| - 1 for some order.
bool check_theorem3(const Word& w, const Word& u);

/// A word u accepted by check_theorem3 for w, if w is finite episturmian.
std::optional<Word> find_witness(const Word& w);

/// Balance over {a, b}: equal-length factors differ by at most one b.
bool is_balanced(const Word& w);

/// Outcome of the aua / bub test on a binary word, with its trace.
struct SturmianTest {
  bool sturmian = false;
  /// Longest common prefix of a^-1 min(w) and b^-1 max(w). When not
  /// Sturmian, this is the u with aua a prefix of min(w) and bub of max(w).
  Word common_prefix;
  /// Letters following common_prefix in a^-1 min(w) and b^-1 max(w).
  std::optional<Letter> next_in_min;
  std::optional<Letter> next_in_max;
  Word min_word;
  Word max_word;
};

/// Requires both a and b to occur in w and no other letter.
SturmianTest cor2_sturmian_test(const Word& w);

struct WideSenseResult {
  bool ok = true;
  std::optional<Word> bad_factor;
};

/// Whether every factor of the prefix is finite episturmian; reports a
/// shortest offending factor otherwise.
WideSenseResult wide_sense_check(const Word& prefix);

/// A shortest factor of w that is not finite episturmian, if any.
std::optional<Word> shortest_non_episturmian_factor(const Word& w);

/// Prefix letter budget for the stability rule of the infinite-word checks.
inline constexpr std::size_t kStabilityBudget = std::size_t{1} << 16;

/// A prefix of the source holding all of its length-k factors. Directive
/// sources are checked against standard_factor_count; other sources must keep
/// the same factor set over two doublings. Throws Inconclusive past the budget.
Word stable_prefix(const WordSource& source, std::size_t k, std::size_t budget = kStabilityBudget);

struct Eq1Report {
  bool inequality_holds = true;
  bool strict = false;
  bool equality_holds = true;
  std::size_t prefix_length = 0;
};

/// (a s)_k <= min(s|k) for every acceptable pair over Alph(s), plus equality
/// for strict directives.
Eq1Report eq1_report(const DirectiveSpec& d, std::size_t k);
bool check_eq1_prefix(const DirectiveSpec& d, std::size_t k);

/// Whether a single word z gives min(t|k) = a z for every acceptable pair over
/// Alph(t). The source must use at least two letters.
bool check_fine_prefix(const WordSource& source, std::size_t k);

/// Distinct factor counts for lengths 1..max_n (max_n <= |prefix|).
std::vector<std::size_t> factor_complexity(const Word& prefix, std::size_t max_n);

}  // namespace epiword
