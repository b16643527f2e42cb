#pragma once

#include <chrono>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epiword/word.hpp"

namespace epiword {

/// All length-n factors of the palindromic prefixes u_{bound+1}(d) over every
/// directive word d in letters^bound. Since prefixes are nested this covers all
/// directives of length <= bound.
///
/// Built back to front with u(x d) = psi_x(u(d) x), keeping for each directive
/// only its factors of length <= n and its first n letters.
std::set<Word> episturmian_factors(std::span<const Letter> letters, std::size_t n, std::size_t bound);

/// The same set by literal enumeration of every directive and palindromic
/// closure. Exponential in `bound`; used to cross-check the other route.
std::set<Word> episturmian_factors_naive(std::span<const Letter> letters, std::size_t n, std::size_t bound);

/// w is a factor of standard_prefix(d) for a directive d over Alph(w) with
/// |d| <= directive_bound.
bool oracle_is_finite_episturmian(const Word& w, std::size_t directive_bound);
/// Uses directive_bound = 2|w|.
bool oracle_is_finite_episturmian(const Word& w);

/// Largest n accepted by enumerate_balanced.
inline constexpr std::size_t kBalancedEnumerationLimit = 20;

/// Every balanced binary word of length n, by filtering all 2^n words.
std::set<Word> enumerate_balanced(std::size_t n);

/// Every word of length n over the first alphabet_size letters, in
/// alphabetical order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t n);

struct Mismatch {
  Word word;
  std::string decider;
  std::string oracle;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct SweepReport {
  std::string check;
  std::size_t alphabet_size = 0;
  std::size_t min_length = 1;
  std::size_t max_length = 0;
  std::size_t total_words = 0;
  std::vector<Mismatch> mismatches;
  /// Words on which the decider's separating-letter branches disagreed.
  std::size_t divergent_words = 0;
  std::chrono::duration<double> wall_time{};

  bool passed() const noexcept { return mismatches.empty(); }
};

/// Checks that `sweep` accepts: episturmian, cor2, witness.
std::vector<std::string_view> sweep_checks();

/// Runs the named decider against its oracle on every word of length
/// 1..max_len over the first alphabet_size letters (2 or 3). Binary sweeps use
/// the balance test as oracle; ternary sweeps use oracle_is_finite_episturmian.
SweepReport sweep(std::string_view check, std::size_t alphabet_size, std::size_t max_len);

}  // namespace epiword
