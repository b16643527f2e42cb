#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "epiword/morphism.hpp"
#include "epiword/word.hpp"

namespace epiword {

/// A directive word x1 x2 x3 ... given as preperiod * period^omega. An empty
/// period makes the directive finite.
class DirectiveSpec {
 public:
  DirectiveSpec() = default;
  DirectiveSpec(Word preperiod, Word period) : preperiod_(std::move(preperiod)), period_(std::move(period)) {}

  /// "PRE*PERIOD": "*ab" = (ab)^omega, "c*ab" = c(ab)^omega, "abc" = finite.
  static DirectiveSpec parse(std::string_view text);

  const Word& preperiod() const noexcept { return preperiod_; }
  const Word& period() const noexcept { return period_; }
  bool is_finite() const noexcept { return period_.empty(); }
  /// Number of letters; only meaningful for finite directives.
  std::size_t finite_length() const noexcept { return preperiod_.size(); }

  /// x_{i+1} (0-based), or nothing past the end of a finite directive.
  std::optional<Letter> letter(std::size_t i) const noexcept;

  /// Alph(preperiod . period).
  std::vector<Letter> alphabet() const;

  /// Every letter of the directive occurs infinitely often.
  bool is_strict() const;

  std::string to_string() const;

  friend bool operator==(const DirectiveSpec&, const DirectiveSpec&) = default;

 private:
  Word preperiod_;
  Word period_;
};

/// Palindromic prefixes u_1 = eps, u_2, ..., u_count of the standard episturmian
/// word directed by d, where u_{n+1} = (u_n x_n)^(+).
std::vector<Word> palindromic_prefixes(const DirectiveSpec& d, std::size_t count);

/// The first palindromic prefix u_N with |u_N| >= min_len. Throws
/// InsufficientDirective when a finite directive runs out first.
Word standard_prefix(const DirectiveSpec& d, std::size_t min_len);

/// Number of distinct length-k factors of the infinite standard word directed
/// by d: |Alph(s)| plus, for each 0 < j < k, one less than the number of letters
/// in x_{n+1} x_{n+2} ... where |u_n| < j <= |u_{n+1}|.
std::size_t standard_factor_count(const DirectiveSpec& d, std::size_t k);

/// h_0, ..., h_{n-1} with h_i = mu_i(x_{i+1}), mu_i = psi_{x1} ... psi_{xi}.
std::vector<Word> h_words(const DirectiveSpec& d, std::size_t n);

/// An exact rational p/q with q > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// "p/q" or an integer "p".
  static Rational parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class Rounding { floor, ceiling };

struct MechanicalSpec {
  Rational alpha;
  Rational rho;
  Rounding variant = Rounding::floor;

  /// Throws InputError unless 0 <= alpha, rho <= 1.
  void validate() const;

  friend bool operator==(const MechanicalSpec&, const MechanicalSpec&) = default;
};

/// Letter n is a when floor((n+1)alpha + rho) - floor(n alpha + rho) = 0 (ceiling
/// for the primed variant), b otherwise. Exact integer arithmetic.
Word mechanical_prefix(const MechanicalSpec& m, std::size_t n);

/// t = v mu(s): s is the standard word of `inner_directive` over the alphabet
/// without `excluded_letter`, and v is the suffix of length `suffix_index` of
/// mu(reversal(s_p) x).
struct EpiskewSpec {
  MorphismComposition mu;
  Letter excluded_letter;
  DirectiveSpec inner_directive;
  std::size_t p = 0;
  std::size_t suffix_index = 1;

  /// Checks the letter/directive constraints and the suffix index range.
  void validate() const;

  friend bool operator==(const EpiskewSpec&, const EpiskewSpec&) = default;
};

/// The word mu(reversal(s_p) x) whose non-empty suffixes are the admissible v.
Word episkew_head_source(const EpiskewSpec& e);

Word episkew_prefix(const EpiskewSpec& e, std::size_t n);

/// u v v v ... given by its head u and non-empty cycle v.
struct SkewSpec {
  Word head;
  Word cycle;

  friend bool operator==(const SkewSpec&, const SkewSpec&) = default;
};

Word eventually_periodic_prefix(const Word& u, const Word& v, std::size_t n);

/// Anything that describes an infinite word by its prefixes.
using WordSource = std::variant<DirectiveSpec, MechanicalSpec, EpiskewSpec, SkewSpec>;

/// Exactly the first n letters of the described word.
Word generate_prefix(const WordSource& source, std::size_t n);

std::string describe(const WordSource& source);

}  // namespace epiword
