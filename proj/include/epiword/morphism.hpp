#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epiword/word.hpp"

namespace epiword {

/// psi_a: a -> a, x -> ax for every letter x != a.
Word psi(Letter a, const Word& w);

/// The unique w' with psi_a(w') = w, parsed left to right in blocks "a y"
/// (y != a) and lone "a". Empty when w is not in the image of psi_a.
std::optional<Word> psi_inverse(Letter a, const Word& w);

/// A pure epistandard morphism psi_{x1} o psi_{x2} o ... o psi_{xn}. The empty
/// composition is the identity.
class MorphismComposition {
 public:
  MorphismComposition() = default;
  explicit MorphismComposition(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  /// "ab" means psi_a o psi_b; "" is the identity.
  static MorphismComposition parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }
  Word apply(const Word& w) const;
  std::string to_string() const;

  friend bool operator==(const MorphismComposition&, const MorphismComposition&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Length of the longest palindromic suffix of w (0 only for the empty word).
std::size_t longest_palindromic_suffix(const Word& w);

/// w^(+): the shortest palindrome having w as a prefix.
Word pal_closure(const Word& w);

}  // namespace epiword
