#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epiword/word.hpp"

namespace epiword {

/// A total order on the alphabet {a, ..., } of a given size. Together with its
/// smallest letter it forms an acceptable pair.
class Order {
 public:
  /// a < b < c < ... over the first `size` letters.
  static Order alphabetical(std::size_t size);

  /// Letters listed in increasing order: "bac" means b < a < c. Must be a
  /// permutation of the first n letters.
  static Order parse(std::string_view text);

  /// Same as parse() but from letters.
  static Order from_increasing(std::span<const Letter> increasing);

  std::size_t size() const noexcept { return size_; }
  std::size_t rank(Letter a) const noexcept { return rank_[a.index]; }
  Letter letter_at(std::size_t rank) const noexcept { return Letter{letters_[rank]}; }
  Letter min_letter() const noexcept { return letter_at(0); }
  bool less(Letter x, Letter y) const noexcept { return rank_[x.index] < rank_[y.index]; }

  bool covers(Letter a) const noexcept { return a.index < size_; }
  bool covers(const Word& w) const noexcept { return alphabet_size_of(w) <= size_; }
  /// Throws InputError naming the first letter of w outside this order.
  void require_covers(const Word& w) const;

  /// The opposite order; min under it is max under *this.
  Order reversed() const;

  std::string to_string() const;

  friend bool operator==(const Order&, const Order&) = default;

 private:
  std::array<std::uint8_t, kMaxAlphabet> rank_{};
  std::array<std::uint8_t, kMaxAlphabet> letters_{};
  std::uint8_t size_ = 0;
};

/// All size! orders on the first `size` letters, in lexicographic order of
/// their increasing listing.
std::vector<Order> all_orders(std::size_t size);

/// All orders over an alphabet of `size` letters that differ in how they rank
/// `relevant`; letters outside `relevant` are placed last in index order. Any
/// order restricted to `relevant` appears exactly once.
std::vector<Order> orders_over(std::span<const Letter> relevant, std::size_t size);

/// Lexicographic comparison; a proper prefix compares less. Throws InputError
/// when a letter of u or v lies outside ord.
std::strong_ordering lex_compare(const Word& u, const Word& v, const Order& ord);

}  // namespace epiword
