#pragma once

#include <cstddef>
#include <set>
#include <unordered_set>
#include <vector>

#include "epiword/order.hpp"
#include "epiword/word.hpp"

namespace epiword {

/// F_n(w): the distinct length-n factors of w. Requires 1 <= n <= |w|.
std::set<Word> factors(const Word& w, std::size_t n);

/// Factor sets of w for every length 1..max_length, one hash set per length.
class FactorSet {
 public:
  FactorSet(const Word& w, std::size_t max_length);

  std::size_t max_length() const noexcept { return by_length_.size(); }
  const std::unordered_set<Word>& of_length(std::size_t n) const;
  bool contains(const Word& f) const;

  /// |F_1| = |Alph(w)|, and every factor of length n+1 has its length-n prefix
  /// and suffix in F_n.
  bool consistent() const;

 private:
  std::size_t alphabet_count_ = 0;
  std::vector<std::unordered_set<Word>> by_length_;
};

/// Number of distinct factors of each length 1..max_n.
std::vector<std::size_t> factor_counts(const Word& w, std::size_t max_n);

/// min(w|k): the lexicographically smallest length-k factor.
Word min_factor(const Word& w, std::size_t k, const Order& ord);
Word max_factor(const Word& w, std::size_t k, const Order& ord);

/// min(w) for a finite word: min(w|k) for the largest k such that every
/// min(w|j), j <= k, is a prefix of min(w|k). Always a unioccurrent suffix.
Word min_of(const Word& w, const Order& ord);
/// max(w), defined symmetrically (the min under the reversed order).
Word max_of(const Word& w, const Order& ord);

}  // namespace epiword
