#include "epiword/order.hpp"

#include <algorithm>
#include <numeric>

#include "epiword/errors.hpp"

namespace epiword {

Order Order::alphabetical(std::size_t size) {
  if (size > kMaxAlphabet) throw InputError("alphabet larger than " + std::to_string(kMaxAlphabet));
  Order ord;
  ord.size_ = static_cast<std::uint8_t>(size);
  for (std::uint8_t i = 0; i < size; ++i) {
    ord.rank_[i] = i;
    ord.letters_[i] = i;
  }
  return ord;
}

Order Order::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z') throw InputError("malformed order \"" + std::string(text) + "\"");
    letters.push_back(Letter::from_char(c));
  }
  return from_increasing(letters);
}

Order Order::from_increasing(std::span<const Letter> increasing) {
  const std::size_t n = increasing.size();
  if (n == 0 || n > kMaxAlphabet) throw InputError("order must list between 1 and 8 letters");
  std::array<bool, kMaxAlphabet> seen{};
  Order ord;
  ord.size_ = static_cast<std::uint8_t>(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Letter a = increasing[r];
    if (a.index >= n || seen[a.index]) {
      std::string listing;
      for (Letter b : increasing) listing.push_back(b.to_char());
      throw InputError("malformed order \"" + listing + "\": expected a permutation of the first " +
                       std::to_string(n) + " letters");
    }
    seen[a.index] = true;
    ord.rank_[a.index] = static_cast<std::uint8_t>(r);
    ord.letters_[r] = a.index;
  }
  return ord;
}

void Order::require_covers(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!covers(w[i])) {
      throw InputError(std::string("letter '") + w[i].to_char() + "' is outside the order " + to_string());
    }
  }
}

Order Order::reversed() const {
  Order r;
  r.size_ = size_;
  for (std::size_t i = 0; i < size_; ++i) {
    r.letters_[i] = letters_[size_ - 1 - i];
    r.rank_[r.letters_[i]] = static_cast<std::uint8_t>(i);
  }
  return r;
}

std::string Order::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < size_; ++r) s.push_back(letter_at(r).to_char());
  return s;
}

std::vector<Order> all_orders(std::size_t size) {
  std::vector<Letter> perm(size);
  for (std::size_t i = 0; i < size; ++i) perm[i] = Letter{static_cast<std::uint8_t>(i)};
  std::vector<Order> out;
  do {
    out.push_back(Order::from_increasing(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Order> orders_over(std::span<const Letter> relevant, std::size_t size) {
  std::vector<Letter> perm(relevant.begin(), relevant.end());
  std::sort(perm.begin(), perm.end());
  perm.erase(std::unique(perm.begin(), perm.end()), perm.end());
  std::vector<Letter> rest;
  for (std::uint8_t i = 0; i < size; ++i) {
    if (!std::binary_search(perm.begin(), perm.end(), Letter{i})) rest.push_back(Letter{i});
  }
  std::vector<Order> out;
  std::vector<Letter> listing;
  do {
    listing = perm;
    listing.insert(listing.end(), rest.begin(), rest.end());
    out.push_back(Order::from_increasing(listing));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::strong_ordering lex_compare(const Word& u, const Word& v, const Order& ord) {
  ord.require_covers(u);
  ord.require_covers(v);
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i]) {
      return ord.less(u[i], v[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return u.size() <=> v.size();
}

}  // namespace epiword
