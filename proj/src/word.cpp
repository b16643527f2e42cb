#include "epiword/word.hpp"

#include <algorithm>
#include <ostream>

#include "epiword/errors.hpp"

namespace epiword {

Letter Letter::from_char(char c) {
  if (c < 'a' || c > 'z') {
    throw InputError(std::string("malformed word: '") + c + "' is not a lowercase letter a-z");
  }
  const auto index = static_cast<std::size_t>(c - 'a');
  if (index >= kMaxAlphabet) {
    throw InputError(std::string("letter '") + c + "' is outside the " +
                     std::to_string(kMaxAlphabet) + "-letter alphabet a-" +
                     static_cast<char>('a' + kMaxAlphabet - 1));
  }
  return Letter{static_cast<std::uint8_t>(index)};
}

Word Word::parse(std::string_view text) {
  std::string letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(Letter::from_char(c).to_char());
  return Word(std::move(letters));
}

Word Word::from_letters(std::span<const Letter> letters) {
  std::string text;
  text.reserve(letters.size());
  for (Letter a : letters) {
    if (a.index >= kMaxAlphabet) throw InputError("letter index outside the alphabet");
    text.push_back(a.to_char());
  }
  return Word(std::move(text));
}

Word Word::repeat(Letter a, std::size_t count) { return Word(std::string(count, a.to_char())); }

Word Word::suffix(std::size_t n) const {
  n = std::min(n, size());
  return Word(text_.substr(size() - n));
}

std::size_t Word::count(Letter a) const noexcept {
  return static_cast<std::size_t>(std::count(text_.begin(), text_.end(), a.to_char()));
}

std::size_t Word::occurrences(const Word& f) const noexcept {
  if (f.empty()) return size() + 1;
  std::size_t n = 0;
  for (auto pos = text_.find(f.text_); pos != std::string::npos; pos = text_.find(f.text_, pos + 1)) ++n;
  return n;
}

Word operator+(Letter lhs, const Word& rhs) {
  std::string text;
  text.reserve(rhs.size() + 1);
  text.push_back(lhs.to_char());
  text += rhs.text_;
  return Word(std::move(text));
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.view(); }

Word reversal(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) r.push_back(w[i]);
  return r;
}

bool is_palindrome(const Word& w) {
  const auto v = w.view();
  return std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.rbegin());
}

std::vector<Letter> alphabet_of(const Word& w) {
  std::vector<Letter> letters;
  for (std::uint8_t i = 0; i < kMaxAlphabet; ++i) {
    if (w.contains(Letter{i})) letters.push_back(Letter{i});
  }
  return letters;
}

std::size_t alphabet_size_of(const Word& w) {
  std::size_t n = 0;
  for (char c : w.view()) n = std::max(n, static_cast<std::size_t>(c - 'a') + 1);
  return n;
}

}  // namespace epiword
