#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epiword {

/// Largest supported alphabet. Letters are a, b, ..., h.
inline constexpr std::size_t kMaxAlphabet = 8;

struct Letter {
  std::uint8_t index = 0;

  constexpr char to_char() const noexcept { return static_cast<char>('a' + index); }
  static Letter from_char(char c);

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// A finite word over the indexed alphabet. Letters are kept as their ASCII
/// rendering so that slicing, searching and hashing reuse std::string.
///
/// The built-in ordering is plain alphabetical order; it exists so words can
/// live in ordered containers. Use lex_compare() for a chosen Order.
class Word {
 public:
  Word() = default;

  /// Parses lowercase ASCII text; throws InputError on anything else.
  static Word parse(std::string_view text);
  static Word from_letters(std::span<const Letter> letters);
  static Word repeat(Letter a, std::size_t count);

  std::size_t size() const noexcept { return text_.size(); }
  bool empty() const noexcept { return text_.empty(); }

  Letter operator[](std::size_t i) const noexcept {
    return Letter{static_cast<std::uint8_t>(text_[i] - 'a')};
  }
  Letter front() const noexcept { return (*this)[0]; }
  Letter back() const noexcept { return (*this)[size() - 1]; }

  Word prefix(std::size_t n) const { return Word(text_.substr(0, n)); }
  Word suffix(std::size_t n) const;
  Word substr(std::size_t pos, std::size_t len) const { return Word(text_.substr(pos, len)); }
  Word drop_front(std::size_t n = 1) const { return Word(text_.substr(n)); }
  Word drop_back(std::size_t n = 1) const { return Word(text_.substr(0, size() - n)); }

  bool starts_with(const Word& p) const noexcept { return view().starts_with(p.view()); }
  bool ends_with(const Word& s) const noexcept { return view().ends_with(s.view()); }
  bool contains(Letter a) const noexcept { return text_.find(a.to_char()) != std::string::npos; }
  bool contains(const Word& f) const noexcept { return text_.find(f.text_) != std::string::npos; }
  std::size_t find(const Word& f, std::size_t from = 0) const noexcept { return text_.find(f.text_, from); }
  std::size_t count(Letter a) const noexcept;
  std::size_t occurrences(const Word& f) const noexcept;

  void push_back(Letter a) { text_.push_back(a.to_char()); }
  Word& operator+=(Letter a) { push_back(a); return *this; }
  Word& operator+=(const Word& w) { text_ += w.text_; return *this; }
  void reserve(std::size_t n) { text_.reserve(n); }

  std::string_view view() const noexcept { return text_; }
  const std::string& str() const noexcept { return text_; }

  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend Word operator+(Word lhs, Letter rhs) { return lhs += rhs; }
  friend Word operator+(Letter lhs, const Word& rhs);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    return a.text_ <=> b.text_;
  }

 private:
  explicit Word(std::string letters) : text_(std::move(letters)) {}

  std::string text_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

Word reversal(const Word& w);
bool is_palindrome(const Word& w);

/// Alph(w): the distinct letters of w, increasing by index.
std::vector<Letter> alphabet_of(const Word& w);

/// One past the largest letter index in w (0 for the empty word). This is the
/// smallest alphabet {a, ..., } that covers w.
std::size_t alphabet_size_of(const Word& w);

}  // namespace epiword

template <>
struct std::hash<epiword::Word> {
  std::size_t operator()(const epiword::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.view());
  }
};
