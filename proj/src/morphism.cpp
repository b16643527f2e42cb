#include "epiword/morphism.hpp"

#include "epiword/errors.hpp"

namespace epiword {

Word psi(Letter a, const Word& w) {
  Word out;
  out.reserve(2 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != a) out.push_back(a);
    out.push_back(w[i]);
  }
  return out;
}

std::optional<Word> psi_inverse(Letter a, const Word& w) {
  Word out;
  out.reserve(w.size());
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != a) return std::nullopt;
    if (i + 1 < w.size() && w[i + 1] != a) {
      out.push_back(w[i + 1]);
      i += 2;
    } else {
      out.push_back(a);
      i += 1;
    }
  }
  return out;
}

MorphismComposition MorphismComposition::parse(std::string_view text) {
  std::vector<Letter> letters;
  for (char c : text) letters.push_back(Letter::from_char(c));
  return MorphismComposition(std::move(letters));
}

Word MorphismComposition::apply(const Word& w) const {
  Word out = w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out = psi(*it, out);
  return out;
}

std::string MorphismComposition::to_string() const {
  std::string s;
  for (Letter a : letters_) s.push_back(a.to_char());
  return s;
}

// A suffix of w is a palindrome iff it equals the prefix of reversal(w) of the
// same length, so the answer is the longest border of reversal(w) # w.
std::size_t longest_palindromic_suffix(const Word& w) {
  if (w.empty()) return 0;
  std::string s;
  s.reserve(2 * w.size() + 1);
  s.append(w.view().rbegin(), w.view().rend());
  s.push_back('#');
  s.append(w.view());
  std::vector<std::size_t> border(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return border.back();
}

Word pal_closure(const Word& w) {
  const std::size_t keep = w.size() - longest_palindromic_suffix(w);
  return w + reversal(w.prefix(keep));
}

}  // namespace epiword
