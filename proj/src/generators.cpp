#include "epiword/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <optional>
#include <string>

#include "epiword/errors.hpp"

namespace epiword {

DirectiveSpec DirectiveSpec::parse(std::string_view text) {
  const auto star = text.find('*');
  if (star == std::string_view::npos) return DirectiveSpec(Word::parse(text), Word());
  if (text.find('*', star + 1) != std::string_view::npos) {
    throw InputError("malformed directive \"" + std::string(text) + "\": more than one '*'");
  }
  DirectiveSpec d(Word::parse(text.substr(0, star)), Word::parse(text.substr(star + 1)));
  if (d.period().empty()) {
    throw InputError("malformed directive \"" + std::string(text) + "\": empty period after '*'");
  }
  return d;
}

std::optional<Letter> DirectiveSpec::letter(std::size_t i) const noexcept {
  if (i < preperiod_.size()) return preperiod_[i];
  if (period_.empty()) return std::nullopt;
  return period_[(i - preperiod_.size()) % period_.size()];
}

std::vector<Letter> DirectiveSpec::alphabet() const { return alphabet_of(preperiod_ + period_); }

bool DirectiveSpec::is_strict() const {
  if (period_.empty()) return false;
  for (Letter a : alphabet_of(preperiod_)) {
    if (!period_.contains(a)) return false;
  }
  return true;
}

std::string DirectiveSpec::to_string() const {
  if (period_.empty()) return preperiod_.str();
  return preperiod_.str() + "*" + period_.str();
}

std::vector<Word> palindromic_prefixes(const DirectiveSpec& d, std::size_t count) {
  std::vector<Word> out;
  if (count == 0) return out;
  out.reserve(count);
  out.emplace_back();
  for (std::size_t i = 0; out.size() < count; ++i) {
    const auto x = d.letter(i);
    if (!x) {
      throw InsufficientDirective("directive " + d.to_string() + " has only " + std::to_string(i) +
                                  " letters; u_" + std::to_string(count) + " needs " + std::to_string(count - 1));
    }
    out.push_back(pal_closure(out.back() + *x));
  }
  return out;
}

// Appends instead of re-closing: u_{n+1} = u_n x_n u_n when x_n is new, and
// u_{n+1} = u_n u_m^-1 u_n when x_m is the previous occurrence of x_n.
Word standard_prefix(const DirectiveSpec& d, std::size_t min_len) {
  std::string u;
  std::array<std::optional<std::size_t>, kMaxAlphabet> last_length{};
  for (std::size_t i = 0; u.size() < min_len; ++i) {
    const auto x = d.letter(i);
    if (!x) {
      throw InsufficientDirective("directive " + d.to_string() + " is exhausted at length " +
                                  std::to_string(u.size()) + " < " + std::to_string(min_len));
    }
    const std::size_t n = u.size();
    if (const auto m = last_length[x->index]) {
      u.append(u, *m, n - *m);
    } else {
      u.reserve(2 * n + 1);
      u.push_back(x->to_char());
      u.append(u, 0, n);
    }
    last_length[x->index] = n;
  }
  return Word::parse(u);
}

std::size_t standard_factor_count(const DirectiveSpec& d, std::size_t k) {
  if (d.is_finite()) throw InputError("factor counts need an infinite directive");
  if (k == 0) return 1;
  const std::size_t period_letters = alphabet_of(d.period()).size();
  // Letters of x_{i+1} x_{i+2} ... (0-based i).
  auto tail_letters = [&](std::size_t i) {
    if (i >= d.preperiod().size()) return period_letters;
    return alphabet_of(d.preperiod().drop_front(i) + d.period()).size();
  };
  std::size_t count = d.alphabet().size();
  // lengths[n] = |u_{n+1}|
  std::vector<std::size_t> lengths{0};
  std::array<std::optional<std::size_t>, kMaxAlphabet> last_length{};
  std::size_t n = 0;
  for (std::size_t j = 1; j < k; ++j) {
    while (lengths.back() < j) {
      const Letter x = *d.letter(lengths.size() - 1);
      const std::size_t len = lengths.back();
      const auto m = last_length[x.index];
      lengths.push_back(m ? 2 * len - *m : 2 * len + 1);
      last_length[x.index] = len;
    }
    while (lengths[n + 1] < j) ++n;
    count += tail_letters(n + 1) - 1;
  }
  return count;
}

// Keeps the images mu_i(c) of every letter: mu_i = mu_{i-1} psi_{x_i} gives
// mu_i(x_i) = mu_{i-1}(x_i) and mu_i(c) = mu_{i-1}(x_i) mu_{i-1}(c) otherwise.
std::vector<Word> h_words(const DirectiveSpec& d, std::size_t n) {
  std::array<Word, kMaxAlphabet> image;
  for (std::uint8_t c = 0; c < kMaxAlphabet; ++c) image[c] = Word::repeat(Letter{c}, 1);
  std::vector<Word> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto next = d.letter(i);
    if (!next) {
      throw InsufficientDirective("directive " + d.to_string() + " has fewer than " + std::to_string(n) + " letters");
    }
    out.push_back(image[next->index]);
    const Word& head = image[next->index];
    for (std::uint8_t c = 0; c < kMaxAlphabet; ++c) {
      if (c != next->index) image[c] = head + image[c];
    }
  }
  return out;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, v);
    if (part.empty() || ec != std::errc() || ptr != end) {
      throw InputError("malformed rational \"" + std::string(text) + "\"");
    }
    return v;
  };
  Rational r;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    r.num = parse_int(text);
  } else {
    r.num = parse_int(text.substr(0, slash));
    r.den = parse_int(text.substr(slash + 1));
  }
  if (r.den <= 0) throw InputError("malformed rational \"" + std::string(text) + "\": denominator must be positive");
  const auto g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string Rational::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

void MechanicalSpec::validate() const {
  auto in_unit = [](const Rational& r) { return r.den > 0 && r.num >= 0 && r.num <= r.den; };
  if (!in_unit(alpha) || !in_unit(rho)) throw InputError("mechanical word needs 0 <= alpha, rho <= 1");
}

Word mechanical_prefix(const MechanicalSpec& m, std::size_t n) {
  m.validate();
  using wide = __int128;
  const wide den = static_cast<wide>(m.alpha.den) * m.rho.den;
  // value(i) * den = i * alpha.num * rho.den + rho.num * alpha.den
  auto rounded = [&](std::size_t i) {
    const wide num = static_cast<wide>(i) * m.alpha.num * m.rho.den + static_cast<wide>(m.rho.num) * m.alpha.den;
    return m.variant == Rounding::floor ? num / den : (num + den - 1) / den;
  };
  Word out;
  out.reserve(n);
  wide previous = rounded(0);
  for (std::size_t i = 0; i < n; ++i) {
    const wide current = rounded(i + 1);
    out.push_back(current == previous ? Letter{0} : Letter{1});
    previous = current;
  }
  return out;
}

void EpiskewSpec::validate() const {
  if (inner_directive.preperiod().empty() && inner_directive.period().empty()) {
    throw InputError("episkew spec needs a non-empty inner directive");
  }
  if ((inner_directive.preperiod() + inner_directive.period()).contains(excluded_letter)) {
    throw InputError(std::string("excluded letter '") + excluded_letter.to_char() +
                     "' must not occur in the inner directive");
  }
  if (excluded_letter.index >= kMaxAlphabet) throw InputError("excluded letter outside the alphabet");
  const std::size_t limit = episkew_head_source(*this).size();
  if (suffix_index == 0 || suffix_index > limit) {
    throw InputError("suffix_index " + std::to_string(suffix_index) + " out of range 1.." + std::to_string(limit));
  }
}

Word episkew_head_source(const EpiskewSpec& e) {
  const Word s_p = standard_prefix(e.inner_directive, e.p).prefix(e.p);
  return e.mu.apply(reversal(s_p) + e.excluded_letter);
}

Word episkew_prefix(const EpiskewSpec& e, std::size_t n) {
  e.validate();
  Word t = episkew_head_source(e).suffix(e.suffix_index);
  if (t.size() < n) {
    // mu never shortens a word, so |s| letters of s give at least |s| letters.
    const std::size_t need = n - t.size();
    t += e.mu.apply(standard_prefix(e.inner_directive, need).prefix(need));
  }
  return t.prefix(n);
}

Word eventually_periodic_prefix(const Word& u, const Word& v, std::size_t n) {
  if (v.empty()) throw InputError("eventually periodic word needs a non-empty period");
  Word out = u.prefix(n);
  out.reserve(n);
  for (std::size_t i = 0; out.size() < n; ++i) out.push_back(v[i % v.size()]);
  return out;
}

Word generate_prefix(const WordSource& source, std::size_t n) {
  struct Visitor {
    std::size_t n;
    Word operator()(const DirectiveSpec& d) const { return standard_prefix(d, n).prefix(n); }
    Word operator()(const MechanicalSpec& m) const { return mechanical_prefix(m, n); }
    Word operator()(const EpiskewSpec& e) const { return episkew_prefix(e, n); }
    Word operator()(const SkewSpec& s) const { return eventually_periodic_prefix(s.head, s.cycle, n); }
  };
  return std::visit(Visitor{n}, source);
}

std::string describe(const WordSource& source) {
  struct Visitor {
    std::string operator()(const DirectiveSpec& d) const { return "directive " + d.to_string(); }
    std::string operator()(const MechanicalSpec& m) const {
      return std::string("mechanical ") + m.alpha.to_string() + ":" + m.rho.to_string() +
             (m.variant == Rounding::ceiling ? " (ceiling)" : "");
    }
    std::string operator()(const EpiskewSpec& e) const {
      return std::string("episkew mu=") + e.mu.to_string() + " x=" + e.excluded_letter.to_char() +
             " inner=" + e.inner_directive.to_string() + " p=" + std::to_string(e.p) +
             " suffix=" + std::to_string(e.suffix_index);
    }
    std::string operator()(const SkewSpec& s) const { return "skew " + s.head.str() + "," + s.cycle.str(); }
  };
  return std::visit(Visitor{}, source);
}

}  // namespace epiword
