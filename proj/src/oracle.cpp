#include "epiword/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "epiword/deciders.hpp"
#include "epiword/errors.hpp"
#include "epiword/morphism.hpp"

namespace epiword {

namespace {

// Summary of a palindromic prefix u that is enough to continue the backward
// construction for factors of length n: u itself while |u| <= n, otherwise its
// length-n factors and its first n letters (the last n follow by symmetry).
struct Summary {
  bool whole = true;
  Word head;
  std::set<Word> factors;

  friend auto operator<=>(const Summary&, const Summary&) = default;
};

void add_factors(const Word& w, std::size_t n, std::set<Word>& out) {
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
}

Summary summarize(Word u, std::size_t n) {
  Summary s;
  if (u.size() <= n) {
    s.head = std::move(u);
    return s;
  }
  s.whole = false;
  add_factors(u, n, s.factors);
  s.head = u.prefix(n);
  return s;
}

// u(x d) = psi_x(u(d) x).
Summary prepend(const Summary& s, Letter x, std::size_t n) {
  if (s.whole) return summarize(psi(x, s.head + x), n);
  Summary next;
  next.whole = false;
  next.head = psi(x, s.head).prefix(n);
  auto grown = s.factors;
  grown.insert(reversal(s.head.prefix(n - 1)) + x);
  for (const Word& g : grown) add_factors(psi(x, g), n, next.factors);
  return next;
}

}  // namespace

std::set<Word> episturmian_factors(std::span<const Letter> letters, std::size_t n, std::size_t bound) {
  if (n == 0) throw InputError("factor length must be at least 1");
  std::set<Summary> layer{Summary{}};
  for (std::size_t depth = 0; depth < bound; ++depth) {
    std::set<Summary> next;
    for (const Summary& s : layer) {
      for (Letter x : letters) next.insert(prepend(s, x, n));
    }
    layer = std::move(next);
  }
  std::set<Word> out;
  for (const Summary& s : layer) {
    if (s.whole) {
      if (s.head.size() == n) out.insert(s.head);
    } else {
      out.insert(s.factors.begin(), s.factors.end());
    }
  }
  return out;
}

std::set<Word> episturmian_factors_naive(std::span<const Letter> letters, std::size_t n, std::size_t bound) {
  std::set<Word> out;
  if (letters.empty()) return out;
  std::vector<std::size_t> digits(bound, 0);
  while (true) {
    Word u;
    for (std::size_t d : digits) u = pal_closure(u + letters[d]);
    add_factors(u, n, out);
    std::size_t i = 0;
    while (i < bound && ++digits[i] == letters.size()) digits[i++] = 0;
    if (i == bound) break;
  }
  return out;
}

bool oracle_is_finite_episturmian(const Word& w, std::size_t directive_bound) {
  if (directive_bound == 0) throw InputError("directive bound must be at least 1");
  if (w.empty()) return true;
  const auto letters = alphabet_of(w);

  // Grow-only cache keyed by (letters, length, bound); entries never change.
  static std::mutex mutex;
  static std::map<std::tuple<Word, std::size_t, std::size_t>, std::set<Word>> cache;
  const auto key = std::make_tuple(Word::from_letters(letters), w.size(), directive_bound);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second.contains(w);
  }
  auto factors = episturmian_factors(letters, w.size(), directive_bound);
  const bool found = factors.contains(w);
  std::lock_guard lock(mutex);
  cache.try_emplace(key, std::move(factors));
  return found;
}

bool oracle_is_finite_episturmian(const Word& w) { return oracle_is_finite_episturmian(w, std::max<std::size_t>(1, 2 * w.size())); }

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t n) {
  if (alphabet_size == 0 || alphabet_size > kMaxAlphabet) throw InputError("alphabet size out of range");
  std::vector<Word> out;
  std::vector<Letter> letters(n, Letter{0});
  while (true) {
    out.push_back(Word::from_letters(letters));
    std::size_t i = n;
    while (i > 0 && ++letters[i - 1].index == alphabet_size) letters[--i].index = 0;
    if (i == 0) break;
  }
  return out;
}

std::set<Word> enumerate_balanced(std::size_t n) {
  if (n > kBalancedEnumerationLimit) {
    throw InputError("enumerate_balanced is limited to n <= " + std::to_string(kBalancedEnumerationLimit));
  }
  std::set<Word> out;
  for (Word& w : all_words(2, n)) {
    if (is_balanced(w)) out.insert(std::move(w));
  }
  return out;
}

std::vector<std::string_view> sweep_checks() { return {"episturmian", "cor2", "witness"}; }

SweepReport sweep(std::string_view check, std::size_t alphabet_size, std::size_t max_len) {
  const auto names = sweep_checks();
  if (std::find(names.begin(), names.end(), check) == names.end()) {
    throw InputError("unknown check \"" + std::string(check) + "\" (expected episturmian, cor2 or witness)");
  }
  if (alphabet_size != 2 && alphabet_size != 3) throw InputError("sweeps support alphabets of size 2 or 3");
  const std::size_t limit = alphabet_size == 2 ? 14 : 8;
  if (max_len > limit) {
    throw InputError("max length " + std::to_string(max_len) + " exceeds the sweep budget of " +
                     std::to_string(limit) + " for a " + std::to_string(alphabet_size) + "-letter alphabet");
  }
  if (check == "cor2" && alphabet_size != 2) throw InputError("the cor2 check is binary only");

  const auto started = std::chrono::steady_clock::now();
  SweepReport report;
  report.check = std::string(check);
  report.alphabet_size = alphabet_size;
  report.max_length = max_len;
  auto verdict_text = [](bool b) { return std::string(b ? "accept" : "reject"); };

  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const Word& w : all_words(alphabet_size, len)) {
      ++report.total_words;
      const bool expected =
          alphabet_size == 2 ? is_balanced(w) : oracle_is_finite_episturmian(w, 2 * len);
      bool got = false;
      if (check == "episturmian") {
        const auto v = is_finite_episturmian(w);
        got = v.accepted;
        if (v.divergent_branches) ++report.divergent_words;
      } else if (check == "cor2") {
        got = alphabet_of(w).size() < 2 || cor2_sturmian_test(w).sturmian;
      } else {
        const auto u = find_witness(w);
        got = u && check_theorem3(w, *u);
      }
      if (got != expected) report.mismatches.push_back({w, verdict_text(got), verdict_text(expected)});
    }
  }
  report.wall_time = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace epiword
