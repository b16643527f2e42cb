#include "epiword/deciders.hpp"

#include <algorithm>
#include <optional>
#include <variant>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "epiword/errors.hpp"
#include "epiword/factors.hpp"
#include "epiword/order.hpp"

namespace epiword {

std::vector<Letter> separating_letters(const Word& w, std::size_t alphabet_size) {
  if (alphabet_size > kMaxAlphabet || alphabet_size < alphabet_size_of(w)) {
    throw InputError("alphabet size does not cover the word");
  }
  std::vector<Letter> out;
  for (std::uint8_t c = 0; c < alphabet_size; ++c) {
    const Letter a{c};
    bool separating = true;
    for (std::size_t i = 0; i + 1 < w.size() && separating; ++i) {
      separating = w[i] == a || w[i + 1] == a;
    }
    if (separating) out.push_back(a);
  }
  return out;
}

std::vector<Letter> separating_letters(const Word& w) { return separating_letters(w, alphabet_size_of(w)); }

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::NoSeparatingLetter: return "NoSeparatingLetter";
    case RejectReason::ReductionFailed: return "ReductionFailed";
    case RejectReason::WitnessCheckFailed: return "WitnessCheckFailed";
    case RejectReason::NotBalanced: return "NotBalanced";
  }
  return "ReductionFailed";
}

std::optional<RejectReason> reject_reason_from_string(std::string_view text) {
  for (auto r : {RejectReason::NoSeparatingLetter, RejectReason::ReductionFailed,
                 RejectReason::WitnessCheckFailed, RejectReason::NotBalanced}) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

namespace {

// Directive letters whose standard word starts with the palindrome x^m y x^m
// (or x^p for a unary word), so that a word in x* y x* ∪ x* is a prefix factor.
std::optional<Word> base_directive(const Word& w) {
  const auto letters = alphabet_of(w);
  if (letters.empty()) return Word();
  if (letters.size() == 1) return Word::repeat(letters[0], 1);
  if (letters.size() != 2) return std::nullopt;
  Letter x = letters[0];
  Letter y = letters[1];
  if (w.count(y) != 1) {
    std::swap(x, y);
    if (w.count(y) != 1) return std::nullopt;
  }
  const std::size_t p = w.find(Word::repeat(y, 1));
  const std::size_t q = w.size() - 1 - p;
  return Word::repeat(x, std::max(p, q)) + y;
}

struct Reduction {
  std::vector<Letter> letters;  // outermost first
  Word base;
};

// Desubstitution search with memo. A word is accepted at the base case or when
// some separating letter x gives an accepted preimage: W = w or x w (so that W
// starts with x), with a trailing lone x stripped, parsed by psi_x^-1. The
// preimage is strictly shorter than w whenever w is not a base word.
class Reducer {
 public:
  std::optional<Reduction> reduce(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    auto result = compute(w);
    memo_.emplace(w, result);
    return result;
  }

  bool divergent() const noexcept { return divergent_; }

 private:
  std::optional<Reduction> compute(const Word& w) {
    if (base_directive(w)) return Reduction{{}, w};
    std::optional<Reduction> accepted;
    bool any_rejected = false;
    for (Letter x : separating_letters(w)) {
      Word big = w.front() == x ? w : x + w;
      if (big.back() == x) big = big.drop_back();
      auto pre = psi_inverse(x, big);
      std::optional<Reduction> branch;
      if (pre) branch = reduce(*pre);
      if (!branch) {
        any_rejected = true;
        continue;
      }
      if (!accepted) {
        branch->letters.insert(branch->letters.begin(), x);
        accepted = std::move(branch);
      }
    }
    if (accepted && any_rejected) divergent_ = true;
    return accepted;
  }

  std::unordered_map<Word, std::optional<Reduction>> memo_;
  bool divergent_ = false;
};

std::optional<Word> shortest_bad_factor(const Word& w, Reducer& reducer) {
  for (std::size_t n = 2; n <= w.size(); ++n) {
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      if (!seen.insert(w.view().substr(i, n)).second) continue;
      Word f = w.substr(i, n);
      if (!reducer.reduce(f)) return f;
    }
  }
  return std::nullopt;
}

constexpr std::size_t kEmbeddingBudget = std::size_t{1} << 22;

}  // namespace

Verdict is_finite_episturmian(const Word& w) {
  if (w.empty()) throw InputError("the empty word is not a valid input");
  Reducer reducer;
  Verdict verdict;
  const auto reduction = reducer.reduce(w);
  verdict.divergent_branches = reducer.divergent();
  if (!reduction) {
    verdict.reason = separating_letters(w).empty() ? RejectReason::NoSeparatingLetter : RejectReason::ReductionFailed;
    verdict.bad_factor = shortest_bad_factor(w, reducer);
    return verdict;
  }

  Certificate cert;
  cert.reduction_letters = reduction->letters;
  cert.base_word = reduction->base;
  Word preperiod = Word::from_letters(reduction->letters) + *base_directive(reduction->base);
  Word period = Word::from_letters(alphabet_of(reduction->base));
  if (period.empty()) period = Word::repeat(Letter{0}, 1);
  cert.embedding_directive = DirectiveSpec(std::move(preperiod), std::move(period));

  std::size_t length = std::max<std::size_t>(64, 2 * w.size());
  std::size_t at = std::string_view::npos;
  Word s;
  while (at == std::string_view::npos && length <= kEmbeddingBudget) {
    s = standard_prefix(cert.embedding_directive, length);
    at = s.find(w);
    length *= 2;
  }
  if (at == std::string_view::npos) {
    verdict.reason = RejectReason::WitnessCheckFailed;
    return verdict;
  }
  cert.occurrence_index = at;
  cert.witness_u = s.prefix(w.size());
  if (!check_theorem3(w, cert.witness_u)) {
    verdict.reason = RejectReason::WitnessCheckFailed;
    return verdict;
  }
  verdict.accepted = true;
  verdict.certificate = std::move(cert);
  return verdict;
}

bool check_theorem3(const Word& w, const Word& u) {
  if (w.empty()) throw InputError("the empty word is not a valid input");
  const std::size_t size = std::max(alphabet_size_of(w), alphabet_size_of(u));
  auto letters = alphabet_of(w + u);

  struct Case {
    Order order;
    Word min;
  };
  std::vector<Case> cases;
  for (const Order& ord : orders_over(letters, size)) {
    if (!w.contains(ord.min_letter())) continue;
    Word m = min_of(w, ord);
    if (u.size() + 1 < m.size()) {
      throw InputError("witness too short: |u| = " + std::to_string(u.size()) + " but min(w) under order " +
                       ord.to_string() + " has length " + std::to_string(m.size()));
    }
    cases.push_back({ord, std::move(m)});
  }
  return std::all_of(cases.begin(), cases.end(), [&](const Case& c) {
    const Word lhs = c.order.min_letter() + u.prefix(c.min.size() - 1);
    return lex_compare(lhs, c.min, c.order) != std::strong_ordering::greater;
  });
}

std::optional<Word> find_witness(const Word& w) {
  auto verdict = is_finite_episturmian(w);
  if (!verdict.accepted) return std::nullopt;
  return verdict.certificate->witness_u;
}

namespace {

void require_binary(const Word& w) {
  if (alphabet_size_of(w) > 2) throw InputError("expected a word over {a, b}: " + w.str());
}

}  // namespace

bool is_balanced(const Word& w) {
  require_binary(w);
  const std::size_t n = w.size();
  std::vector<std::size_t> bs(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) bs[i + 1] = bs[i] + (w[i] == Letter{1} ? 1 : 0);
  for (std::size_t len = 1; len < n; ++len) {
    std::size_t lo = bs[len];
    std::size_t hi = lo;
    for (std::size_t i = 1; i + len <= n; ++i) {
      const std::size_t c = bs[i + len] - bs[i];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

SturmianTest cor2_sturmian_test(const Word& w) {
  require_binary(w);
  if (!w.contains(Letter{0}) || !w.contains(Letter{1})) {
    throw InputError("the aua/bub test needs both letters a and b: \"" + w.str() + "\"");
  }
  const Order ab = Order::alphabetical(2);
  SturmianTest out;
  out.min_word = min_of(w, ab);
  out.max_word = max_of(w, ab);
  const Word lo = out.min_word.drop_front();
  const Word hi = out.max_word.drop_front();
  std::size_t n = 0;
  while (n < lo.size() && n < hi.size() && lo[n] == hi[n]) ++n;
  out.common_prefix = lo.prefix(n);
  if (n < lo.size()) out.next_in_min = lo[n];
  if (n < hi.size()) out.next_in_max = hi[n];
  out.sturmian = !(out.next_in_min == Letter{0} && out.next_in_max == Letter{1});
  return out;
}

std::optional<Word> shortest_non_episturmian_factor(const Word& w) {
  Reducer reducer;
  return shortest_bad_factor(w, reducer);
}

WideSenseResult wide_sense_check(const Word& prefix) {
  Reducer reducer;
  if (reducer.reduce(prefix)) return {};
  return {false, shortest_bad_factor(prefix, reducer)};
}

// Directive sources stop once the exact factor count is reached. Other sources
// stop when the factor set survives two consecutive doublings.
Word stable_prefix(const WordSource& source, std::size_t k, std::size_t budget) {
  if (k == 0) throw InputError("factor length must be at least 1");
  // Views into w; w must outlive the set.
  auto factor_set = [k](const Word& w, std::size_t length) {
    std::unordered_set<std::string_view> set;
    for (std::size_t i = 0; i + k <= length; ++i) set.insert(w.view().substr(i, k));
    return set;
  };
  const auto* directive = std::get_if<DirectiveSpec>(&source);
  if (directive && directive->is_finite()) throw InputError("an infinite directive is required");
  const std::optional<std::size_t> target =
      directive ? std::optional<std::size_t>(standard_factor_count(*directive, k)) : std::nullopt;

  std::size_t length = std::max<std::size_t>(64, 2 * k);
  if (target) {
    for (; length <= budget; length *= 2) {
      Word w = generate_prefix(source, length);
      if (factor_set(w, w.size()).size() == *target) return w;
    }
  } else {
    while (4 * length <= budget) {
      Word longest = generate_prefix(source, 4 * length);
      const auto a = factor_set(longest, length);
      if (a == factor_set(longest, 2 * length) && a == factor_set(longest, 4 * length)) return longest;
      length *= 2;
    }
  }
  throw Inconclusive("length-" + std::to_string(k) + " factors of " + describe(source) +
                     " did not stabilise within " + std::to_string(budget) + " letters");
}

Eq1Report eq1_report(const DirectiveSpec& d, std::size_t k) {
  if (d.is_finite()) throw InputError("an infinite directive is required");
  Eq1Report report;
  const Word s = stable_prefix(d, k);
  report.prefix_length = s.size();
  report.strict = d.is_strict();
  const auto letters = d.alphabet();
  const std::size_t size = alphabet_size_of(d.preperiod() + d.period());
  for (const Order& ord : orders_over(letters, size)) {
    const Word lhs = ord.min_letter() + s.prefix(k - 1);
    const auto cmp = lex_compare(lhs, min_factor(s, k, ord), ord);
    if (cmp == std::strong_ordering::greater) report.inequality_holds = false;
    if (cmp != std::strong_ordering::equal) report.equality_holds = false;
  }
  return report;
}

bool check_eq1_prefix(const DirectiveSpec& d, std::size_t k) {
  const auto r = eq1_report(d, k);
  return r.inequality_holds && (!r.strict || r.equality_holds);
}

bool check_fine_prefix(const WordSource& source, std::size_t k) {
  const Word t = stable_prefix(source, k);
  const auto letters = alphabet_of(t);
  if (letters.size() < 2) throw InputError("fineness needs a word over at least two letters");
  std::optional<Word> tail;
  for (const Order& ord : orders_over(letters, alphabet_size_of(t))) {
    const Word m = min_factor(t, k, ord);
    if (m.front() != ord.min_letter()) return false;
    Word rest = m.drop_front();
    if (tail && *tail != rest) return false;
    tail = std::move(rest);
  }
  return true;
}

std::vector<std::size_t> factor_complexity(const Word& prefix, std::size_t max_n) {
  return factor_counts(prefix, max_n);
}

}  // namespace epiword
