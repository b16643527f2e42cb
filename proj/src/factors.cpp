#include "epiword/factors.hpp"

#include <string>

#include "epiword/errors.hpp"

namespace epiword {

namespace {

void require_length(const Word& w, std::size_t n) {
  if (n == 0 || n > w.size()) {
    throw InputError("factor length " + std::to_string(n) + " out of range 1.." + std::to_string(w.size()));
  }
}

// True when w[i, i+k) < w[j, j+k) under ord.
bool window_less(const Word& w, std::size_t i, std::size_t j, std::size_t k, const Order& ord) {
  for (std::size_t t = 0; t < k; ++t) {
    const Letter x = w[i + t];
    const Letter y = w[j + t];
    if (x != y) return ord.less(x, y);
  }
  return false;
}

}  // namespace

std::set<Word> factors(const Word& w, std::size_t n) {
  require_length(w, n);
  std::set<Word> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

FactorSet::FactorSet(const Word& w, std::size_t max_length) : alphabet_count_(alphabet_of(w).size()) {
  if (max_length > w.size()) require_length(w, max_length);
  by_length_.resize(max_length);
  for (std::size_t n = 1; n <= max_length; ++n) {
    auto& set = by_length_[n - 1];
    for (std::size_t i = 0; i + n <= w.size(); ++i) set.insert(w.substr(i, n));
  }
}

const std::unordered_set<Word>& FactorSet::of_length(std::size_t n) const {
  if (n == 0 || n > by_length_.size()) throw InputError("factor length out of range");
  return by_length_[n - 1];
}

bool FactorSet::contains(const Word& f) const {
  if (f.empty() || f.size() > by_length_.size()) return false;
  return by_length_[f.size() - 1].contains(f);
}

bool FactorSet::consistent() const {
  if (!by_length_.empty() && by_length_[0].size() != alphabet_count_) return false;
  for (std::size_t n = 1; n < by_length_.size(); ++n) {
    for (const Word& f : by_length_[n]) {
      if (!by_length_[n - 1].contains(f.prefix(n)) || !by_length_[n - 1].contains(f.drop_front())) return false;
    }
  }
  return true;
}

std::vector<std::size_t> factor_counts(const Word& w, std::size_t max_n) {
  if (max_n > w.size()) require_length(w, max_n);
  std::vector<std::size_t> counts;
  counts.reserve(max_n);
  std::unordered_set<std::string_view> seen;
  const auto text = w.view();
  for (std::size_t n = 1; n <= max_n; ++n) {
    seen.clear();
    for (std::size_t i = 0; i + n <= text.size(); ++i) seen.insert(text.substr(i, n));
    counts.push_back(seen.size());
  }
  return counts;
}

Word min_factor(const Word& w, std::size_t k, const Order& ord) {
  require_length(w, k);
  ord.require_covers(w);
  std::size_t best = 0;
  for (std::size_t i = 1; i + k <= w.size(); ++i) {
    if (window_less(w, i, best, k, ord)) best = i;
  }
  return w.substr(best, k);
}

Word max_factor(const Word& w, std::size_t k, const Order& ord) { return min_factor(w, k, ord.reversed()); }

// Tracks the occurrences of the current min(w|k). min(w|k+1) extends min(w|k)
// exactly when some occurrence can be extended to the right; the extension
// letter is the smallest one available. The chain stops when only the suffix
// occurrence remains.
Word min_of(const Word& w, const Order& ord) {
  if (w.empty()) throw InputError("min(w) is undefined for the empty word");
  ord.require_covers(w);
  const std::size_t n = w.size();

  Letter smallest = w[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (ord.less(w[i], smallest)) smallest = w[i];
  }
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] == smallest) starts.push_back(i);
  }

  std::size_t k = 1;
  std::vector<std::size_t> next;
  while (true) {
    bool any = false;
    Letter best{};
    for (std::size_t s : starts) {
      if (s + k >= n) continue;
      const Letter x = w[s + k];
      if (!any || ord.less(x, best)) best = x;
      any = true;
    }
    if (!any) break;
    next.clear();
    for (std::size_t s : starts) {
      if (s + k < n && w[s + k] == best) next.push_back(s);
    }
    starts.swap(next);
    ++k;
  }
  return w.substr(starts.front(), k);
}

Word max_of(const Word& w, const Order& ord) { return min_of(w, ord.reversed()); }

}  // namespace epiword
