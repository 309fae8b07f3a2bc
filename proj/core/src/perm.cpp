#include "pcp/perm.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

#include "pcp/error.hpp"
#include "pcp/limits.hpp"

namespace pcp {

Permutation Permutation::from_word(std::vector<int> word) {
  std::vector<char> seen(word.size() + 1, 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int v = word[i];
    if (v < 1 || v > static_cast<int>(word.size()) || seen[v]) {
      throw Error(ErrorCode::InvalidPermutation, "values must be exactly 1..n", i);
    }
    seen[v] = 1;
  }
  Permutation p;
  p.word_ = std::move(word);
  return p;
}

Permutation Permutation::from_digits(std::string_view digits) {
  std::vector<int> word;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < '1' || digits[i] > '9') {
      throw Error(ErrorCode::ParseError, "expected digits 1-9", i);
    }
    word.push_back(digits[i] - '0');
  }
  return from_word(std::move(word));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> word;
  std::size_t i = 0;
  while (i < text.size()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == text.data() + i) {
      throw Error(ErrorCode::ParseError, "expected an integer", i);
    }
    word.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i == text.size()) break;
    if (text[i] != ',') throw Error(ErrorCode::ParseError, "expected ','", i);
    if (++i == text.size()) throw Error(ErrorCode::ParseError, "trailing ','", i);
  }
  return Permutation::from_word(std::move(word));
}

int longest_increasing_subsequence(std::span<const int> word) {
  std::vector<int> tails;
  for (int v : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

namespace {

bool is_identity(const Permutation& pattern) {
  for (int i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != i + 1) return false;
  }
  return true;
}

// Extends a partial embedding: chosen[j] is the position in `word` matched to
// pattern entry j. Every new entry is checked against all earlier ones.
bool embed(std::span<const int> word, const Permutation& pattern, std::vector<std::size_t>& chosen,
           std::size_t from) {
  const std::size_t j = chosen.size();
  if (j == static_cast<std::size_t>(pattern.size())) return true;
  const std::size_t remaining = pattern.size() - j;
  for (std::size_t pos = from; pos + remaining <= word.size(); ++pos) {
    bool consistent = true;
    for (std::size_t k = 0; k < j && consistent; ++k) {
      consistent = (word[chosen[k]] < word[pos]) == (pattern[k] < pattern[j]);
    }
    if (!consistent) continue;
    chosen.push_back(pos);
    if (embed(word, pattern, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern_bruteforce(std::span<const int> word, const Permutation& pattern) {
  std::vector<std::size_t> chosen;
  chosen.reserve(pattern.size());
  return embed(word, pattern, chosen, 0);
}

bool contains_pattern(std::span<const int> word, const Permutation& pattern) {
  if (is_identity(pattern)) return longest_increasing_subsequence(word) >= pattern.size();
  return contains_pattern_bruteforce(word, pattern);
}

bool is_up_down(std::span<const int> word) {
  for (std::size_t p = 0; p + 1 < word.size(); ++p) {
    const bool rise = word[p] < word[p + 1];
    if (rise != (p % 2 == 0)) return false;
  }
  return true;
}

bool in_A2n(const Permutation& p) {
  return p.size() % 2 == 0 && is_up_down(p) && longest_increasing_subsequence(p.word()) < 4;
}

PeakValleyView peak_valley_view(const Permutation& p) {
  PeakValleyView view;
  for (int i = 0; i < p.size(); ++i) (i % 2 == 0 ? view.vals : view.peaks).push_back(p[i]);
  return view;
}

void for_each_A2n(int n, const std::function<void(const Permutation&)>& visit) {
  check_size(n, "for_each_A2n");
  const int len = 2 * n;
  std::vector<int> word;
  std::vector<char> used(len + 1, 0);
  word.reserve(len);

  // tails[k] = smallest last value of an increasing subsequence of length k+1
  const std::function<void(std::array<int, 3>, int)> grow = [&](std::array<int, 3> tails,
                                                                int lis) {
    const int pos = static_cast<int>(word.size());
    if (pos == len) {
      visit(Permutation::from_word(word));
      return;
    }
    for (int v = 1; v <= len; ++v) {
      if (used[v]) continue;
      if (pos > 0) {
        const bool rise = word.back() < v;
        if (rise != (pos % 2 == 1)) continue;
      }
      const int k = static_cast<int>(std::lower_bound(tails.begin(), tails.begin() + lis, v) -
                                     tails.begin());
      if (k == 3) continue;
      std::array<int, 3> next = tails;
      next[k] = v;
      used[v] = 1;
      word.push_back(v);
      grow(next, std::max(lis, k + 1));
      word.pop_back();
      used[v] = 0;
    }
  };
  grow({0, 0, 0}, 0);
}

std::uint64_t count_A2n(int n) {
  std::uint64_t count = 0;
  for_each_A2n(n, [&](const Permutation&) { ++count; });
  return count;
}

std::vector<Permutation> enumerate_A2n(int n) {
  std::vector<Permutation> out;
  for_each_A2n(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(Permutation::from_word(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> enumerate_A2n_filter(int n) {
  std::vector<Permutation> out;
  const Permutation pattern = Permutation::from_word({1, 2, 3, 4});
  for_each_permutation(2 * n, [&](const Permutation& p) {
    if (is_up_down(p) && !contains_pattern_bruteforce(p.word(), pattern)) out.push_back(p);
  });
  return out;
}

Permutation schutzenberger(const Permutation& p) {
  const int n = p.size();
  std::vector<int> word(n);
  for (int i = 0; i < n; ++i) word[i] = n + 1 - p[n - 1 - i];
  return Permutation::from_word(std::move(word));
}

Permutation shifted_concat(const Permutation& sigma, const Permutation& tau) {
  if (!in_A2n(sigma) || !in_A2n(tau)) {
    throw Error(ErrorCode::NotInFamily, "operands must be even up-down permutations avoiding 1234");
  }
  return shifted_concat_words(sigma, tau);
}

Permutation shifted_concat_words(const Permutation& sigma, const Permutation& tau) {
  std::vector<int> word;
  word.reserve(sigma.size() + tau.size());
  for (int v : tau.word()) word.push_back(v + sigma.size());
  word.insert(word.end(), sigma.word().begin(), sigma.word().end());
  return Permutation::from_word(std::move(word));
}

ConditionReport check_conditions(const Permutation& p) {
  if (p.size() % 2 != 0) throw Error(ErrorCode::OddLength, "conditions need an even size");
  const PeakValleyView view = peak_valley_view(p);
  const Permutation pattern123 = Permutation::from_word({1, 2, 3});
  ConditionReport r;
  r.peaks_avoid_123 = !contains_pattern(view.peaks, pattern123);
  r.vals_avoid_123 = !contains_pattern(view.vals, pattern123);

  const int len = p.size();
  r.low_peaks_right_of_valley = true;
  r.high_peaks_decreasing = true;
  for (int i = 0; i < len; i += 2) {  // valleys sit at even 0-based positions
    const int k = p[i];
    for (int j = 1; j < i; j += 2) {
      if (p[j] < k) r.low_peaks_right_of_valley = false;
    }
    bool lower_valley_left = false;
    for (int j = 0; j < i; j += 2) lower_valley_left = lower_valley_left || p[j] < k;
    if (!lower_valley_left) continue;
    int last = len + 1;
    for (int j = i + 1; j < len; j += 2) {
      if (p[j] <= k) continue;
      if (p[j] >= last) r.high_peaks_decreasing = false;
      last = p[j];
    }
  }
  return r;
}

}  // namespace pcp
