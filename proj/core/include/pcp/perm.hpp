#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcp {

/// One-line notation over 1..n.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error{InvalidPermutation} unless `word` is a rearrangement of 1..n.
  static Permutation from_word(std::vector<int> word);
  /// Single-digit shorthand, e.g. "563412" (sizes up to 9).
  static Permutation from_digits(std::string_view digits);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  std::span<const int> word() const noexcept { return word_; }
  int operator[](std::size_t i) const { return word_[i]; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Comma-separated values; the empty permutation is "".
std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);

/// Length of a longest strictly increasing subsequence (patience sorting).
int longest_increasing_subsequence(std::span<const int> word);

/// True iff some subsequence of `word` (distinct values) is order-isomorphic
/// to `pattern`. Increasing patterns take the LIS route.
bool contains_pattern(std::span<const int> word, const Permutation& pattern);
/// Subsequence search without the LIS shortcut.
bool contains_pattern_bruteforce(std::span<const int> word, const Permutation& pattern);

/// sigma(2i-1) < sigma(2i) > sigma(2i+1) wherever defined.
bool is_up_down(std::span<const int> word);
inline bool is_up_down(const Permutation& p) { return is_up_down(p.word()); }

/// Even length, up-down and 1234-avoiding.
bool in_A2n(const Permutation& p);

struct PeakValleyView {
  std::vector<int> vals;   // odd positions (1-indexed)
  std::vector<int> peaks;  // even positions
};
PeakValleyView peak_valley_view(const Permutation& p);

/// Backtracking over up-down prefixes with longest increasing run <= 3;
/// lexicographic order.
void for_each_A2n(int n, const std::function<void(const Permutation&)>& visit);
std::uint64_t count_A2n(int n);
std::vector<Permutation> enumerate_A2n(int n);
/// Filters all (2n)! permutations; independent of the generator.
std::vector<Permutation> enumerate_A2n_filter(int n);

/// result(i) = n+1 - sigma(n+1-i)
Permutation schutzenberger(const Permutation& p);

/// shift_{|sigma|}(tau) followed by sigma. Throws Error{NotInFamily} unless
/// both operands belong to the union of the A_2n(1234).
Permutation shifted_concat(const Permutation& sigma, const Permutation& tau);
/// The same word operation on arbitrary permutations.
Permutation shifted_concat_words(const Permutation& sigma, const Permutation& tau);

struct ConditionReport {
  bool peaks_avoid_123 = false;
  bool vals_avoid_123 = false;
  bool low_peaks_right_of_valley = false;
  bool high_peaks_decreasing = false;

  bool all() const noexcept {
    return peaks_avoid_123 && vals_avoid_123 && low_peaks_right_of_valley && high_peaks_decreasing;
  }
};

/// The four peak/valley conditions. Throws Error{OddLength}.
ConditionReport check_conditions(const Permutation& p);

/// Calls `visit` on every permutation of 1..n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

}  // namespace pcp
