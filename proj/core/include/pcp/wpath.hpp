#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcp/prograph.hpp"

namespace pcp {

// Down sorts before Up so that structural order agrees with the text form.
enum class Direction : std::uint8_t { Down, Up };

struct WeightedStep {
  Direction direction = Direction::Up;
  int weight = 0;

  friend auto operator<=>(const WeightedStep&, const WeightedStep&) = default;
};

constexpr WeightedStep up(int w) noexcept { return {Direction::Up, w}; }
constexpr WeightedStep down(int w) noexcept { return {Direction::Down, w}; }

struct WeightedDyckPath {
  std::vector<WeightedStep> steps;

  std::size_t length() const noexcept { return steps.size(); }
  /// h_0 .. h_len; may go negative for step lists that are not Dyck.
  std::vector<int> heights() const;

  friend auto operator<=>(const WeightedDyckPath&, const WeightedDyckPath&) = default;
  friend bool operator==(const WeightedDyckPath&, const WeightedDyckPath&) = default;
};

/// `U<d>` / `D<e>` tokens separated by single spaces; the empty path is "".
std::string to_string(const WeightedDyckPath& path);
WeightedDyckPath parse_path(std::string_view text);

enum class Constraint : std::uint8_t {
  UpWeightAboveStart,     // C1
  DownWeightAboveEnd,     // C2
  RisesDecreasing,        // C3
  DescentsIncreasing,     // C4
  PeakTooHeavy,           // C5: d + e <= h
  ValleyTooLight,         // C6: d + e >= h
  NotDyck,
};

/// Short id: "C1".."C6" or "dyck".
std::string_view constraint_id(Constraint c);

struct Violation {
  Constraint constraint;
  std::size_t step;  // index of the step at which it was detected
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_weighted_path(const WeightedDyckPath& path);

/// Up(d) for a coproduct at slot d, Down(w-2-k) for a product at slot k on
/// width w, in canonical move order.
WeightedDyckPath dw(const Prograph& p);

/// Throws Error{InvalidPath} when the path violates any constraint.
Prograph dw_inverse(const WeightedDyckPath& path);

/// Moves whose frontier slots realise the given path (no validation).
MoveSequence moves_from_path(const WeightedDyckPath& path);
WeightedDyckPath path_from_moves(std::span<const Move> moves);

/// Depth-first generation with incremental pruning; visits in lexicographic
/// order.
void for_each_constrained_path(int n, const std::function<void(const WeightedDyckPath&)>& visit);
std::uint64_t count_constrained_paths(int n);

/// Sorted. Prefix-split across `threads` workers; output independent of it.
std::vector<WeightedDyckPath> enumerate_constrained_paths(int n, unsigned threads = 1);

/// The prographs of size n, obtained as dw_inverse over the constrained paths.
std::vector<Prograph> enumerate_prographs(int n, unsigned threads = 1);

/// Height strictly positive between the endpoints (the empty path is not primitive).
bool is_primitive(const WeightedDyckPath& path);

/// Splits at every return to height zero.
std::vector<WeightedDyckPath> primitive_factors(const WeightedDyckPath& path);

}  // namespace pcp
