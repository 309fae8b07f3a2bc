#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcp/perm.hpp"
#include "pcp/prograph.hpp"

namespace pcp {

/// Non-decreasing f on 1..n with f(i) <= i-1.
class ParkingFunctionND {
 public:
  ParkingFunctionND() = default;
  /// Throws Error{InvalidParkingFunction}.
  static ParkingFunctionND from_values(std::vector<int> values);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const int> values() const noexcept { return values_; }
  /// 1-based, as in f(i).
  int operator()(int i) const { return values_.at(i - 1); }

  friend auto operator<=>(const ParkingFunctionND&, const ParkingFunctionND&) = default;
  friend bool operator==(const ParkingFunctionND&, const ParkingFunctionND&) = default;

 private:
  std::vector<int> values_;
};

/// "0,0,1,2"; the empty function is "".
std::string to_string(const ParkingFunctionND& f);
ParkingFunctionND parse_parking_function(std::string_view text);

/// All non-decreasing parking functions of size n, lexicographic.
std::vector<ParkingFunctionND> enumerate_parking_functions(int n);

/// Plane binary tree whose node ids are its depth-left-first (preorder)
/// labels minus one; node 0 is the root.
class PlanarBinaryTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    friend auto operator<=>(const Node&, const Node&) = default;
  };

  PlanarBinaryTree() = default;
  /// Throws Error{ParseError} unless ids follow preorder from node 0.
  static PlanarBinaryTree from_nodes(std::vector<Node> nodes);

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  const Node& node(int id) const { return nodes_.at(id); }

  friend auto operator<=>(const PlanarBinaryTree&, const PlanarBinaryTree&) = default;
  friend bool operator==(const PlanarBinaryTree&, const PlanarBinaryTree&) = default;

 private:
  std::vector<Node> nodes_;
};

/// `(L)(R)` per node with `.` for an absent child; the empty tree is ".".
std::string to_string(const PlanarBinaryTree& t);
PlanarBinaryTree parse_tree(std::string_view text);

/// 0 for a strictly decreasing word, else n - j for the first rise at j.
int rise_statistic(std::span<const int> word);

/// f(i) = rise statistic of the values {1..i}. Throws PatternViolation when
/// the permutation contains 123.
ParkingFunctionND pf_from_perm123(const Permutation& p);
Permutation perm123_from_pf(const ParkingFunctionND& f);

/// Node i takes the free slot with f(i) free slots to its left.
PlanarBinaryTree tree_from_pf(const ParkingFunctionND& f);
ParkingFunctionND pf_from_tree(const PlanarBinaryTree& t);

/// Defined on prographs whose weighted path is U^n D^n. Vals come from the
/// rise weights; Peaks are n + S(w) where w is built from the descent weights
/// read right to left and S is the permutation involution. Throws
/// NotSinglePeak.
Permutation single_peak_to_perm(const Prograph& p);
/// Defined on A_2n(1234) with Vals = {1..n}. Throws NotInFamily or
/// ValleysNotInitialSegment.
Prograph perm_to_single_peak(const Permutation& p);

}  // namespace pcp
