#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcp/prograph.hpp"

namespace pcp {

using BigInt = boost::multiprecision::cpp_int;

/// 2 (3n)! / (n! (n+1)! (n+2)!), exact.
BigInt catalan3(int n);

/// First entries of OEIS A005789, n = 0..10.
inline constexpr std::array<std::uint64_t, 11> kCatalan3Table{
    1, 1, 5, 42, 462, 6006, 87516, 1385670, 23371634, 414315330, 7646001090};

/// Rectangular standard Young tableau with three rows of equal length,
/// French convention: row 0 is the bottom row.
class StandardTableau3 {
 public:
  using Row = std::vector<int>;

  StandardTableau3() = default;

  /// Throws Error{InvalidTableau} unless the rows have equal length, rows
  /// and columns strictly increase, and the entries are exactly 1..3n.
  static StandardTableau3 from_rows(Row bottom, Row middle, Row top);

  int size() const noexcept { return static_cast<int>(rows_[0].size()); }
  const Row& row(int r) const { return rows_.at(r); }
  const std::array<Row, 3>& rows() const noexcept { return rows_; }

  friend auto operator<=>(const StandardTableau3&, const StandardTableau3&) = default;
  friend bool operator==(const StandardTableau3&, const StandardTableau3&) = default;

 private:
  std::array<Row, 3> rows_;
};

/// `row;row;row`, comma-separated entries, bottom row first. The empty
/// tableau is ";;".
std::string to_string(const StandardTableau3& t);
StandardTableau3 parse_tableau(std::string_view text);

/// Word over {X, Y, Z}; every prefix has #X >= #Y >= #Z.
struct LatticePath3D {
  std::string word;

  friend auto operator<=>(const LatticePath3D&, const LatticePath3D&) = default;
  friend bool operator==(const LatticePath3D&, const LatticePath3D&) = default;
};

/// Throws Error{InvalidDominance} for words outside the dominance region or
/// with letters other than X, Y, Z.
StandardTableau3 tableau_from_lattice_path(const LatticePath3D& path);
LatticePath3D lattice_path_from_tableau(const StandardTableau3& t);

void for_each_tableau(int n, const std::function<void(const StandardTableau3&)>& visit);
std::uint64_t count_tableaux(int n);
/// Sorted.
std::vector<StandardTableau3> enumerate_tableaux(int n);

/// Entry e -> 3n+1-e, then 180 degree rotation.
StandardTableau3 schutzenberger(const StandardTableau3& t);

/// Rows of `rhs` appended after those of `lhs`, shifted by 3 * lhs.size().
StandardTableau3 shifted_concat(const StandardTableau3& lhs, const StandardTableau3& rhs);

/// Coproduct inputs, product left inputs and product right inputs of the
/// depth-left-first wire labelling, one category per row.
StandardTableau3 le(const Prograph& p);

/// Rebuilds the prograph from a tableau by replaying labels 1..3n.
Prograph le_inverse(const StandardTableau3& t);

/// Same reconstruction driven by a raw row word (X = row 0, Y = row 1,
/// Z = row 2). Throws StackUnderflow or ResidualStack for words that no
/// standard tableau produces.
Prograph le_inverse_word(std::string_view row_word);

}  // namespace pcp
