#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcp {

enum class OperatorKind : std::uint8_t { Coproduct, Product };

constexpr OperatorKind opposite(OperatorKind k) noexcept {
  return k == OperatorKind::Coproduct ? OperatorKind::Product
                                      : OperatorKind::Coproduct;
}
constexpr int input_arity(OperatorKind k) noexcept {
  return k == OperatorKind::Coproduct ? 1 : 2;
}
constexpr int output_arity(OperatorKind k) noexcept {
  return k == OperatorKind::Coproduct ? 2 : 1;
}

/// One grafting step on the frontier. A coproduct at `slot` splits frontier
/// wire `slot`; a product at `slot` joins frontier wires `slot` and `slot+1`.
struct Move {
  OperatorKind kind = OperatorKind::Coproduct;
  int slot = 0;

  friend auto operator<=>(const Move&, const Move&) = default;
};

constexpr Move coproduct_at(int slot) noexcept { return {OperatorKind::Coproduct, slot}; }
constexpr Move product_at(int slot) noexcept { return {OperatorKind::Product, slot}; }

using MoveSequence = std::vector<Move>;

/// `c@K` / `p@K` tokens separated by single spaces.
std::string to_string(std::span<const Move> moves);
MoveSequence parse_moves(std::string_view text);

/// Node id used by endpoints attached to the global input or output.
inline constexpr int kBoundary = -1;

struct Endpoint {
  int node = kBoundary;
  int port = 0;

  bool is_boundary() const noexcept { return node == kBoundary; }
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

/// Directed bottom-to-top: `source` is an output port (or the global input),
/// `target` an input port (or the global output).
struct Wire {
  Endpoint source;
  Endpoint target;
};

/// A product-coproduct prograph stored as an explicit plane graph.
///
/// Every instance is validated on construction and carries its canonical
/// move sequence; equality, ordering and hashing go through that sequence,
/// so node ids and wire ids carry no meaning.
class Prograph {
 public:
  /// The empty prograph: a single wire from global input to global output.
  Prograph();

  /// Validates port arities, connectivity and planarity. Throws
  /// Error{MalformedPrograph} on any violation.
  static Prograph from_graph(std::vector<OperatorKind> kinds,
                             std::vector<Wire> wires);

  /// Number of coproducts (equals the number of products).
  int size() const noexcept { return static_cast<int>(kinds_.size()) / 2; }
  bool empty() const noexcept { return kinds_.empty(); }

  std::span<const OperatorKind> kinds() const noexcept { return kinds_; }
  std::span<const Wire> wires() const noexcept { return wires_; }
  int input_wire() const noexcept { return input_wire_; }
  int output_wire() const noexcept { return output_wire_; }
  int input_of(int node, int port) const { return inputs_.at(node)[port]; }
  int output_of(int node, int port) const { return outputs_.at(node)[port]; }

  const MoveSequence& canonical_moves() const noexcept { return canonical_; }

  friend bool operator==(const Prograph& a, const Prograph& b) {
    return a.canonical_ == b.canonical_;
  }
  friend std::strong_ordering operator<=>(const Prograph& a, const Prograph& b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  std::vector<OperatorKind> kinds_;
  std::vector<Wire> wires_;
  std::vector<std::array<int, 2>> inputs_;
  std::vector<std::array<int, 2>> outputs_;
  int input_wire_ = 0;
  int output_wire_ = 0;
  MoveSequence canonical_;
};

std::size_t hash_value(const Prograph& p) noexcept;

/// Depth-left-first labels. Wire labels run 1..3n (0 on the global output
/// wire); operator labels run 1..2n.
struct TraversalLabels {
  std::vector<int> wire_label;  // by wire id
  std::vector<int> op_label;    // by node id
  std::vector<int> op_order;    // node ids in label order
};

/// Builds the prograph obtained by grafting each move on the frontier.
/// Throws SlotOutOfRange, ProductOnWidthOne or UnbalancedSequence.
Prograph apply_moves(std::span<const Move> moves);

TraversalLabels depth_left_traversal(const Prograph& p);

MoveSequence canonical_move_sequence(const Prograph& p);

/// 180 degree rotation: reverse wires, swap coproducts and products, mirror
/// port order.
Prograph schutzenberger(const Prograph& p);

/// Grafts the output of `lower` onto the input of `upper`.
Prograph stack(const Prograph& lower, const Prograph& upper);

/// Brute force: every valid move sequence of length 2n, deduplicated by
/// canonical form, sorted. Work is split across `threads` workers.
std::vector<Prograph> enumerate_prographs_oracle(int n, unsigned threads = 1);

/// Every move sequence of length 2n that keeps the frontier width >= 1 and
/// ends at width 1, in lexicographic order. Used by the oracle and by tests.
void for_each_move_sequence(int n, const std::function<void(const MoveSequence&)>& visit);

}  // namespace pcp

template <>
struct std::hash<pcp::Prograph> {
  std::size_t operator()(const pcp::Prograph& p) const noexcept {
    return pcp::hash_value(p);
  }
};
