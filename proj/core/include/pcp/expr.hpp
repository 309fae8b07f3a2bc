#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pcp/prograph.hpp"

namespace pcp {

enum class Generator : std::uint8_t { Coproduct, Product, Identity };

/// Tensor product of generators, read left to right.
struct Layer {
  std::vector<Generator> factors;

  int inputs() const noexcept;
  int outputs() const noexcept;
  friend bool operator==(const Layer&, const Layer&) = default;
};

/// Composition of layers; layers.front() is the topmost (applied last).
struct Expression {
  std::vector<Layer> layers;
  friend bool operator==(const Expression&, const Expression&) = default;
};

/// Grammar, whitespace-insensitive:
///   expr   := layer ('o' layer)*
///   layer  := factor ('x' factor)*
///   factor := 'd' | 'm' | 'i' | '(' layer ')'
/// Unicode aliases: Δ for d, · or ⋅ for m, Id for i, ⊗ for x, ∘ for o.
///
/// Throws SyntaxError (byte offset of the bad token), ArityMismatch (offset
/// of the offending composition operator) or BoundaryError.
Expression parse_expression(std::string_view text);

/// Throws ArityMismatch or BoundaryError for hand-built expressions.
void check_arity(const Expression& e);

/// Builds the prograph bottom-up, one layer at a time.
Prograph eval_expression(const Expression& e);

/// ASCII rendering of an expression as given (no normalisation).
std::string to_string(const Expression& e);

/// One generator per layer in canonical move order, topmost layer first.
/// The empty prograph prints as "i".
std::string print_canonical(const Prograph& p);

}  // namespace pcp
