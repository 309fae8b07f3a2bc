#include "pcp/expr.hpp"

#include <array>

#include "pcp/error.hpp"

namespace pcp {

namespace {

constexpr int generator_inputs(Generator g) { return g == Generator::Product ? 2 : 1; }
constexpr int generator_outputs(Generator g) { return g == Generator::Coproduct ? 2 : 1; }

enum class Tok : std::uint8_t { Coproduct, Product, Identity, Tensor, Compose, Open, Close, End };

struct Token {
  Tok kind;
  std::size_t offset;
};

struct Alias {
  std::string_view spelling;
  Tok kind;
};

// Longest spellings first so "Id" is not read as something else.
constexpr std::array<Alias, 12> kAliases{{
    {"\xE2\x88\x98", Tok::Compose},    // U+2218 RING OPERATOR
    {"\xE2\x8A\x97", Tok::Tensor},     // U+2297 CIRCLED TIMES
    {"\xE2\x8B\x85", Tok::Product},    // U+22C5 DOT OPERATOR
    {"\xCE\x94", Tok::Coproduct},      // U+0394 GREEK CAPITAL DELTA
    {"\xC2\xB7", Tok::Product},        // U+00B7 MIDDLE DOT
    {"Id", Tok::Identity},
    {"d", Tok::Coproduct},
    {"m", Tok::Product},
    {"i", Tok::Identity},
    {"x", Tok::Tensor},
    {"o", Tok::Compose},
    {"(", Tok::Open},
}};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == ')') {
      tokens.push_back({Tok::Close, i++});
      continue;
    }
    bool matched = false;
    for (const Alias& a : kAliases) {
      if (text.substr(i, a.spelling.size()) == a.spelling) {
        tokens.push_back({a.kind, i});
        i += a.spelling.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw Error(ErrorCode::SyntaxError, "unexpected character", i);
  }
  tokens.push_back({Tok::End, text.size()});
  return tokens;
}

struct Parser {
  std::vector<Token> tokens;
  std::size_t at = 0;

  const Token& peek() const { return tokens[at]; }

  void factor(Layer& layer) {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Coproduct: layer.factors.push_back(Generator::Coproduct); ++at; return;
      case Tok::Product: layer.factors.push_back(Generator::Product); ++at; return;
      case Tok::Identity: layer.factors.push_back(Generator::Identity); ++at; return;
      case Tok::Open: {
        ++at;
        parse_layer(layer);
        if (peek().kind != Tok::Close) {
          throw Error(ErrorCode::SyntaxError, "expected ')'", peek().offset);
        }
        ++at;
        return;
      }
      default:
        throw Error(ErrorCode::SyntaxError, "expected d, m, i or '('", t.offset);
    }
  }

  void parse_layer(Layer& layer) {
    factor(layer);
    while (peek().kind == Tok::Tensor) {
      ++at;
      factor(layer);
    }
  }
};

}  // namespace

int Layer::inputs() const noexcept {
  int n = 0;
  for (Generator g : factors) n += generator_inputs(g);
  return n;
}

int Layer::outputs() const noexcept {
  int n = 0;
  for (Generator g : factors) n += generator_outputs(g);
  return n;
}

Expression parse_expression(std::string_view text) {
  Parser parser{tokenize(text)};
  Expression e;
  std::vector<std::size_t> compose_offsets;
  e.layers.emplace_back();
  parser.parse_layer(e.layers.back());
  while (parser.peek().kind == Tok::Compose) {
    compose_offsets.push_back(parser.peek().offset);
    ++parser.at;
    e.layers.emplace_back();
    parser.parse_layer(e.layers.back());
  }
  if (parser.peek().kind != Tok::End) {
    throw Error(ErrorCode::SyntaxError, "expected 'o', 'x' or end of input", parser.peek().offset);
  }

  for (std::size_t k = 0; k + 1 < e.layers.size(); ++k) {
    const Layer& upper = e.layers[k];
    const Layer& lower = e.layers[k + 1];
    if (lower.outputs() != upper.inputs()) {
      throw Error(ErrorCode::ArityMismatch,
                  "layer " + std::to_string(k + 2) + " produces " + std::to_string(lower.outputs()) +
                      " wires but layer " + std::to_string(k + 1) + " consumes " +
                      std::to_string(upper.inputs()),
                  compose_offsets[k]);
    }
  }
  if (e.layers.back().inputs() != 1 || e.layers.front().outputs() != 1) {
    throw Error(ErrorCode::BoundaryError,
                "expression maps " + std::to_string(e.layers.back().inputs()) + " wires to " +
                    std::to_string(e.layers.front().outputs()) + " (expected 1 to 1)");
  }
  return e;
}

void check_arity(const Expression& e) {
  if (e.layers.empty()) throw Error(ErrorCode::BoundaryError, "expression has no layers");
  for (std::size_t k = 0; k + 1 < e.layers.size(); ++k) {
    if (e.layers[k + 1].outputs() != e.layers[k].inputs()) {
      throw Error(ErrorCode::ArityMismatch, "between layers " + std::to_string(k + 1) + " and " +
                                                std::to_string(k + 2));
    }
  }
  if (e.layers.back().inputs() != 1 || e.layers.front().outputs() != 1) {
    throw Error(ErrorCode::BoundaryError, "expression is not a map from 1 wire to 1 wire");
  }
}

Prograph eval_expression(const Expression& e) {
  check_arity(e);
  // Factors of a layer act on consecutive frontier wires; after the factors
  // to the left have been grafted, the next one starts at `pos`.
  MoveSequence moves;
  for (auto layer = e.layers.rbegin(); layer != e.layers.rend(); ++layer) {
    int pos = 0;
    for (Generator g : layer->factors) {
      switch (g) {
        case Generator::Identity: pos += 1; break;
        case Generator::Coproduct: moves.push_back(coproduct_at(pos)); pos += 2; break;
        case Generator::Product: moves.push_back(product_at(pos)); pos += 1; break;
      }
    }
  }
  return apply_moves(moves);
}

namespace {

std::string layer_text(const std::vector<Generator>& factors) {
  const auto symbol = [](Generator g) {
    switch (g) {
      case Generator::Coproduct: return 'd';
      case Generator::Product: return 'm';
      case Generator::Identity: return 'i';
    }
    return '?';
  };
  if (factors.size() == 1) return std::string(1, symbol(factors.front()));
  std::string out = "(";
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (j > 0) out += " x ";
    out += symbol(factors[j]);
  }
  out += ')';
  return out;
}

}  // namespace

std::string to_string(const Expression& e) {
  std::string out;
  for (std::size_t k = 0; k < e.layers.size(); ++k) {
    if (k > 0) out += " o ";
    out += layer_text(e.layers[k].factors);
  }
  return out;
}

std::string print_canonical(const Prograph& p) {
  const MoveSequence& moves = p.canonical_moves();
  if (moves.empty()) return "i";
  std::vector<std::string> layers;
  int width = 1;
  for (const Move& m : moves) {
    std::vector<Generator> factors(m.slot, Generator::Identity);
    if (m.kind == OperatorKind::Coproduct) {
      factors.push_back(Generator::Coproduct);
      factors.resize(width, Generator::Identity);
      ++width;
    } else {
      factors.push_back(Generator::Product);
      factors.resize(width - 1, Generator::Identity);
      --width;
    }
    layers.push_back(layer_text(factors));
  }
  std::string out;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    if (!out.empty()) out += " o ";
    out += *it;
  }
  return out;
}

}  // namespace pcp
