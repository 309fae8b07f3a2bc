#include "pcp/prograph.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <mutex>
#include <set>
#include <thread>

#include "pcp/error.hpp"
#include "pcp/limits.hpp"

namespace pcp {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::MalformedPrograph, why);
}

struct Structure {
  std::span<const OperatorKind> kinds;
  std::span<const Wire> wires;
  std::span<const std::array<int, 2>> inputs;
  std::span<const std::array<int, 2>> outputs;
  int input_wire;
  int output_wire;
};

// Depth-left-first walk over wires. Coproducts are labelled on entry and the
// walk continues on their left output; a product's left input suspends the
// walk, which resumes from the most recent pending right branch; a product
// is labelled when its right input arrives.
TraversalLabels traverse(const Structure& g) {
  const auto n_wires = g.wires.size();
  const auto n_nodes = g.kinds.size();
  TraversalLabels labels;
  labels.wire_label.assign(n_wires, 0);
  labels.op_label.assign(n_nodes, 0);
  labels.op_order.reserve(n_nodes);

  std::vector<char> left_arrived(n_nodes, 0);
  std::vector<int> branches;
  int next_wire_label = 1;
  int current = g.input_wire;

  while (current != g.output_wire) {
    if (labels.wire_label[current] != 0) malformed("wire visited twice (cycle)");
    labels.wire_label[current] = next_wire_label++;
    const Endpoint to = g.wires[current].target;
    const int node = to.node;
    if (g.kinds[node] == OperatorKind::Coproduct) {
      labels.op_order.push_back(node);
      labels.op_label[node] = static_cast<int>(labels.op_order.size());
      branches.push_back(g.outputs[node][1]);
      current = g.outputs[node][0];
    } else if (to.port == 0) {
      left_arrived[node] = 1;
      if (branches.empty()) malformed("no pending branch after a product's left input");
      current = branches.back();
      branches.pop_back();
    } else {
      if (!left_arrived[node]) malformed("product reached on its right input before its left input");
      labels.op_order.push_back(node);
      labels.op_label[node] = static_cast<int>(labels.op_order.size());
      current = g.outputs[node][0];
    }
  }
  if (!branches.empty()) malformed("traversal ended with pending branches");
  if (labels.op_order.size() != n_nodes ||
      next_wire_label != static_cast<int>(n_wires)) {
    malformed("traversal did not reach every wire (disconnected graph)");
  }
  return labels;
}

// Replays operators in label order on the frontier and records their slots.
// Fails when a product's inputs are not adjacent in left-to-right order.
MoveSequence replay(const Structure& g, const TraversalLabels& labels) {
  MoveSequence moves;
  moves.reserve(labels.op_order.size());
  std::vector<int> frontier{g.input_wire};
  for (int node : labels.op_order) {
    const auto& in = g.inputs[node];
    const auto it = std::find(frontier.begin(), frontier.end(), in[0]);
    if (it == frontier.end()) malformed("operator input not on the frontier");
    const int slot = static_cast<int>(it - frontier.begin());
    if (g.kinds[node] == OperatorKind::Coproduct) {
      *it = g.outputs[node][1];
      frontier.insert(frontier.begin() + slot, g.outputs[node][0]);
      moves.push_back(coproduct_at(slot));
    } else {
      if (slot + 1 >= static_cast<int>(frontier.size()) ||
          frontier[slot + 1] != in[1]) {
        malformed("product inputs are not adjacent on the frontier (crossing)");
      }
      frontier.erase(frontier.begin() + slot + 1);
      frontier[slot] = g.outputs[node][0];
      moves.push_back(product_at(slot));
    }
  }
  if (frontier.size() != 1 || frontier.front() != g.output_wire) {
    malformed("frontier does not close on the global output");
  }
  return moves;
}

}  // namespace

std::string to_string(std::span<const Move> moves) {
  std::string out;
  for (const Move& m : moves) {
    if (!out.empty()) out += ' ';
    out += m.kind == OperatorKind::Coproduct ? 'c' : 'p';
    out += '@';
    out += std::to_string(m.slot);
  }
  return out;
}

MoveSequence parse_moves(std::string_view text) {
  MoveSequence moves;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if ((text[i] != 'c' && text[i] != 'p') || i + 2 >= text.size() ||
        text[i + 1] != '@') {
      throw Error(ErrorCode::ParseError, "expected c@K or p@K", start);
    }
    const OperatorKind kind = text[i] == 'c' ? OperatorKind::Coproduct : OperatorKind::Product;
    int slot = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i + 2, text.data() + text.size(), slot);
    if (ec != std::errc{}) throw Error(ErrorCode::ParseError, "expected slot digits", i + 2);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && text[i] != ' ') {
      throw Error(ErrorCode::ParseError, "unexpected character", i);
    }
    moves.push_back({kind, slot});
  }
  return moves;
}

Prograph::Prograph() : wires_{Wire{}}, input_wire_(0), output_wire_(0) {}

Prograph Prograph::from_graph(std::vector<OperatorKind> kinds, std::vector<Wire> wires) {
  Prograph p;
  const int n_nodes = static_cast<int>(kinds.size());
  const int n_wires = static_cast<int>(wires.size());
  p.kinds_ = std::move(kinds);
  p.wires_ = std::move(wires);
  p.inputs_.assign(n_nodes, {-1, -1});
  p.outputs_.assign(n_nodes, {-1, -1});

  int coproducts = 0;
  for (OperatorKind k : p.kinds_) coproducts += k == OperatorKind::Coproduct;
  if (2 * coproducts != n_nodes) malformed("coproduct and product counts differ");
  if (n_wires != 3 * coproducts + 1) malformed("wire count is not 3n+1");

  int input_wire = -1;
  int output_wire = -1;
  for (int w = 0; w < n_wires; ++w) {
    const auto [src, dst] = p.wires_[w];
    if (src.is_boundary()) {
      if (input_wire != -1) malformed("more than one global input wire");
      input_wire = w;
    } else {
      if (src.node < 0 || src.node >= n_nodes) malformed("wire source out of range");
      if (src.port < 0 || src.port >= output_arity(p.kinds_[src.node])) malformed("bad output port");
      int& slot = p.outputs_[src.node][src.port];
      if (slot != -1) malformed("output port wired twice");
      slot = w;
    }
    if (dst.is_boundary()) {
      if (output_wire != -1) malformed("more than one global output wire");
      output_wire = w;
    } else {
      if (dst.node < 0 || dst.node >= n_nodes) malformed("wire target out of range");
      if (dst.port < 0 || dst.port >= input_arity(p.kinds_[dst.node])) malformed("bad input port");
      int& slot = p.inputs_[dst.node][dst.port];
      if (slot != -1) malformed("input port wired twice");
      slot = w;
    }
  }
  if (input_wire == -1 || output_wire == -1) malformed("missing global input or output");
  for (int v = 0; v < n_nodes; ++v) {
    for (int k = 0; k < input_arity(p.kinds_[v]); ++k) {
      if (p.inputs_[v][k] == -1) malformed("unwired input port");
    }
    for (int k = 0; k < output_arity(p.kinds_[v]); ++k) {
      if (p.outputs_[v][k] == -1) malformed("unwired output port");
    }
  }
  p.input_wire_ = input_wire;
  p.output_wire_ = output_wire;

  const Structure g{p.kinds_, p.wires_, p.inputs_, p.outputs_, input_wire, output_wire};
  p.canonical_ = replay(g, traverse(g));
  return p;
}

std::size_t hash_value(const Prograph& p) noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Move& m : p.canonical_moves()) {
    const std::size_t token = (static_cast<std::size_t>(m.slot) << 1) |
                              (m.kind == OperatorKind::Product ? 1U : 0U);
    h ^= token + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Prograph apply_moves(std::span<const Move> moves) {
  std::vector<OperatorKind> kinds;
  std::vector<Wire> wires{Wire{}};
  std::vector<int> frontier{0};
  kinds.reserve(moves.size());
  wires.reserve(1 + 3 * moves.size() / 2);

  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move m = moves[i];
    const int width = static_cast<int>(frontier.size());
    const int node = static_cast<int>(kinds.size());
    if (m.kind == OperatorKind::Coproduct) {
      if (m.slot < 0 || m.slot >= width) {
        throw Error(ErrorCode::SlotOutOfRange,
                    "coproduct slot " + std::to_string(m.slot) + " on width " + std::to_string(width), i);
      }
      kinds.push_back(OperatorKind::Coproduct);
      wires[frontier[m.slot]].target = {node, 0};
      const int left = static_cast<int>(wires.size());
      wires.push_back({{node, 0}, {}});
      wires.push_back({{node, 1}, {}});
      frontier[m.slot] = left + 1;
      frontier.insert(frontier.begin() + m.slot, left);
    } else {
      if (width < 2) throw Error(ErrorCode::ProductOnWidthOne, "product needs two open wires", i);
      if (m.slot < 0 || m.slot > width - 2) {
        throw Error(ErrorCode::SlotOutOfRange,
                    "product slot " + std::to_string(m.slot) + " on width " + std::to_string(width), i);
      }
      kinds.push_back(OperatorKind::Product);
      wires[frontier[m.slot]].target = {node, 0};
      wires[frontier[m.slot + 1]].target = {node, 1};
      const int out = static_cast<int>(wires.size());
      wires.push_back({{node, 0}, {}});
      frontier.erase(frontier.begin() + m.slot + 1);
      frontier[m.slot] = out;
    }
  }
  if (frontier.size() != 1) {
    throw Error(ErrorCode::UnbalancedSequence,
                "final frontier width " + std::to_string(frontier.size()) + " (expected 1)");
  }
  wires[frontier.front()].target = {};
  return Prograph::from_graph(std::move(kinds), std::move(wires));
}

TraversalLabels depth_left_traversal(const Prograph& p) {
  std::vector<std::array<int, 2>> inputs(p.kinds().size());
  std::vector<std::array<int, 2>> outputs(p.kinds().size());
  for (std::size_t v = 0; v < p.kinds().size(); ++v) {
    const int node = static_cast<int>(v);
    inputs[v] = {p.input_of(node, 0), p.input_of(node, 1)};
    outputs[v] = {p.output_of(node, 0), p.output_of(node, 1)};
  }
  return traverse({p.kinds(), p.wires(), inputs, outputs, p.input_wire(), p.output_wire()});
}

MoveSequence canonical_move_sequence(const Prograph& p) { return p.canonical_moves(); }

Prograph schutzenberger(const Prograph& p) {
  std::vector<OperatorKind> kinds(p.kinds().begin(), p.kinds().end());
  for (auto& k : kinds) k = opposite(k);
  // A binary side of a node becomes the binary side of its rotated image,
  // with left and right exchanged.
  const auto mirror = [&](Endpoint e, bool was_output) -> Endpoint {
    if (e.is_boundary()) return e;
    const OperatorKind before = p.kinds()[e.node];
    const int arity = was_output ? output_arity(before) : input_arity(before);
    return {e.node, arity == 2 ? 1 - e.port : 0};
  };
  std::vector<Wire> wires;
  wires.reserve(p.wires().size());
  for (const Wire& w : p.wires()) {
    wires.push_back({mirror(w.target, false), mirror(w.source, true)});
  }
  return Prograph::from_graph(std::move(kinds), std::move(wires));
}

Prograph stack(const Prograph& lower, const Prograph& upper) {
  std::vector<OperatorKind> kinds(lower.kinds().begin(), lower.kinds().end());
  kinds.insert(kinds.end(), upper.kinds().begin(), upper.kinds().end());
  const int offset = static_cast<int>(lower.kinds().size());
  const auto shift = [offset](Endpoint e) {
    return e.is_boundary() ? e : Endpoint{e.node + offset, e.port};
  };

  std::vector<Wire> wires;
  wires.reserve(lower.wires().size() + upper.wires().size() - 1);
  for (int w = 0; w < static_cast<int>(lower.wires().size()); ++w) {
    if (w != lower.output_wire()) wires.push_back(lower.wires()[w]);
  }
  const Endpoint joint_source = lower.wires()[lower.output_wire()].source;
  for (int w = 0; w < static_cast<int>(upper.wires().size()); ++w) {
    Wire wire{shift(upper.wires()[w].source), shift(upper.wires()[w].target)};
    if (w == upper.input_wire()) wire.source = joint_source;
    wires.push_back(wire);
  }
  return Prograph::from_graph(std::move(kinds), std::move(wires));
}

namespace {

void extend_moves(MoveSequence& prefix, int width, int coproducts_left, int products_left,
                  const std::function<void(const MoveSequence&)>& visit) {
  if (coproducts_left == 0 && products_left == 0) {
    if (width == 1) visit(prefix);
    return;
  }
  if (coproducts_left > 0) {
    for (int k = 0; k < width; ++k) {
      prefix.push_back(coproduct_at(k));
      extend_moves(prefix, width + 1, coproducts_left - 1, products_left, visit);
      prefix.pop_back();
    }
  }
  if (products_left > 0 && width >= 2) {
    for (int k = 0; k + 1 < width; ++k) {
      prefix.push_back(product_at(k));
      extend_moves(prefix, width - 1, coproducts_left, products_left - 1, visit);
      prefix.pop_back();
    }
  }
}

}  // namespace

void for_each_move_sequence(int n, const std::function<void(const MoveSequence&)>& visit) {
  MoveSequence prefix;
  prefix.reserve(2 * static_cast<std::size_t>(n));
  extend_moves(prefix, 1, n, n, visit);
}

std::vector<Prograph> enumerate_prographs_oracle(int n, unsigned threads) {
  check_size(n, "enumerate_prographs_oracle");
  if (n == 0) return {Prograph{}};

  // Split on the first few moves; each worker completes its prefixes.
  const int split_depth = std::min(2 * n, 4);
  std::vector<MoveSequence> prefixes;
  {
    MoveSequence prefix;
    const std::function<void(MoveSequence&, int, int, int)> grow =
        [&](MoveSequence& seq, int width, int c_left, int p_left) {
          if (static_cast<int>(seq.size()) == split_depth) {
            prefixes.push_back(seq);
            return;
          }
          for (int k = 0; c_left > 0 && k < width; ++k) {
            seq.push_back(coproduct_at(k));
            grow(seq, width + 1, c_left - 1, p_left);
            seq.pop_back();
          }
          for (int k = 0; p_left > 0 && k + 1 < width; ++k) {
            seq.push_back(product_at(k));
            grow(seq, width - 1, c_left, p_left - 1);
            seq.pop_back();
          }
        };
    grow(prefix, 1, n, n);
  }

  std::set<MoveSequence> canonical;
  std::mutex merge;
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    std::set<MoveSequence> local;
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      MoveSequence seq = prefixes[i];
      int width = 1;
      int c_left = n;
      int p_left = n;
      for (const Move& m : seq) {
        if (m.kind == OperatorKind::Coproduct) {
          ++width;
          --c_left;
        } else {
          --width;
          --p_left;
        }
      }
      extend_moves(seq, width, c_left, p_left, [&](const MoveSequence& full) {
        local.insert(apply_moves(full).canonical_moves());
      });
    }
    std::lock_guard lock(merge);
    canonical.merge(local);
  };

  const unsigned workers = std::max(1U, threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  std::vector<Prograph> out;
  out.reserve(canonical.size());
  for (const auto& seq : canonical) out.push_back(apply_moves(seq));
  return out;
}

}  // namespace pcp
