#include "pcp/treebij.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "pcp/error.hpp"
#include "pcp/wpath.hpp"

namespace pcp {

ParkingFunctionND ParkingFunctionND::from_values(std::vector<int> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int v = values[i];
    if (v < 0 || v > static_cast<int>(i)) {
      throw Error(ErrorCode::InvalidParkingFunction, "need 0 <= f(i) <= i-1", i);
    }
    if (i > 0 && v < values[i - 1]) {
      throw Error(ErrorCode::InvalidParkingFunction, "values must be non-decreasing", i);
    }
  }
  ParkingFunctionND f;
  f.values_ = std::move(values);
  return f;
}

std::string to_string(const ParkingFunctionND& f) {
  std::string out;
  for (int i = 0; i < f.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(f.values()[i]);
  }
  return out;
}

ParkingFunctionND parse_parking_function(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == text.data() + i) {
      throw Error(ErrorCode::ParseError, "expected an integer", i);
    }
    values.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i == text.size()) break;
    if (text[i] != ',') throw Error(ErrorCode::ParseError, "expected ','", i);
    if (++i == text.size()) throw Error(ErrorCode::ParseError, "trailing ','", i);
  }
  return ParkingFunctionND::from_values(std::move(values));
}

std::vector<ParkingFunctionND> enumerate_parking_functions(int n) {
  std::vector<ParkingFunctionND> out;
  std::vector<int> values;
  const std::function<void()> grow = [&] {
    const int i = static_cast<int>(values.size());
    if (i == n) {
      out.push_back(ParkingFunctionND::from_values(values));
      return;
    }
    for (int v = values.empty() ? 0 : values.back(); v <= i; ++v) {
      values.push_back(v);
      grow();
      values.pop_back();
    }
  };
  grow();
  return out;
}

PlanarBinaryTree PlanarBinaryTree::from_nodes(std::vector<Node> nodes) {
  const int n = static_cast<int>(nodes.size());
  int expected = 0;
  const std::function<void(int)> walk = [&](int id) {
    if (id != expected) throw Error(ErrorCode::ParseError, "node ids must follow preorder");
    ++expected;
    for (int child : {nodes[id].left, nodes[id].right}) {
      if (child == -1) continue;
      if (child < 0 || child >= n) throw Error(ErrorCode::ParseError, "child id out of range");
      walk(child);
    }
  };
  if (n > 0) walk(0);
  if (expected != n) throw Error(ErrorCode::ParseError, "tree is not connected");
  PlanarBinaryTree t;
  t.nodes_ = std::move(nodes);
  return t;
}

std::string to_string(const PlanarBinaryTree& t) {
  std::string out;
  const std::function<void(int)> emit = [&](int id) {
    if (id == -1) {
      out += '.';
      return;
    }
    out += '(';
    emit(t.node(id).left);
    out += ")(";
    emit(t.node(id).right);
    out += ')';
  };
  emit(t.size() == 0 ? -1 : 0);
  return out;
}

PlanarBinaryTree parse_tree(std::string_view text) {
  std::vector<PlanarBinaryTree::Node> nodes;
  std::size_t i = 0;
  const auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c) {
      throw Error(ErrorCode::ParseError, std::string("expected '") + c + "'", i);
    }
    ++i;
  };
  const std::function<int()> subtree = [&]() -> int {
    if (i < text.size() && text[i] == '.') {
      ++i;
      return -1;
    }
    const int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    expect('(');
    const int left = subtree();
    expect(')');
    expect('(');
    const int right = subtree();
    expect(')');
    nodes[id] = {left, right};
    return id;
  };
  subtree();
  if (i != text.size()) throw Error(ErrorCode::ParseError, "trailing characters", i);
  return PlanarBinaryTree::from_nodes(std::move(nodes));
}

int rise_statistic(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  for (int j = 1; j < n; ++j) {
    if (word[j - 1] < word[j]) return n - j;
  }
  return 0;
}

ParkingFunctionND pf_from_perm123(const Permutation& p) {
  if (contains_pattern(p.word(), Permutation::from_word({1, 2, 3}))) {
    throw Error(ErrorCode::PatternViolation, "permutation contains 123");
  }
  std::vector<int> values;
  std::vector<int> restricted;
  for (int i = 1; i <= p.size(); ++i) {
    restricted.clear();
    for (int v : p.word()) {
      if (v <= i) restricted.push_back(v);
    }
    values.push_back(rise_statistic(restricted));
  }
  return ParkingFunctionND::from_values(std::move(values));
}

Permutation perm123_from_pf(const ParkingFunctionND& f) {
  std::vector<int> word;
  for (int i = 1; i <= f.size(); ++i) {
    if (f(i) == rise_statistic(word)) {
      word.insert(word.begin(), i);
      continue;
    }
    std::size_t prefix = word.empty() ? 0 : 1;
    while (prefix < word.size() && word[prefix] < word[prefix - 1]) ++prefix;
    const int position = i - f(i) + 1;  // 1-based
    if (position < 2 || position > static_cast<int>(prefix) + 1) {
      throw Error(ErrorCode::InvalidParkingFunction,
                  "insertion position " + std::to_string(position) + " outside the decreasing prefix",
                  static_cast<std::size_t>(i - 1));
    }
    word.insert(word.begin() + (position - 1), i);
  }
  return Permutation::from_word(std::move(word));
}

namespace {

struct Slot {
  int parent;  // -1 for the root position
  bool right;
  friend bool operator==(const Slot&, const Slot&) = default;
};

}  // namespace

PlanarBinaryTree tree_from_pf(const ParkingFunctionND& f) {
  std::vector<PlanarBinaryTree::Node> nodes(f.size());
  std::vector<Slot> slots{{-1, false}};
  for (int id = 0; id < f.size(); ++id) {
    const int index = f.values()[id];
    if (index < 0 || index >= static_cast<int>(slots.size())) {
      throw Error(ErrorCode::SlotIndexOutOfRange, "no free slot at index " + std::to_string(index), id);
    }
    const Slot s = slots[index];
    if (s.parent != -1) (s.right ? nodes[s.parent].right : nodes[s.parent].left) = id;
    slots[index] = {id, true};
    slots.insert(slots.begin() + index, Slot{id, false});
  }
  return PlanarBinaryTree::from_nodes(std::move(nodes));
}

ParkingFunctionND pf_from_tree(const PlanarBinaryTree& t) {
  std::vector<Slot> where(t.size(), Slot{-1, false});
  for (int id = 0; id < t.size(); ++id) {
    if (t.node(id).left != -1) where[t.node(id).left] = {id, false};
    if (t.node(id).right != -1) where[t.node(id).right] = {id, true};
  }
  std::vector<Slot> slots{{-1, false}};
  std::vector<int> values;
  for (int id = 0; id < t.size(); ++id) {
    const auto it = std::find(slots.begin(), slots.end(), where[id]);
    if (it == slots.end()) {
      throw Error(ErrorCode::SlotIndexOutOfRange, "node does not sit on a free slot", id);
    }
    const auto index = it - slots.begin();
    values.push_back(static_cast<int>(index));
    *it = {id, true};
    slots.insert(slots.begin() + index, Slot{id, false});
  }
  return ParkingFunctionND::from_values(std::move(values));
}

Permutation single_peak_to_perm(const Prograph& p) {
  const WeightedDyckPath path = dw(p);
  const int n = p.size();
  std::vector<int> rises;
  std::vector<int> descents;
  for (int i = 0; i < 2 * n; ++i) {
    const WeightedStep s = path.steps[i];
    if ((s.direction == Direction::Up) != (i < n)) {
      throw Error(ErrorCode::NotSinglePeak, "weighted path is not U^n D^n: " + to_string(path));
    }
    (i < n ? rises : descents).push_back(s.weight);
  }
  std::reverse(descents.begin(), descents.end());
  const Permutation valleys = perm123_from_pf(ParkingFunctionND::from_values(std::move(rises)));
  // The product half is read from the top, so its word comes out rotated.
  const Permutation peaks =
      schutzenberger(perm123_from_pf(ParkingFunctionND::from_values(std::move(descents))));
  std::vector<int> word;
  for (int i = 0; i < n; ++i) {
    word.push_back(valleys[i]);
    word.push_back(peaks[i] + n);
  }
  return Permutation::from_word(std::move(word));
}

Prograph perm_to_single_peak(const Permutation& p) {
  if (!in_A2n(p)) throw Error(ErrorCode::NotInFamily, "expected an up-down permutation avoiding 1234");
  const int n = p.size() / 2;
  const PeakValleyView view = peak_valley_view(p);
  if (n > 0 && *std::max_element(view.vals.begin(), view.vals.end()) > n) {
    throw Error(ErrorCode::ValleysNotInitialSegment, "valleys are not {1..n}: " + to_string(p));
  }
  std::vector<int> peaks = view.peaks;
  for (int& v : peaks) v -= n;
  const ParkingFunctionND rises = pf_from_perm123(Permutation::from_word(view.vals));
  const ParkingFunctionND descents =
      pf_from_perm123(schutzenberger(Permutation::from_word(std::move(peaks))));

  WeightedDyckPath path;
  for (int d : rises.values()) path.steps.push_back(up(d));
  for (int i = n - 1; i >= 0; --i) path.steps.push_back(down(descents.values()[i]));
  return dw_inverse(path);
}

}  // namespace pcp
