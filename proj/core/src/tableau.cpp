#include "pcp/tableau.hpp"

#include <algorithm>
#include <charconv>

#include "pcp/error.hpp"
#include "pcp/limits.hpp"

namespace pcp {

BigInt catalan3(int n) {
  if (n < 0) throw Error(ErrorCode::SizeLimit, "catalan3 of a negative size");
  const auto factorial = [](int k) {
    BigInt r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  return 2 * factorial(3 * n) / (factorial(n) * factorial(n + 1) * factorial(n + 2));
}

StandardTableau3 StandardTableau3::from_rows(Row bottom, Row middle, Row top) {
  const auto bad = [](const std::string& why) { throw Error(ErrorCode::InvalidTableau, why); };
  const std::size_t n = bottom.size();
  if (middle.size() != n || top.size() != n) bad("rows must have equal length");

  StandardTableau3 t;
  t.rows_ = {std::move(bottom), std::move(middle), std::move(top)};
  std::vector<char> seen(3 * n + 1, 0);
  for (int r = 0; r < 3; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      const int e = t.rows_[r][j];
      if (e < 1 || e > static_cast<int>(3 * n)) bad("entry out of range 1..3n");
      if (seen[e]) bad("repeated entry " + std::to_string(e));
      seen[e] = 1;
      if (j > 0 && t.rows_[r][j - 1] >= e) bad("row does not strictly increase");
      if (r > 0 && t.rows_[r - 1][j] >= e) bad("column does not strictly increase");
    }
  }
  return t;
}

std::string to_string(const StandardTableau3& t) {
  std::string out;
  for (int r = 0; r < 3; ++r) {
    if (r > 0) out += ';';
    for (std::size_t j = 0; j < t.row(r).size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(t.row(r)[j]);
    }
  }
  return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::size_t offset) {
  std::vector<int> values;
  if (text.empty()) return values;
  std::size_t i = 0;
  while (true) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == text.data() + i) {
      throw Error(ErrorCode::ParseError, "expected an integer", offset + i);
    }
    values.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i == text.size()) break;
    if (text[i] != ',') throw Error(ErrorCode::ParseError, "expected ','", offset + i);
    ++i;
  }
  return values;
}

}  // namespace

StandardTableau3 parse_tableau(std::string_view text) {
  if (std::count(text.begin(), text.end(), ';') != 2) {
    throw Error(ErrorCode::ParseError, "expected three ';'-separated rows", 0);
  }
  std::array<std::vector<int>, 3> rows;
  std::size_t begin = 0;
  for (int r = 0; r < 3; ++r) {
    const std::size_t end = r < 2 ? text.find(';', begin) : text.size();
    rows[r] = parse_int_list(text.substr(begin, end - begin), begin);
    begin = end + 1;
  }
  return StandardTableau3::from_rows(std::move(rows[0]), std::move(rows[1]), std::move(rows[2]));
}

StandardTableau3 tableau_from_lattice_path(const LatticePath3D& path) {
  std::array<std::vector<int>, 3> rows;
  for (std::size_t i = 0; i < path.word.size(); ++i) {
    const char c = path.word[i];
    if (c < 'X' || c > 'Z') throw Error(ErrorCode::InvalidDominance, "letters must be X, Y or Z", i);
    const int r = c - 'X';
    rows[r].push_back(static_cast<int>(i) + 1);
    if ((r > 0 && rows[r].size() > rows[r - 1].size())) {
      throw Error(ErrorCode::InvalidDominance, "prefix leaves the region x >= y >= z", i);
    }
  }
  if (rows[0].size() != rows[2].size()) {
    throw Error(ErrorCode::InvalidDominance, "path does not end on the diagonal", path.word.size());
  }
  return StandardTableau3::from_rows(std::move(rows[0]), std::move(rows[1]), std::move(rows[2]));
}

LatticePath3D lattice_path_from_tableau(const StandardTableau3& t) {
  LatticePath3D path;
  path.word.assign(3 * static_cast<std::size_t>(t.size()), '?');
  for (int r = 0; r < 3; ++r) {
    for (int e : t.row(r)) path.word[e - 1] = static_cast<char>('X' + r);
  }
  return path;
}

void for_each_tableau(int n, const std::function<void(const StandardTableau3&)>& visit) {
  check_size(n, "for_each_tableau");
  LatticePath3D path;
  std::array<int, 3> counts{0, 0, 0};
  const std::function<void()> grow = [&] {
    if (counts[2] == n) {
      visit(tableau_from_lattice_path(path));
      return;
    }
    for (int r = 0; r < 3; ++r) {
      if (r == 0 ? counts[0] == n : counts[r] == counts[r - 1]) continue;
      ++counts[r];
      path.word.push_back(static_cast<char>('X' + r));
      grow();
      path.word.pop_back();
      --counts[r];
    }
  };
  grow();
}

std::uint64_t count_tableaux(int n) {
  std::uint64_t count = 0;
  for_each_tableau(n, [&](const StandardTableau3&) { ++count; });
  return count;
}

std::vector<StandardTableau3> enumerate_tableaux(int n) {
  std::vector<StandardTableau3> out;
  for_each_tableau(n, [&](const StandardTableau3& t) { out.push_back(t); });
  std::sort(out.begin(), out.end());
  return out;
}

StandardTableau3 schutzenberger(const StandardTableau3& t) {
  const int n = t.size();
  std::array<std::vector<int>, 3> rows;
  for (int r = 0; r < 3; ++r) {
    rows[r].resize(n);
    for (int j = 0; j < n; ++j) rows[r][j] = 3 * n + 1 - t.row(2 - r)[n - 1 - j];
  }
  return StandardTableau3::from_rows(std::move(rows[0]), std::move(rows[1]), std::move(rows[2]));
}

StandardTableau3 shifted_concat(const StandardTableau3& lhs, const StandardTableau3& rhs) {
  const int shift = 3 * lhs.size();
  std::array<std::vector<int>, 3> rows;
  for (int r = 0; r < 3; ++r) {
    rows[r] = lhs.row(r);
    for (int e : rhs.row(r)) rows[r].push_back(e + shift);
  }
  return StandardTableau3::from_rows(std::move(rows[0]), std::move(rows[1]), std::move(rows[2]));
}

StandardTableau3 le(const Prograph& p) {
  const TraversalLabels labels = depth_left_traversal(p);
  std::array<std::vector<int>, 3> rows;
  for (std::size_t w = 0; w < p.wires().size(); ++w) {
    const int label = labels.wire_label[w];
    if (label == 0) continue;
    const Endpoint to = p.wires()[w].target;
    const int r = p.kinds()[to.node] == OperatorKind::Coproduct ? 0 : 1 + to.port;
    rows[r].push_back(label);
  }
  for (auto& row : rows) std::sort(row.begin(), row.end());
  return StandardTableau3::from_rows(std::move(rows[0]), std::move(rows[1]), std::move(rows[2]));
}

Prograph le_inverse_word(std::string_view row_word) {
  std::vector<OperatorKind> kinds;
  std::vector<Wire> wires{Wire{}};
  std::vector<int> branches;   // pending right outputs of coproducts
  std::vector<int> suspended;  // products waiting for their right input
  int current = 0;

  for (std::size_t i = 0; i < row_word.size(); ++i) {
    const int node = static_cast<int>(kinds.size());
    switch (row_word[i]) {
      case 'X': {
        kinds.push_back(OperatorKind::Coproduct);
        wires[current].target = {node, 0};
        current = static_cast<int>(wires.size());
        wires.push_back({{node, 0}, {}});
        branches.push_back(static_cast<int>(wires.size()));
        wires.push_back({{node, 1}, {}});
        break;
      }
      case 'Y': {
        kinds.push_back(OperatorKind::Product);
        wires[current].target = {node, 0};
        suspended.push_back(node);
        if (branches.empty()) {
          throw Error(ErrorCode::StackUnderflow, "no pending branch for label " + std::to_string(i + 1), i);
        }
        current = branches.back();
        branches.pop_back();
        break;
      }
      case 'Z': {
        if (suspended.empty()) {
          throw Error(ErrorCode::StackUnderflow, "no suspended product for label " + std::to_string(i + 1), i);
        }
        const int product = suspended.back();
        suspended.pop_back();
        wires[current].target = {product, 1};
        current = static_cast<int>(wires.size());
        wires.push_back({{product, 0}, {}});
        break;
      }
      default:
        throw Error(ErrorCode::InvalidDominance, "row word letters must be X, Y or Z", i);
    }
  }
  if (!branches.empty() || !suspended.empty()) {
    throw Error(ErrorCode::ResidualStack, "labels exhausted with pending branches or products",
                row_word.size());
  }
  wires[current].target = {};
  return Prograph::from_graph(std::move(kinds), std::move(wires));
}

Prograph le_inverse(const StandardTableau3& t) {
  return le_inverse_word(lattice_path_from_tableau(t).word);
}

}  // namespace pcp
